use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// A finite acyclic quiver. Parallel arrows are allowed; oriented cycles
/// (including loops) are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    /// (source index, target index) per arrow, in input order.
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new<I, A>(vertices: I, arrows: A) -> Result<Arc<Quiver>>
    where
        I: IntoIterator,
        I::Item: Into<String>,
        A: IntoIterator<Item = (String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::MalformedQuiver("empty vertex id".to_owned()));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::MalformedQuiver(format!("duplicate vertex `{}`", v)));
            }
        }
        let mut arrow_idx = Vec::new();
        for (s, t) in arrows {
            let si = *index
                .get(&s)
                .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex `{}`", s)))?;
            let ti = *index
                .get(&t)
                .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex `{}`", t)))?;
            arrow_idx.push((si, ti));
        }
        let q = Quiver {
            vertices,
            arrows: arrow_idx,
        };
        if q.has_cycle() {
            return Err(Error::MalformedQuiver("oriented cycle".to_owned()));
        }
        Ok(Arc::new(q))
    }

    fn has_cycle(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen < n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownElement(id.to_owned()))
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Kronecker shape: two vertices joined by exactly two parallel arrows.
    pub fn is_kronecker(&self) -> bool {
        self.vertices.len() == 2
            && self.arrows.len() == 2
            && self.arrows[0] == self.arrows[1]
            && self.arrows[0].0 != self.arrows[0].1
    }

    /// If the underlying graph is a simple path visiting every vertex once
    /// (type A_n with any orientation), returns the vertex indices along the
    /// path.
    pub fn line_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        if self.arrows.len() + 1 != n {
            return None;
        }
        let mut deg = vec![0usize; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            if s == t {
                return None;
            }
            deg[s] += 1;
            deg[t] += 1;
            adj[s].push(t);
            adj[t].push(s);
        }
        if deg.iter().filter(|&&d| d == 1).count() != 2 || deg.iter().any(|&d| d > 2) {
            return None;
        }
        let start = (0..n).find(|&v| deg[v] == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < n {
            let next = *adj[cur].iter().find(|&&w| w != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}
