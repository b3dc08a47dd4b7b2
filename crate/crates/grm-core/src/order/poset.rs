use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::order::CompareResult;
use crate::Result;

/// Opaque element label, unique within a poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(id: impl Into<String>) -> Self {
        ElementId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ElementId {
    fn from(s: &str) -> Self {
        ElementId(s.to_owned())
    }
}

impl From<String> for ElementId {
    fn from(s: String) -> Self {
        ElementId(s)
    }
}

/// A finite partially ordered set.
///
/// Stored as the full reflexive-transitive closure plus the derived cover
/// relation. The element input order is kept; it is the deterministic
/// tie-break order used everywhere downstream.
#[derive(Debug, Clone)]
pub struct Poset {
    elements: Vec<ElementId>,
    index: HashMap<String, usize>,
    /// Row-major n×n closure: `leq[i*n+j]` iff element i ≤ element j.
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.leq == other.leq
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from an arbitrary relation. The relation is closed
    /// reflexively and transitively; the cover pairs are recomputed from the
    /// closure.
    pub fn from_relations<I, P>(elements: I, pairs: P) -> Result<Arc<Poset>>
    where
        I: IntoIterator,
        I::Item: Into<ElementId>,
        P: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let elements: Vec<ElementId> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if e.as_str().is_empty() {
                return Err(Error::EmptyElementId);
            }
            if index.insert(e.as_str().to_owned(), i).is_some() {
                return Err(Error::DuplicateElement(e.as_str().to_owned()));
            }
        }

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let i = *index
                .get(a.as_str())
                .ok_or_else(|| Error::UnknownElement(a.as_str().to_owned()))?;
            let j = *index
                .get(b.as_str())
                .ok_or_else(|| Error::UnknownElement(b.as_str().to_owned()))?;
            leq[i * n + j] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(
                        elements[i].as_str().to_owned(),
                        elements[j].as_str().to_owned(),
                    ));
                }
            }
        }

        let mut covers = Vec::new();
        for i in 0..n {
            'pair: for j in 0..n {
                if i == j || !leq[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if k != i && k != j && leq[i * n + k] && leq[k * n + j] {
                        continue 'pair;
                    }
                }
                covers.push((i, j));
            }
        }

        Ok(Arc::new(Poset {
            elements,
            index,
            leq,
            covers,
        }))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &ElementId {
        &self.elements[idx]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_owned()))
    }

    /// Cover pairs `(lower, upper)` as element indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        i != j && self.leq_idx(i, j)
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq_idx(self.index_of(a)?, self.index_of(b)?))
    }

    pub fn compare_elements(&self, i: usize, j: usize) -> CompareResult {
        match (self.leq_idx(i, j), self.leq_idx(j, i)) {
            (true, true) => CompareResult::Equal,
            (true, false) => CompareResult::LessThan,
            (false, true) => CompareResult::GreaterThan,
            (false, false) => CompareResult::Incomparable,
        }
    }

    /// Strict predecessors of `i` in element input order.
    pub fn strict_predecessors(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.lt_idx(j, i)).collect()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        (0..self.len()).all(|j| !self.lt_idx(j, i))
    }

    /// Indices in some topological order (predecessors before successors).
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Sorting by down-set size is a valid topological order in a poset.
        let down_size: Vec<usize> = (0..n)
            .map(|i| (0..n).filter(|&j| self.leq_idx(j, i)).count())
            .collect();
        order.sort_by_key(|&i| (down_size[i], i));
        order
    }

    /// Whether every pair of elements is comparable.
    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.leq_idx(i, j) || self.leq_idx(j, i)))
    }

    pub(crate) fn chain_indices(&self, chain: &Chain) -> Result<Vec<usize>> {
        let mut idx = Vec::with_capacity(chain.members().len());
        for m in chain.members() {
            idx.push(self.index_of(m.as_str())?);
        }
        for w in idx.windows(2) {
            if self.compare_elements(w[0], w[1]) != CompareResult::LessThan {
                return Err(Error::NotAChain(format!(
                    "`{}` and `{}` are not strictly ascending",
                    self.elements[w[0]], self.elements[w[1]]
                )));
            }
        }
        Ok(idx)
    }

    /// All chains of the poset whose maximum is `x`.
    ///
    /// Recursive extension: a chain with maximum `x` is `{x}` together with a
    /// (possibly empty) chain lying strictly below `x`; distinct second-largest
    /// elements give distinct chains, so no deduplication is needed.
    pub fn chains_ending_at(&self, x: &str) -> Result<Vec<Chain>> {
        let xi = self.index_of(x)?;
        let mut memo: Vec<Option<Vec<Vec<usize>>>> = vec![None; self.len()];
        let chains = self.chains_ending_at_idx(xi, &mut memo);
        let mut result: Vec<Chain> = chains
            .iter()
            .map(|c| Chain {
                members: c.iter().map(|&i| self.elements[i].clone()).collect(),
            })
            .collect();
        result.sort_by(|a, b| {
            (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members))
        });
        Ok(result)
    }

    fn chains_ending_at_idx(
        &self,
        x: usize,
        memo: &mut Vec<Option<Vec<Vec<usize>>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(cached) = &memo[x] {
            return cached.clone();
        }
        let mut out = vec![vec![x]];
        for y in self.strict_predecessors(x) {
            for mut chain in self.chains_ending_at_idx(y, memo) {
                chain.push(x);
                out.push(chain);
            }
        }
        memo[x] = Some(out.clone());
        out
    }
}

/// A finite chain: a strictly ascending sequence of pairwise comparable
/// elements. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    members: Vec<ElementId>,
}

impl Chain {
    /// Validates membership and pairwise comparability against `poset` and
    /// stores the members sorted ascending.
    pub fn new<I>(poset: &Poset, members: I) -> Result<Chain>
    where
        I: IntoIterator,
        I::Item: Into<ElementId>,
    {
        let mut idx = Vec::new();
        for m in members {
            let m = m.into();
            idx.push(poset.index_of(m.as_str())?);
        }
        for (k, &i) in idx.iter().enumerate() {
            for &j in &idx[k + 1..] {
                match poset.compare_elements(i, j) {
                    CompareResult::Equal => {
                        return Err(Error::NotAChain(format!(
                            "duplicate member `{}`",
                            poset.element(i)
                        )))
                    }
                    CompareResult::Incomparable => {
                        return Err(Error::NotAChain(format!(
                            "`{}` and `{}` are incomparable",
                            poset.element(i),
                            poset.element(j)
                        )))
                    }
                    _ => {}
                }
            }
        }
        idx.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if poset.leq_idx(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(Chain {
            members: idx.into_iter().map(|i| poset.element(i).clone()).collect(),
        })
    }

    pub fn empty() -> Chain {
        Chain {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The chain with its maximum removed.
    pub fn strip_max(&self) -> Chain {
        let mut members = self.members.clone();
        members.pop();
        Chain { members }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, "}}")
    }
}
