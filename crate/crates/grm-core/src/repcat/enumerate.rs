use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Error;
use crate::length::LengthFunction;
use crate::measure::{measure_dp, Measure};
use crate::order::{ChainValue, Poset};
use crate::repcat::field::{Fp, FpMat};
use crate::repcat::quiver::Quiver;
use crate::repcat::rep::{exists_mono, Representation};
use crate::repcat::{module_length, CategoryLengthFunction};
use crate::Result;

/// Hard cap on the enumeration length.
pub const MAX_LEN_CAP: usize = 7;
/// Cap on the number of matrix tuples scanned per dimension vector.
const TUPLE_BUDGET: u128 = 1 << 22;

/// One isomorphism class discovered by enumeration.
#[derive(Debug, Clone)]
pub(crate) struct ClassInfo {
    pub rep: Representation,
    pub indec: bool,
    /// Indecomposable summands as global class indices (repeats allowed);
    /// `[self]` for indecomposable classes.
    pub decomp: Vec<usize>,
}

/// All isomorphism classes of total dimension ≤ `max_len`, with
/// decomposition data. Produced by induction on the total dimension:
/// the decomposable classes of a dimension vector are exactly the canonical
/// forms of direct sums of smaller classes, so indecomposability costs no
/// endomorphism-ring analysis.
#[derive(Debug)]
pub(crate) struct ClassTable {
    pub classes: Vec<ClassInfo>,
}

struct Layout {
    dims: Vec<usize>,
    /// Entry count per arrow matrix.
    arrow_entries: Vec<usize>,
    total_entries: usize,
}

impl Layout {
    fn new(quiver: &Quiver, dims: &[usize]) -> Layout {
        let arrow_entries: Vec<usize> = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| dims[t] * dims[s])
            .collect();
        Layout {
            dims: dims.to_vec(),
            total_entries: arrow_entries.iter().sum(),
            arrow_entries,
        }
    }

    fn tuple_count(&self, p: u8) -> Option<u128> {
        let mut count: u128 = 1;
        for _ in 0..self.total_entries {
            count = count.checked_mul(p as u128)?;
            if count > TUPLE_BUDGET {
                return None;
            }
        }
        Some(count)
    }

    /// First entry most significant, so numeric key order is lexicographic
    /// tuple order.
    fn encode(&self, p: u8, maps: &[FpMat]) -> u128 {
        let mut key: u128 = 0;
        for m in maps {
            for &e in &m.data {
                key = key * p as u128 + e as u128;
            }
        }
        key
    }

    fn decode(&self, quiver: &Quiver, p: u8, mut key: u128) -> Vec<FpMat> {
        let mut entries = vec![0u8; self.total_entries];
        for k in (0..self.total_entries).rev() {
            entries[k] = (key % p as u128) as u8;
            key /= p as u128;
        }
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        let mut offset = 0;
        for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
            let mat = FpMat {
                rows: self.dims[t],
                cols: self.dims[s],
                data: entries[offset..offset + self.arrow_entries[a]].to_vec(),
            };
            offset += self.arrow_entries[a];
            maps.push(mat);
        }
        maps
    }
}

/// Generators of the base-change group at one vertex, with inverses.
fn vertex_generators(field: Fp, d: usize) -> Vec<(FpMat, FpMat)> {
    let mut gens = Vec::new();
    if d == 0 {
        return gens;
    }
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            // Transvection I + E_ij.
            let mut h = FpMat::identity(d);
            h.set(i, j, 1);
            let mut h_inv = FpMat::identity(d);
            h_inv.set(i, j, field.neg(1));
            gens.push((h, h_inv));
        }
    }
    if field.p() > 2 {
        let g = field.primitive_root();
        let mut h = FpMat::identity(d);
        h.set(0, 0, g);
        let mut h_inv = FpMat::identity(d);
        h_inv.set(0, 0, field.inv(g));
        gens.push((h, h_inv));
    }
    gens
}

/// Dimension vectors with the given total, in lexicographic order.
fn dim_vectors(vertex_count: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; vertex_count];
    fn recurse(
        current: &mut Vec<usize>,
        pos: usize,
        remaining: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(current.clone());
            return;
        }
        for d in 0..=remaining {
            current[pos] = d;
            recurse(current, pos + 1, remaining - d, out);
        }
    }
    if vertex_count == 0 {
        return out;
    }
    recurse(&mut current, 0, total, &mut out);
    out
}

pub(crate) fn enumerate_classes(
    quiver: &Arc<Quiver>,
    field: Fp,
    max_len: usize,
) -> Result<ClassTable> {
    if max_len == 0 || max_len > MAX_LEN_CAP {
        return Err(Error::InvalidInput(format!(
            "maxLen must be between 1 and {}",
            MAX_LEN_CAP
        )));
    }
    let p = field.p();
    let mut classes: Vec<ClassInfo> = Vec::new();
    // Class indices per processed dimension vector.
    let mut by_vector: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();

    for total in 1..=max_len {
        for dims in dim_vectors(quiver.vertex_count(), total) {
            let layout = Layout::new(quiver, &dims);
            let Some(tuple_count) = layout.tuple_count(p) else {
                return Err(Error::BudgetExceeded(dims));
            };
            let gens: Vec<(usize, FpMat, FpMat)> = (0..quiver.vertex_count())
                .flat_map(|v| {
                    vertex_generators(field, dims[v])
                        .into_iter()
                        .map(move |(h, hi)| (v, h, hi))
                })
                .collect();

            // Orbit scan: ascending seeds are canonical representatives.
            let mut orbit_of: HashMap<u128, u32> = HashMap::new();
            let mut orbit_reps: Vec<u128> = Vec::new();
            for key in 0..tuple_count {
                if orbit_of.contains_key(&key) {
                    continue;
                }
                let orbit_id = orbit_reps.len() as u32;
                orbit_reps.push(key);
                orbit_of.insert(key, orbit_id);
                let mut stack = vec![key];
                while let Some(k) = stack.pop() {
                    let maps = layout.decode(quiver, p, k);
                    for (v, h, h_inv) in &gens {
                        let moved: Vec<FpMat> = quiver
                            .arrows()
                            .iter()
                            .enumerate()
                            .map(|(a, &(s, t))| {
                                let mut m = maps[a].clone();
                                if t == *v {
                                    m = field.matmul(h, &m);
                                }
                                if s == *v {
                                    m = field.matmul(&m, h_inv);
                                }
                                m
                            })
                            .collect();
                        let nk = layout.encode(p, &moved);
                        if let std::collections::hash_map::Entry::Vacant(e) = orbit_of.entry(nk) {
                            e.insert(orbit_id);
                            stack.push(nk);
                        }
                    }
                }
            }

            // Mark decomposables: canonical forms of M ⊕ N with M a smaller
            // indecomposable and N any smaller class.
            let mut decomp_of: Vec<Option<Vec<usize>>> = vec![None; orbit_reps.len()];
            for (u, u_classes) in &by_vector {
                if u.iter().zip(&dims).any(|(&a, &b)| a > b) {
                    continue;
                }
                let w: Vec<usize> = dims.iter().zip(u).map(|(&a, &b)| a - b).collect();
                if w.iter().all(|&d| d == 0) {
                    continue;
                }
                let Some(w_classes) = by_vector.get(&w) else {
                    continue;
                };
                for &mi in u_classes {
                    if !classes[mi].indec {
                        continue;
                    }
                    for &ni in w_classes {
                        let sum = classes[mi].rep.direct_sum(&classes[ni].rep)?;
                        let key = layout.encode(p, sum.maps());
                        let orbit = orbit_of[&key] as usize;
                        if decomp_of[orbit].is_none() {
                            let mut parts = vec![mi];
                            parts.extend_from_slice(&classes[ni].decomp);
                            parts.sort_unstable();
                            decomp_of[orbit] = Some(parts);
                        }
                    }
                }
            }

            let mut indices = Vec::with_capacity(orbit_reps.len());
            for (orbit, &key) in orbit_reps.iter().enumerate() {
                let rep = Representation::new(
                    Arc::clone(quiver),
                    field,
                    dims.clone(),
                    layout.decode(quiver, p, key),
                )?;
                let global = classes.len();
                let (indec, decomp) = match decomp_of[orbit].take() {
                    Some(parts) => (false, parts),
                    None => (true, vec![global]),
                };
                classes.push(ClassInfo { rep, indec, decomp });
                indices.push(global);
            }
            by_vector.insert(dims, indices);
        }
    }

    Ok(ClassTable { classes })
}

/// One indecomposable isomorphism class of the enumerated category.
#[derive(Debug, Clone)]
pub struct IndClass {
    pub rep: Representation,
    pub label: String,
    /// Composition length ℓ1 = total dimension.
    pub length: usize,
}

/// The poset of indecomposable isomorphism classes under the subobject
/// relation, truncated at a total length bound.
///
/// The truncation is downward closed: a subobject of a listed class has
/// smaller or equal length and is therefore listed, so measures computed on
/// the truncation agree with the full category on its members.
#[derive(Debug, Clone)]
pub struct IndPoset {
    quiver: Arc<Quiver>,
    field: Fp,
    max_len: usize,
    classes: Vec<IndClass>,
    poset: Arc<Poset>,
    truncated: bool,
}

impl IndPoset {
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn classes(&self) -> &[IndClass] {
        &self.classes
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// Whether indecomposables may exist beyond the length bound. Set when
    /// some indecomposable attains the bound exactly; a complete finite
    /// representation type enumerated with margin clears it.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn class_by_label(&self, label: &str) -> Option<&IndClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// The base length function `X ↦ ℓ(X)` on the class poset.
    pub fn base_length_function(&self, ell: &CategoryLengthFunction) -> Result<LengthFunction> {
        let values: Vec<ChainValue> = self
            .classes
            .iter()
            .map(|c| Ok(ChainValue::scalar(module_length(&c.rep, ell)?)))
            .collect::<Result<_>>()?;
        LengthFunction::from_values(Arc::clone(&self.poset), values)
    }

    /// The Gabriel-Roiter measure ℓ* on the class poset.
    pub fn measure(&self, ell: &CategoryLengthFunction) -> Result<Measure> {
        measure_dp(&self.base_length_function(ell)?)
    }
}

/// Enumerates the indecomposable classes of total length ≤ `max_len` and the
/// subobject relation between them.
pub fn enumerate_ind(quiver: &Arc<Quiver>, field: Fp, max_len: usize) -> Result<IndPoset> {
    let table = enumerate_classes(quiver, field, max_len)?;
    let ind: Vec<&ClassInfo> = table.classes.iter().filter(|c| c.indec).collect();
    let labels = label_classes(quiver, &ind);
    let classes: Vec<IndClass> = ind
        .iter()
        .zip(&labels)
        .map(|(c, label)| IndClass {
            rep: c.rep.clone(),
            label: label.clone(),
            length: c.rep.total_dim(),
        })
        .collect();

    let mut relations = Vec::new();
    for (i, x) in classes.iter().enumerate() {
        for (j, y) in classes.iter().enumerate() {
            if i != j && x.length <= y.length && exists_mono(&x.rep, &y.rep)? {
                relations.push((x.label.as_str().into(), y.label.as_str().into()));
            }
        }
    }
    // Mutual monos between distinct classes would contradict the
    // Krull-Remak-Schmidt uniqueness; Poset construction rejects them.
    let poset = Poset::from_relations(labels.clone(), relations)?;
    let truncated = classes.iter().any(|c| c.length == max_len);
    Ok(IndPoset {
        quiver: Arc::clone(quiver),
        field,
        max_len,
        classes,
        poset,
        truncated,
    })
}

/// Display labels: pattern-matched names for the Kronecker quiver
/// (P_n/R_n/Q_n by dimension vector) and interval names for line quivers;
/// simples are `S_v` elsewhere, with a generic fallback. Labels are display
/// metadata only and never enter the mathematics.
fn label_classes(quiver: &Arc<Quiver>, classes: &[&ClassInfo]) -> Vec<String> {
    let mut labels: Vec<String> = Vec::with_capacity(classes.len());
    let kronecker = quiver.is_kronecker();
    let line = quiver.line_order();
    for (k, class) in classes.iter().enumerate() {
        let dims = class.rep.dims();
        let label = if kronecker {
            kronecker_label(&class.rep)
        } else if let Some(order) = &line {
            line_label(quiver, order, dims)
        } else {
            None
        };
        let label = label
            .or_else(|| simple_label(quiver, dims))
            .unwrap_or_else(|| format!("X{}", k));
        labels.push(label);
    }
    // Disambiguate any collisions deterministically.
    for i in 0..labels.len() {
        let mut suffix = 1;
        while labels[..i].contains(&labels[i]) {
            suffix += 1;
            labels[i] = format!("{}#{}", labels[i], suffix);
        }
    }
    labels
}

fn simple_label(quiver: &Arc<Quiver>, dims: &[usize]) -> Option<String> {
    if dims.iter().sum::<usize>() == 1 {
        let v = dims.iter().position(|&d| d == 1).unwrap();
        Some(format!("S{}", quiver.vertex(v)))
    } else {
        None
    }
}

fn kronecker_label(rep: &Representation) -> Option<String> {
    let (src, tgt) = rep.quiver().arrows()[0];
    let ds = rep.dims()[src];
    let dt = rep.dims()[tgt];
    if ds < dt {
        (dt == ds + 1).then(|| format!("P{}", dt))
    } else if ds > dt {
        (ds == dt + 1).then(|| format!("Q{}", ds))
    } else {
        // A regular class belongs to a closed point of the projective line:
        // a rational point (α:β) or, over a non-closed prime field, a monic
        // irreducible polynomial of higher degree.
        let n = ds;
        let field = rep.field();
        let (a, b) = (&rep.maps()[0], &rep.maps()[1]);
        if let Some(a_inv) = field.invert(a) {
            let m = field.matmul(&a_inv, b);
            let coeffs = char_poly(field, &m)?;
            if let Some(lambda) = (0..field.p())
                .find(|&l| coeffs == linear_power_coeffs(field, l, n))
            {
                return Some(format!("R{}(1:{})", n, lambda));
            }
            let has_root = (0..field.p()).any(|l| poly_eval(field, &coeffs, l) == 0);
            if !has_root {
                // Irreducible characteristic polynomial: the quasi-simple of
                // a degree-n point.
                return Some(format!("R1({})", poly_display(&coeffs)));
            }
            None
        } else if field.invert(b).is_some() {
            Some(format!("R{}(0:1)", n))
        } else {
            None
        }
    }
}

/// Coefficients `[c_0, …, c_{n-1}]` of the monic characteristic polynomial
/// `t^n + c_{n-1} t^{n-1} + … + c_0` of a square matrix, for n ≤ 3.
fn char_poly(field: Fp, m: &FpMat) -> Option<Vec<u8>> {
    let n = m.rows;
    let e = |rows: &[usize]| -> u8 { principal_minor(field, m, rows) };
    match n {
        1 => Some(vec![field.neg(m.get(0, 0))]),
        2 => {
            let tr = field.add(m.get(0, 0), m.get(1, 1));
            let det = e(&[0, 1]);
            Some(vec![det, field.neg(tr)])
        }
        3 => {
            let tr = field.add(field.add(m.get(0, 0), m.get(1, 1)), m.get(2, 2));
            let e2 = field.add(field.add(e(&[0, 1]), e(&[0, 2])), e(&[1, 2]));
            let det = e(&[0, 1, 2]);
            Some(vec![field.neg(det), e2, field.neg(tr)])
        }
        _ => None,
    }
}

fn principal_minor(field: Fp, m: &FpMat, rows: &[usize]) -> u8 {
    match rows.len() {
        1 => m.get(rows[0], rows[0]),
        2 => {
            let (i, j) = (rows[0], rows[1]);
            field.sub(
                field.mul(m.get(i, i), m.get(j, j)),
                field.mul(m.get(i, j), m.get(j, i)),
            )
        }
        3 => {
            let mut det = 0u8;
            let perms: [([usize; 3], bool); 6] = [
                ([0, 1, 2], true),
                ([1, 2, 0], true),
                ([2, 0, 1], true),
                ([2, 1, 0], false),
                ([1, 0, 2], false),
                ([0, 2, 1], false),
            ];
            for (perm, positive) in perms {
                let term = field.mul(
                    field.mul(m.get(rows[0], rows[perm[0]]), m.get(rows[1], rows[perm[1]])),
                    m.get(rows[2], rows[perm[2]]),
                );
                det = if positive {
                    field.add(det, term)
                } else {
                    field.sub(det, term)
                };
            }
            det
        }
        _ => unreachable!(),
    }
}

/// Coefficients of `(t - λ)^n` in the same layout as [`char_poly`].
fn linear_power_coeffs(field: Fp, lambda: u8, n: usize) -> Vec<u8> {
    // Multiply out (t - λ)^n, coefficients ascending.
    let mut coeffs = vec![1u8];
    for _ in 0..n {
        let mut next = vec![0u8; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] = field.add(next[k + 1], c);
            next[k] = field.sub(next[k], field.mul(lambda, c));
        }
        coeffs = next;
    }
    coeffs.truncate(n);
    coeffs
}

fn poly_eval(field: Fp, coeffs: &[u8], x: u8) -> u8 {
    // Monic of degree coeffs.len().
    let mut value = 1u8;
    for &c in coeffs.iter().rev() {
        value = field.add(field.mul(value, x), c);
    }
    value
}

fn poly_display(coeffs: &[u8]) -> String {
    let n = coeffs.len();
    let mut terms = vec![match n {
        1 => "t".to_owned(),
        _ => format!("t^{}", n),
    }];
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (k, c) {
            (0, c) => format!("{}", c),
            (1, 1) => "t".to_owned(),
            (1, c) => format!("{}t", c),
            (k, 1) => format!("t^{}", k),
            (k, c) => format!("{}t^{}", c, k),
        };
        terms.push(term);
    }
    terms.join("+")
}

fn line_label(quiver: &Arc<Quiver>, order: &[usize], dims: &[usize]) -> Option<String> {
    let support: Vec<usize> = (0..order.len())
        .filter(|&k| dims[order[k]] > 0)
        .collect();
    if support.is_empty() || dims.iter().any(|&d| d > 1) {
        return None;
    }
    let (first, last) = (support[0], *support.last().unwrap());
    if support.len() != last - first + 1 {
        return None;
    }
    if first == last {
        return Some(format!("S{}", quiver.vertex(order[first])));
    }
    Some(format!(
        "[{}..{}]",
        quiver.vertex(order[first]),
        quiver.vertex(order[last])
    ))
}
