//! Length functions on finite posets: the (L1)-(L3) axioms, λ0, equivalence,
//! and the rank-function special case.
//!
//! A length function is a map into uniform-depth [`ChainValue`]s that is
//! strictly monotone (L1) and takes pairwise comparable values (L2); on a
//! finite poset the finiteness axiom (L3) is automatic and is recorded as
//! satisfied by every report.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::Error;
use crate::order::{compare_values, ChainValue, CompareResult, ElementId, Poset};
use crate::Result;

/// Axiom tags used by validation and axiom reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomTag {
    L1,
    L2,
    L3,
    M1,
    M2,
    M3,
    C0,
    C1,
    C2,
    C3,
    SocleLemma,
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomTag::L1 => "L1",
            AxiomTag::L2 => "L2",
            AxiomTag::L3 => "L3",
            AxiomTag::M1 => "M1",
            AxiomTag::M2 => "M2",
            AxiomTag::M3 => "M3",
            AxiomTag::C0 => "C0",
            AxiomTag::C1 => "C1",
            AxiomTag::C2 => "C2",
            AxiomTag::C3 => "C3",
            AxiomTag::SocleLemma => "socle-lemma",
        };
        f.write_str(s)
    }
}

/// A single axiom violation with its witness elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomTag,
    pub witness: Vec<ElementId>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at (", self.axiom)?;
        for (k, w) in self.witness.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", w)?;
        }
        write!(f, ")")
    }
}

/// Result of checking a candidate map against (L1)-(L3).
///
/// Empty iff the map is a valid length function. (L3) holds automatically on
/// finite posets and never contributes a violation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "L1: ok, L2: ok, L3: satisfied (finite poset)");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// A validated length function `λ: S → T` with codomain the uniform-depth
/// chain values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthFunction {
    poset: Arc<Poset>,
    values: Vec<ChainValue>,
    depth: usize,
}

impl LengthFunction {
    /// Builds a length function from per-element values, validating eagerly.
    pub fn new(poset: Arc<Poset>, values: &BTreeMap<String, ChainValue>) -> Result<LengthFunction> {
        let mut by_index: Vec<Option<ChainValue>> = vec![None; poset.len()];
        for (id, v) in values {
            let i = poset.index_of(id)?;
            by_index[i] = Some(v.clone());
        }
        let mut flat = Vec::with_capacity(poset.len());
        for (i, v) in by_index.into_iter().enumerate() {
            match v {
                Some(v) => flat.push(v),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "no value for element `{}`",
                        poset.element(i)
                    )))
                }
            }
        }
        Self::from_values(poset, flat)
    }

    /// Builds from values aligned with the poset's element order.
    pub fn from_values(poset: Arc<Poset>, values: Vec<ChainValue>) -> Result<LengthFunction> {
        assert_eq!(values.len(), poset.len(), "one value per element");
        let report = validate_values(&poset, &values)?;
        if !report.is_valid() {
            return Err(Error::InvalidLengthFunction(report));
        }
        let depth = values.first().map_or(0, ChainValue::depth);
        Ok(LengthFunction {
            poset,
            values,
            depth,
        })
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn values(&self) -> &[ChainValue] {
        &self.values
    }

    pub fn value_idx(&self, i: usize) -> &ChainValue {
        &self.values[i]
    }

    pub fn value(&self, x: &str) -> Result<&ChainValue> {
        Ok(&self.values[self.poset.index_of(x)?])
    }

    /// `λ0(x)`: the number of distinct values taken on the down-set of `x`.
    pub fn lambda0(&self, x: &str) -> Result<usize> {
        let xi = self.poset.index_of(x)?;
        let mut distinct: Vec<&ChainValue> = Vec::new();
        for j in 0..self.poset.len() {
            if self.poset.leq_idx(j, xi) {
                let v = &self.values[j];
                if !distinct.iter().any(|d| {
                    matches!(compare_values(d, v), Ok(CompareResult::Equal))
                }) {
                    distinct.push(v);
                }
            }
        }
        Ok(distinct.len())
    }

    /// `λ(x) ≤ λ(y)` under the value order.
    pub fn le(&self, i: usize, j: usize) -> Result<bool> {
        Ok(compare_values(&self.values[i], &self.values[j])?.is_le())
    }
}

/// Checks a candidate map against (L1)-(L3) and reports every violation with
/// witnesses. Depth disagreement between values is an error, not a violation.
pub fn validate_length_function(
    poset: &Poset,
    values: &BTreeMap<String, ChainValue>,
) -> Result<ValidationReport> {
    let mut by_index: Vec<Option<ChainValue>> = vec![None; poset.len()];
    for (id, v) in values {
        let i = poset.index_of(id)?;
        by_index[i] = Some(v.clone());
    }
    let mut flat = Vec::with_capacity(poset.len());
    for (i, v) in by_index.into_iter().enumerate() {
        match v {
            Some(v) => flat.push(v),
            None => {
                return Err(Error::InvalidInput(format!(
                    "no value for element `{}`",
                    poset.element(i)
                )))
            }
        }
    }
    validate_values(poset, &flat)
}

pub(crate) fn validate_values(poset: &Poset, values: &[ChainValue]) -> Result<ValidationReport> {
    if let Some(first) = values.first() {
        for v in values {
            // compare_values surfaces DepthMismatch for incompatible depths
            compare_values(first, v)?;
        }
    }
    let n = poset.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if poset.lt_idx(i, j)
                && compare_values(&values[i], &values[j])? != CompareResult::LessThan
            {
                violations.push(Violation {
                    axiom: AxiomTag::L1,
                    witness: vec![poset.element(i).clone(), poset.element(j).clone()],
                });
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if compare_values(&values[i], &values[j])? == CompareResult::Incomparable {
                violations.push(Violation {
                    axiom: AxiomTag::L2,
                    witness: vec![poset.element(i).clone(), poset.element(j).clone()],
                });
            }
        }
    }
    // (L3) is automatic: every down-set of a finite poset is finite.
    Ok(ValidationReport { violations })
}

/// First pair on which the value orders of `f` and `g` disagree, or `None`
/// when the functions are equivalent.
pub fn equivalence_witness(
    f: &LengthFunction,
    g: &LengthFunction,
) -> Result<Option<(ElementId, ElementId)>> {
    if f.poset.as_ref() != g.poset.as_ref() {
        return Err(Error::PosetMismatch);
    }
    let n = f.poset.len();
    for i in 0..n {
        for j in 0..n {
            if f.le(i, j)? != g.le(i, j)? {
                return Ok(Some((
                    f.poset.element(i).clone(),
                    f.poset.element(j).clone(),
                )));
            }
        }
    }
    Ok(None)
}

/// Whether `f` and `g` induce the same order relation on the poset.
pub fn are_equivalent(f: &LengthFunction, g: &LengthFunction) -> Result<bool> {
    Ok(equivalence_witness(f, g)?.is_none())
}

/// Whether `f` is a rank function: integer values, equal on all minimal
/// elements, and increasing by exactly one along every cover pair.
pub fn is_rank_function(f: &LengthFunction) -> Result<bool> {
    let n = f.poset.len();
    let mut ints: Vec<BigRational> = Vec::with_capacity(n);
    for v in &f.values {
        match v.as_scalar() {
            Some(r) if r.is_integer() => ints.push(r.clone()),
            _ => return Err(Error::NonIntegerValues),
        }
    }
    let minimal: Vec<usize> = (0..n).filter(|&i| f.poset.is_minimal(i)).collect();
    for w in minimal.windows(2) {
        if ints[w[0]] != ints[w[1]] {
            return Ok(false);
        }
    }
    let one = BigRational::from_integer(1.into());
    for &(lo, hi) in f.poset.covers() {
        if &ints[hi] - &ints[lo] != one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Element ids sorted ascending by value, ties broken by input order,
/// together with the groups of tied elements.
pub fn sorted_order(f: &LengthFunction) -> Result<(Vec<ElementId>, Vec<Vec<ElementId>>)> {
    sorted_order_values(f.poset(), f.values())
}

pub(crate) fn sorted_order_values(
    poset: &Poset,
    values: &[ChainValue],
) -> Result<(Vec<ElementId>, Vec<Vec<ElementId>>)> {
    let n = poset.len();
    let mut idx: Vec<usize> = (0..n).collect();
    // Values are totally ordered; verify comparability up front so the sort
    // comparator cannot fail.
    for i in 0..n {
        for j in (i + 1)..n {
            if compare_values(&values[i], &values[j])? == CompareResult::Incomparable {
                return Err(Error::InvalidInput(format!(
                    "values at `{}` and `{}` are incomparable",
                    poset.element(i),
                    poset.element(j)
                )));
            }
        }
    }
    idx.sort_by(|&a, &b| {
        match compare_values(&values[a], &values[b]).expect("checked comparable") {
            CompareResult::LessThan => std::cmp::Ordering::Less,
            CompareResult::GreaterThan => std::cmp::Ordering::Greater,
            _ => a.cmp(&b),
        }
    });
    let order: Vec<ElementId> = idx.iter().map(|&i| poset.element(i).clone()).collect();
    let mut ties: Vec<Vec<ElementId>> = Vec::new();
    let mut k = 0;
    while k < idx.len() {
        let mut end = k + 1;
        while end < idx.len()
            && compare_values(&values[idx[k]], &values[idx[end]])? == CompareResult::Equal
        {
            end += 1;
        }
        if end - k > 1 {
            ties.push(idx[k..end].iter().map(|&i| poset.element(i).clone()).collect());
        }
        k = end;
    }
    Ok((order, ties))
}

/// The stock length function sending `x` to the maximal cardinality of a
/// chain ending at `x`.
pub fn height_function(poset: &Arc<Poset>) -> Result<LengthFunction> {
    let mut values = Vec::with_capacity(poset.len());
    for i in 0..poset.len() {
        let chains = poset.chains_ending_at(poset.element(i).as_str())?;
        let max_card = chains.iter().map(|c| c.len()).max().unwrap_or(0);
        values.push(ChainValue::integer(max_card as i64));
    }
    LengthFunction::from_values(Arc::clone(poset), values)
}
