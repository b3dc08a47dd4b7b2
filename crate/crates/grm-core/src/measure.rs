//! The chain length function λ*: oracle and dynamic-programming forms,
//! iterated measures, Gabriel-Roiter filtrations, and the axiom checkers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::length::{validate_values, AxiomTag, LengthFunction, Violation};
use crate::order::value::max_value;
use crate::order::{compare_values, ChainValue, CompareResult, ElementId, Poset};
use crate::Result;

/// Default cap on measure iteration depth.
pub const DEFAULT_ITERATION_CAP: usize = 8;

/// A computed chain length function λ* over a base length function λ.
///
/// Values have depth `base.depth() + 1` and satisfy (C0)-(C3); by
/// construction the value map is itself a length function.
#[derive(Debug, Clone)]
pub struct Measure {
    base: LengthFunction,
    values: Vec<ChainValue>,
}

impl Measure {
    pub fn base(&self) -> &LengthFunction {
        &self.base
    }

    pub fn poset(&self) -> &Arc<Poset> {
        self.base.poset()
    }

    pub fn values(&self) -> &[ChainValue] {
        &self.values
    }

    pub fn value_idx(&self, i: usize) -> &ChainValue {
        &self.values[i]
    }

    pub fn value(&self, x: &str) -> Result<&ChainValue> {
        Ok(&self.values[self.poset().index_of(x)?])
    }

    /// Reinterprets the measure as a length function; the induced map always
    /// is one.
    pub fn to_length_function(&self) -> Result<LengthFunction> {
        LengthFunction::from_values(Arc::clone(self.poset()), self.values.clone())
    }

    /// Element ids sorted ascending by measure value, ties broken by input
    /// order, together with the groups of tied elements.
    pub fn sorted_order(&self) -> Result<(Vec<ElementId>, Vec<Vec<ElementId>>)> {
        crate::length::sorted_order_values(self.poset(), &self.values)
    }
}

/// λ*(x) by the definition: enumerate all chains ending at `x`, map each to
/// its chain of base values, take the lexicographic maximum.
///
/// This is the reference form; [`measure_dp`] must agree with it pointwise.
pub fn measure_oracle(lambda: &LengthFunction, x: &str) -> Result<ChainValue> {
    let poset = lambda.poset();
    let chains = poset.chains_ending_at(x)?;
    let mut best: Option<ChainValue> = None;
    for chain in &chains {
        let entries: Vec<ChainValue> = chain
            .members()
            .iter()
            .map(|m| lambda.value(m.as_str()).cloned())
            .collect::<Result<_>>()?;
        // (L1) makes the values strictly ascending along a chain.
        let value = ChainValue::chain(entries)?;
        best = Some(match best {
            None => value,
            Some(b) => {
                if compare_values(&value, &b)? == CompareResult::GreaterThan {
                    value
                } else {
                    b
                }
            }
        });
    }
    best.ok_or_else(|| Error::InvalidInput(format!("no chains end at `{}`", x)))
}

/// λ* for all elements in one topological pass, via the recursion
/// `λ*(x) = max_(x'<x) λ*(x') ∪ {λ(x)}` with the empty chain as the maximum
/// over the empty predecessor set.
pub fn measure_dp(lambda: &LengthFunction) -> Result<Measure> {
    let poset = lambda.poset();
    let n = poset.len();
    let mut values: Vec<Option<ChainValue>> = vec![None; n];
    for &i in &poset.topological_order() {
        let preds = poset.strict_predecessors(i);
        let pred_values: Vec<&ChainValue> = preds
            .iter()
            .map(|&j| values[j].as_ref().expect("topological order"))
            .collect();
        let prefix = match max_value(pred_values.iter().copied())? {
            Some(v) => v.clone(),
            None => ChainValue::empty_chain(),
        };
        values[i] = Some(prefix.appended(lambda.value_idx(i).clone())?);
    }
    Ok(Measure {
        base: lambda.clone(),
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

/// n-fold iteration `λ^(0) = λ`, `λ^(k) = (λ^(k-1))*`, capped by
/// [`DEFAULT_ITERATION_CAP`].
pub fn iterate_measure(lambda: &LengthFunction, n: usize) -> Result<LengthFunction> {
    iterate_measure_with_cap(lambda, n, DEFAULT_ITERATION_CAP)
}

pub fn iterate_measure_with_cap(
    lambda: &LengthFunction,
    n: usize,
    cap: usize,
) -> Result<LengthFunction> {
    if n > cap {
        return Err(Error::IterationBudgetExceeded { requested: n, cap });
    }
    let mut current = lambda.clone();
    for _ in 0..n {
        current = measure_dp(&current)?.to_length_function()?;
    }
    Ok(current)
}

/// A Gabriel-Roiter filtration `x_1 < x_2 < … < x_γ = x`: the first step is
/// minimal and each step attains the maximal measure among the strict
/// predecessors of the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrFiltration {
    steps: Vec<ElementId>,
}

impl GrFiltration {
    pub fn steps(&self) -> &[ElementId] {
        &self.steps
    }

    /// γ(x): the number of steps.
    pub fn gamma(&self) -> usize {
        self.steps.len()
    }
}

impl fmt::Display for GrFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// One Gabriel-Roiter filtration of `x`. Predecessor ties are broken by the
/// first attaining element in poset input order; the induced value chain is
/// tie-invariant.
pub fn gr_filtration(measure: &Measure, x: &str) -> Result<GrFiltration> {
    let poset = measure.poset();
    let mut current = poset.index_of(x)?;
    let mut steps = vec![current];
    while !poset.is_minimal(current) {
        let preds = poset.strict_predecessors(current);
        let best = max_value(preds.iter().map(|&j| measure.value_idx(j)))?
            .expect("non-minimal element has predecessors");
        let chosen = preds
            .iter()
            .copied()
            .find(|&j| {
                compare_values(measure.value_idx(j), best)
                    .map(|c| c == CompareResult::Equal)
                    .unwrap_or(false)
            })
            .expect("maximum is attained");
        steps.push(chosen);
        current = chosen;
    }
    steps.reverse();
    Ok(GrFiltration {
        steps: steps.into_iter().map(|i| poset.element(i).clone()).collect(),
    })
}

/// Whether a sequence of steps is a Gabriel-Roiter filtration for this
/// measure: strictly ascending from a minimal element, with every step
/// attaining the maximal measure among the strict predecessors of the next.
pub fn is_gr_filtration(measure: &Measure, filtration: &GrFiltration) -> Result<bool> {
    let poset = measure.poset();
    if filtration.steps.is_empty() {
        return Ok(false);
    }
    let idx: Vec<usize> = filtration
        .steps
        .iter()
        .map(|s| poset.index_of(s.as_str()))
        .collect::<Result<_>>()?;
    if !poset.is_minimal(idx[0]) {
        return Ok(false);
    }
    for w in idx.windows(2) {
        if !poset.lt_idx(w[0], w[1]) {
            return Ok(false);
        }
        let preds = poset.strict_predecessors(w[1]);
        let best = max_value(preds.iter().map(|&j| measure.value_idx(j)))?
            .expect("non-minimal element has predecessors");
        if compare_values(measure.value_idx(w[0]), best)? != CompareResult::Equal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The value chain `{ℓ(x_i)}` along a filtration. Checks that the steps form
/// a strictly ascending sequence starting at a minimal element; the full
/// Gabriel-Roiter property is checked by [`is_gr_filtration`].
pub fn measure_from_filtration(
    lambda: &LengthFunction,
    filtration: &GrFiltration,
) -> Result<ChainValue> {
    let poset = lambda.poset();
    if filtration.steps.is_empty() {
        return Err(Error::InvalidFiltration("empty filtration".to_owned()));
    }
    let idx: Vec<usize> = filtration
        .steps
        .iter()
        .map(|s| poset.index_of(s.as_str()))
        .collect::<Result<_>>()?;
    if !poset.is_minimal(idx[0]) {
        return Err(Error::InvalidFiltration(format!(
            "first step `{}` is not minimal",
            filtration.steps[0]
        )));
    }
    for w in idx.windows(2) {
        if !poset.lt_idx(w[0], w[1]) {
            return Err(Error::InvalidFiltration(format!(
                "`{}` is not strictly below `{}`",
                poset.element(w[0]),
                poset.element(w[1])
            )));
        }
    }
    let entries: Vec<ChainValue> = idx.iter().map(|&i| lambda.value_idx(i).clone()).collect();
    ChainValue::chain(entries)
}

/// Report produced by the (M1)-(M3) and (C0)-(C3) checkers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "no violations");
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

/// Checks an arbitrary candidate map μ against the axioms
/// (M1) `x ≤ y ⇒ μ(x) ≤ μ(y)`,
/// (M2) `μ(x) = μ(y) ⇒ λ(x) = λ(y)`,
/// (M3) `(∀ x' < x: μ(x') < μ(y)) ∧ λ(x) ≥ λ(y) ⇒ μ(x) ≤ μ(y)`.
pub fn check_m_axioms(
    lambda: &LengthFunction,
    mu: &BTreeMap<String, ChainValue>,
) -> Result<AxiomReport> {
    let poset = lambda.poset();
    let mut values: Vec<Option<ChainValue>> = vec![None; poset.len()];
    for (id, v) in mu {
        values[poset.index_of(id)?] = Some(v.clone());
    }
    let mut flat = Vec::with_capacity(poset.len());
    for (i, v) in values.into_iter().enumerate() {
        match v {
            Some(v) => flat.push(v),
            None => {
                return Err(Error::InvalidInput(format!(
                    "no μ value for element `{}`",
                    poset.element(i)
                )))
            }
        }
    }
    check_m_axioms_values(lambda, &flat, [AxiomTag::M1, AxiomTag::M2, AxiomTag::M3])
}

fn check_m_axioms_values(
    lambda: &LengthFunction,
    mu: &[ChainValue],
    tags: [AxiomTag; 3],
) -> Result<AxiomReport> {
    let poset = lambda.poset();
    let n = poset.len();
    if let Some(first) = mu.first() {
        for v in mu {
            compare_values(first, v)?;
        }
    }
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let cmp_mu = compare_values(&mu[x], &mu[y])?;
            let cmp_lambda = compare_values(lambda.value_idx(x), lambda.value_idx(y))?;
            let witness = || vec![poset.element(x).clone(), poset.element(y).clone()];
            if poset.leq_idx(x, y) && !cmp_mu.is_le() {
                violations.push(Violation {
                    axiom: tags[0],
                    witness: witness(),
                });
            }
            if cmp_mu == CompareResult::Equal && cmp_lambda != CompareResult::Equal {
                violations.push(Violation {
                    axiom: tags[1],
                    witness: witness(),
                });
            }
            let preds_below = poset.strict_predecessors(x).into_iter().try_fold(
                true,
                |acc, xp| -> Result<bool> {
                    Ok(acc && compare_values(&mu[xp], &mu[y])? == CompareResult::LessThan)
                },
            )?;
            if preds_below && cmp_lambda.is_ge() && !cmp_mu.is_le() {
                violations.push(Violation {
                    axiom: tags[2],
                    witness: witness(),
                });
            }
        }
    }
    Ok(AxiomReport { violations })
}

/// Verifies (C0)-(C3) of a computed measure against its base length function.
pub fn check_c_properties(lambda: &LengthFunction, measure: &Measure) -> Result<AxiomReport> {
    let poset = lambda.poset();
    if poset.as_ref() != measure.poset().as_ref() {
        return Err(Error::PosetMismatch);
    }
    let mut violations = Vec::new();
    // (C0): recompute the recursion at every element.
    for i in 0..poset.len() {
        let preds = poset.strict_predecessors(i);
        let prefix = match max_value(preds.iter().map(|&j| measure.value_idx(j)))? {
            Some(v) => v.clone(),
            None => ChainValue::empty_chain(),
        };
        let expected = prefix.appended(lambda.value_idx(i).clone())?;
        if compare_values(&expected, measure.value_idx(i))? != CompareResult::Equal {
            violations.push(Violation {
                axiom: AxiomTag::C0,
                witness: vec![poset.element(i).clone()],
            });
        }
    }
    let mut report = check_m_axioms_values(
        lambda,
        measure.values(),
        [AxiomTag::C1, AxiomTag::C2, AxiomTag::C3],
    )?;
    violations.append(&mut report.violations);
    Ok(AxiomReport { violations })
}

/// Checks that the measure's value map is itself a valid length function.
/// The induced map always is; the check is the executable form of that fact.
pub fn measure_is_length_function(measure: &Measure) -> Result<bool> {
    Ok(validate_values(measure.poset(), measure.values())?.is_valid())
}
