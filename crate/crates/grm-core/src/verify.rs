//! Executable forms of the measure-theoretic theorems on enumerated
//! categories: the main property of the Gabriel-Roiter measure, detection of
//! injective and simple objects, and the socle comparison lemma.

use std::fmt;

use num_rational::BigRational;

use crate::error::Error;
use crate::length::{AxiomTag, Violation};
use crate::measure::AxiomReport;
use crate::order::{compare_values, CompareResult};
use crate::repcat::enumerate::enumerate_classes;
use crate::repcat::rep::{decompose, exists_mono, is_isomorphic, socle_simples};
use crate::repcat::{CategoryLengthFunction, Fp, IndPoset, Quiver, Representation};
use crate::Result;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainPropertyViolationKind {
    /// μ(X) ≤ max μ(Y_i) failed.
    InequalityFailed,
    /// μ(X) = max μ(Y_i) but X is not a summand of ⊕Y_i.
    SummandFailed,
}

#[derive(Debug, Clone)]
pub struct MainPropertyViolation {
    pub subobject: String,
    pub summands: Vec<String>,
    pub kind: MainPropertyViolationKind,
}

/// Result of exhaustively checking `X ⊆ ⊕Y_i ⇒ μ(X) ≤ max μ(Y_i)` together
/// with the summand extraction at equality.
///
/// The theorem guarantees zero violations on valid categories; a non-empty
/// report means an implementation bug.
#[derive(Debug, Clone, Default)]
pub struct MainPropertyReport {
    pub checked_triples: usize,
    pub violations: Vec<MainPropertyViolation>,
}

impl MainPropertyReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for MainPropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} triples checked, {} violations",
            self.checked_triples,
            self.violations.len()
        )
    }
}

/// Checks Gabriel's main property over every indecomposable `X` and every
/// multiset of at most `max_summands` classes whose total length fits the
/// enumeration bound.
pub fn check_main_property(
    ip: &IndPoset,
    ell: &CategoryLengthFunction,
    max_summands: usize,
) -> Result<MainPropertyReport> {
    if max_summands == 0 {
        return Err(Error::InvalidInput("need at least one summand".to_owned()));
    }
    if max_summands > ip.max_len() {
        return Err(Error::BoundTooTight {
            max_summands,
            max_len: ip.max_len(),
        });
    }
    let measure = ip.measure(ell)?;
    let classes = ip.classes();
    let mut report = MainPropertyReport::default();

    let mut multiset: Vec<usize> = Vec::new();
    collect_multisets(classes.len(), max_summands, ip.max_len(), classes, &mut multiset, &mut |
        summands: &[usize],
    |
     -> Result<()> {
        let mut sum = classes[summands[0]].rep.clone();
        for &i in &summands[1..] {
            sum = sum.direct_sum(&classes[i].rep)?;
        }
        let max_mu = summands
            .iter()
            .map(|&i| measure.value_idx(i))
            .try_fold(None::<&crate::order::ChainValue>, |acc, v| match acc {
                None => Ok(Some(v)),
                Some(b) => {
                    if compare_values(v, b)? == CompareResult::GreaterThan {
                        Ok(Some(v))
                    } else {
                        Ok(Some(b))
                    }
                }
            })?
            .expect("multiset is non-empty");
        for (xi, x) in classes.iter().enumerate() {
            if x.length > sum.total_dim() || !exists_mono(&x.rep, &sum)? {
                continue;
            }
            report.checked_triples += 1;
            let cmp = compare_values(measure.value_idx(xi), max_mu)?;
            if !cmp.is_le() {
                report.violations.push(MainPropertyViolation {
                    subobject: x.label.clone(),
                    summands: summands.iter().map(|&i| classes[i].label.clone()).collect(),
                    kind: MainPropertyViolationKind::InequalityFailed,
                });
                continue;
            }
            if cmp == CompareResult::Equal {
                let parts = decompose(&sum)?;
                let mut found = false;
                for part in &parts {
                    if is_isomorphic(part, &x.rep)? {
                        found = true;
                        break;
                    }
                }
                if !found {
                    report.violations.push(MainPropertyViolation {
                        subobject: x.label.clone(),
                        summands: summands
                            .iter()
                            .map(|&i| classes[i].label.clone())
                            .collect(),
                        kind: MainPropertyViolationKind::SummandFailed,
                    });
                }
            }
        }
        Ok(())
    })?;
    Ok(report)
}

/// Multisets `i_1 ≤ … ≤ i_r` of class indices, `1 ≤ r ≤ max_summands`, with
/// total length at most `len_bound`.
fn collect_multisets(
    class_count: usize,
    max_summands: usize,
    len_bound: usize,
    classes: &[crate::repcat::IndClass],
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let total: usize = current.iter().map(|&i| classes[i].length).sum();
    if !current.is_empty() {
        f(current)?;
    }
    if current.len() == max_summands {
        return Ok(());
    }
    let start = current.last().copied().unwrap_or(0);
    for i in start..class_count {
        if total + classes[i].length <= len_bound {
            current.push(i);
            collect_multisets(class_count, max_summands, len_bound, classes, current, f)?;
            current.pop();
        }
    }
    Ok(())
}

/// Classes detected by a witness length function, with the witnesses used.
#[derive(Debug, Clone, Default)]
pub struct DetectionResult {
    pub detected: Vec<String>,
    pub witnesses: Vec<(String, CategoryLengthFunction)>,
    /// Set when the detection ran on a truncated enumeration, where
    /// extremality over the listed classes is not conclusive.
    pub advisory: bool,
}

/// Detects the injective indecomposables: `Q` is injective iff the measure
/// for the socle witness function ℓ_S (1 on the unique simple subobject, 2
/// elsewhere) is maximal at `Q` over every class.
///
/// Requires a complete (non-truncated) enumeration; on truncations
/// maximality over the listed classes proves nothing.
pub fn detect_injectives(ip: &IndPoset) -> Result<DetectionResult> {
    if ip.is_truncated() {
        return Err(Error::TruncatedCategory(ip.max_len()));
    }
    detect_injectives_advisory(ip)
}

/// [`detect_injectives`] without the completeness gate. On truncations the
/// answer is advisory only: a class maximal over the truncation need not be
/// maximal over the whole category.
pub fn detect_injectives_advisory(ip: &IndPoset) -> Result<DetectionResult> {
    let nv = ip.quiver().vertex_count();
    let mut result = DetectionResult::default();
    for (qi, q) in ip.classes().iter().enumerate() {
        let socle = socle_simples(&q.rep)?;
        if socle.len() != 1 {
            continue;
        }
        let ell = CategoryLengthFunction::socle_witness(nv, socle[0]);
        let measure = ip.measure(&ell)?;
        let q_value = measure.value_idx(qi);
        let mut maximal = true;
        for xi in 0..ip.classes().len() {
            if !compare_values(measure.value_idx(xi), q_value)?.is_le() {
                maximal = false;
                break;
            }
        }
        if maximal {
            result.detected.push(q.label.clone());
            result.witnesses.push((q.label.clone(), ell));
        }
    }
    result.advisory = ip.is_truncated();
    Ok(result)
}

/// Detects the simple classes: `S` is simple iff its measure is minimal for
/// some member of the witness family `{ℓ_v : v vertex}` (value 1 at `v`,
/// 2 elsewhere).
pub fn detect_simples(ip: &IndPoset) -> Result<DetectionResult> {
    if ip.is_truncated() {
        return Err(Error::TruncatedCategory(ip.max_len()));
    }
    detect_simples_advisory(ip)
}

/// [`detect_simples`] without the completeness gate. On a downward-closed
/// truncation minimality is in fact still exact (a non-simple class always
/// has its filtration start strictly below it, and all simples are listed),
/// but the result is flagged advisory all the same.
pub fn detect_simples_advisory(ip: &IndPoset) -> Result<DetectionResult> {
    let nv = ip.quiver().vertex_count();
    let measures: Vec<(CategoryLengthFunction, crate::measure::Measure)> = (0..nv)
        .map(|v| {
            let ell = CategoryLengthFunction::socle_witness(nv, v);
            let m = ip.measure(&ell)?;
            Ok((ell, m))
        })
        .collect::<Result<_>>()?;
    let mut result = DetectionResult::default();
    for (ci, c) in ip.classes().iter().enumerate() {
        for (ell, measure) in &measures {
            let c_value = measure.value_idx(ci);
            let mut minimal = true;
            for xi in 0..ip.classes().len() {
                if !compare_values(c_value, measure.value_idx(xi))?.is_le() {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                result.detected.push(c.label.clone());
                result.witnesses.push((c.label.clone(), ell.clone()));
                break;
            }
        }
    }
    result.advisory = ip.is_truncated();
    Ok(result)
}

/// Checks the socle comparison lemma: whenever every socle value of `X` is
/// strictly below every socle value of `Y`, the measures compare the other
/// way around, `ℓ*(X) > ℓ*(Y)`.
pub fn check_socle_lemma(ip: &IndPoset, ell: &CategoryLengthFunction) -> Result<AxiomReport> {
    let measure = ip.measure(ell)?;
    let socle_values: Vec<Vec<BigRational>> = ip
        .classes()
        .iter()
        .map(|c| {
            Ok(socle_simples(&c.rep)?
                .into_iter()
                .map(|v| ell.simple_value(v).clone())
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    for (xi, xv) in socle_values.iter().enumerate() {
        for (yi, yv) in socle_values.iter().enumerate() {
            if xi == yi {
                continue;
            }
            let qualifies = xv.iter().max().unwrap() < yv.iter().min().unwrap();
            if qualifies
                && compare_values(measure.value_idx(xi), measure.value_idx(yi))?
                    != CompareResult::GreaterThan
            {
                violations.push(Violation {
                    axiom: AxiomTag::SocleLemma,
                    witness: vec![
                        ip.poset().element(xi).clone(),
                        ip.poset().element(yi).clone(),
                    ],
                });
            }
        }
    }
    Ok(AxiomReport { violations })
}

/// Measure-free classification of the injective indecomposables: `Q` is
/// injective iff every embedding into an enumerated class lands in one that
/// carries `Q` as a direct summand.
///
/// Exact when the enumeration certifies completeness with a margin: no
/// indecomposable may reach the length bound (a non-injective `Q` has a
/// non-split essential extension of length `ℓ1(Q) + 1`, which the margin
/// guarantees is listed).
pub fn oracle_injectives(
    quiver: &Arc<Quiver>,
    field: Fp,
    max_len: usize,
) -> Result<Vec<String>> {
    let table = enumerate_classes(quiver, field, max_len)?;
    let ind_global: Vec<usize> = (0..table.classes.len())
        .filter(|&i| table.classes[i].indec)
        .collect();
    let max_ind_len = ind_global
        .iter()
        .map(|&i| table.classes[i].rep.total_dim())
        .max()
        .unwrap_or(0);
    if max_ind_len + 1 > max_len {
        return Err(Error::TruncatedCategory(max_len));
    }
    // Same labelling path as enumerate_ind, so outputs are comparable.
    let ip = crate::repcat::enumerate_ind(quiver, field, max_len)?;
    let mut injective = Vec::new();
    for (k, &qi) in ind_global.iter().enumerate() {
        let q = &table.classes[qi].rep;
        let mut is_injective = true;
        'outer: for y in &table.classes {
            if y.rep.total_dim() < q.total_dim() {
                continue;
            }
            if exists_mono(q, &y.rep)? && !y.decomp.contains(&qi) {
                is_injective = false;
                break 'outer;
            }
        }
        if is_injective {
            injective.push(ip.classes()[k].label.clone());
        }
    }
    Ok(injective)
}

/// Splitting test used by tests to cross-check `decompose`: whether `part`
/// appears in the Krull-Remak-Schmidt decomposition of `whole`.
pub fn is_summand(part: &Representation, whole: &Representation) -> Result<bool> {
    for candidate in decompose(whole)? {
        if is_isomorphic(&candidate, part)? {
            return Ok(true);
        }
    }
    Ok(false)
}
