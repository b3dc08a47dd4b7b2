//! Finite posets, finite chains, and the lexicographic order on chains.
//!
//! A chain `X` compares to a chain `Y` by the rule
//! `X <= Y  iff  min(Y \ X) <= min(X \ Y)`, where the minimum of the empty
//! set acts as a sentinel above every element. The same rule, applied
//! recursively, orders nested [`ChainValue`]s.

mod poset;
pub(crate) mod value;

pub use poset::{Chain, ElementId, Poset};
pub use value::{compare_values, ChainValue};

use crate::error::Error;
use crate::Result;

/// Outcome of comparing two chains or two values.
///
/// `Incomparable` can arise only when the underlying element order is
/// genuinely partial; values built from rational scalars are always
/// comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareResult {
    LessThan,
    Equal,
    GreaterThan,
    Incomparable,
}

impl CompareResult {
    /// True for `LessThan` and `Equal`.
    pub fn is_le(self) -> bool {
        matches!(self, CompareResult::LessThan | CompareResult::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, CompareResult::GreaterThan | CompareResult::Equal)
    }

    pub fn reverse(self) -> CompareResult {
        match self {
            CompareResult::LessThan => CompareResult::GreaterThan,
            CompareResult::GreaterThan => CompareResult::LessThan,
            other => other,
        }
    }
}

/// Lexicographic comparison of two ascending sequences, generic over the
/// element comparator. Implements the definition directly: compute both set
/// differences, then compare their minima with `min ∅` as a top sentinel.
///
/// `cmp` must be consistent on the elements involved; the sequences must be
/// strictly ascending under it.
pub(crate) fn lex_compare_by<T, F>(xs: &[T], ys: &[T], mut cmp: F) -> CompareResult
where
    F: FnMut(&T, &T) -> CompareResult,
{
    // Set differences keep ascending order, so the first survivor is the min.
    let x_min = first_not_in(xs, ys, &mut cmp);
    let y_min = first_not_in(ys, xs, &mut cmp);
    let le_xy = sentinel_le(y_min, x_min, &mut cmp);
    let le_yx = sentinel_le(x_min, y_min, &mut cmp);
    match (le_xy, le_yx) {
        (true, true) => CompareResult::Equal,
        (true, false) => CompareResult::LessThan,
        (false, true) => CompareResult::GreaterThan,
        (false, false) => CompareResult::Incomparable,
    }
}

/// First element of `xs` that is not equal (under `cmp`) to any element of
/// `ys`; `None` when `xs ⊆ ys`.
fn first_not_in<'a, T, F>(xs: &'a [T], ys: &[T], cmp: &mut F) -> Option<&'a T>
where
    F: FnMut(&T, &T) -> CompareResult,
{
    xs.iter()
        .find(|x| !ys.iter().any(|y| cmp(x, y) == CompareResult::Equal))
}

/// `a <= b` with `None` playing the role of `min ∅`, above everything.
fn sentinel_le<T, F>(a: Option<&T>, b: Option<&T>, cmp: &mut F) -> bool
where
    F: FnMut(&T, &T) -> CompareResult,
{
    match (a, b) {
        (None, None) => true,
        (None, Some(_)) => false,
        (Some(_), None) => true,
        (Some(a), Some(b)) => cmp(a, b).is_le(),
    }
}

/// Removes the maximum from a chain; identity on the empty chain.
pub fn strip_max(chain: &Chain) -> Chain {
    chain.strip_max()
}

/// Lexicographic comparison of two chains of `poset`.
///
/// Errors with [`Error::NotAChain`] (or [`Error::UnknownElement`]) when an
/// argument is not a valid chain of `poset`.
pub fn lex_compare(x: &Chain, y: &Chain, poset: &Poset) -> Result<CompareResult> {
    let xi = poset.chain_indices(x)?;
    let yi = poset.chain_indices(y)?;
    Ok(lex_compare_by(&xi, &yi, |&a, &b| poset.compare_elements(a, b)))
}

/// Exact dyadic encoding `X ↦ Σ_{x∈X} 2^{-x}` of a chain whose member ids
/// are positive integers.
pub fn dyadic_encode(chain: &Chain) -> Result<num_rational::BigRational> {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    let mut sum = num_rational::BigRational::zero();
    for member in chain.members() {
        let n: u64 = member
            .as_str()
            .parse()
            .map_err(|_| Error::NonPositiveMember(member.as_str().to_owned()))?;
        if n == 0 {
            return Err(Error::NonPositiveMember(member.as_str().to_owned()));
        }
        let denom = BigInt::one() << n;
        sum += num_rational::BigRational::new(BigInt::one(), denom);
    }
    Ok(sum)
}
