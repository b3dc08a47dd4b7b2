use std::fmt;

use num_rational::BigRational;

use crate::error::Error;
use crate::order::{lex_compare_by, CompareResult};
use crate::Result;

/// A recursively nested ordered value: either an exact rational scalar or a
/// strictly ascending chain of values of uniform depth.
///
/// `ChainValue`s are the codomain of length functions and of the chain length
/// functions λ*, λ**, … derived from them. Scalars sit at depth 0; each
/// chain layer adds one. An empty chain is compatible with any chain depth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ChainValue {
    Scalar(BigRational),
    Chain(Vec<ChainValue>),
}

impl ChainValue {
    pub fn scalar(value: BigRational) -> ChainValue {
        ChainValue::Scalar(value)
    }

    pub fn integer(value: i64) -> ChainValue {
        ChainValue::Scalar(BigRational::from_integer(value.into()))
    }

    /// Builds a chain value, validating uniform depth and strict ascent.
    pub fn chain(entries: Vec<ChainValue>) -> Result<ChainValue> {
        for w in entries.windows(2) {
            if compare_values(&w[0], &w[1])? != CompareResult::LessThan {
                return Err(Error::InvalidChainValue(format!(
                    "entries not strictly ascending: {} !< {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(ChainValue::Chain(entries))
    }

    pub fn empty_chain() -> ChainValue {
        ChainValue::Chain(Vec::new())
    }

    /// Nesting depth: 0 for scalars, one more than the entries for chains.
    /// The empty chain reports depth 1 but is compatible with any chain depth.
    pub fn depth(&self) -> usize {
        match self {
            ChainValue::Scalar(_) => 0,
            ChainValue::Chain(entries) => 1 + entries.first().map_or(0, ChainValue::depth),
        }
    }

    pub fn as_scalar(&self) -> Option<&BigRational> {
        match self {
            ChainValue::Scalar(r) => Some(r),
            ChainValue::Chain(_) => None,
        }
    }

    pub fn entries(&self) -> Option<&[ChainValue]> {
        match self {
            ChainValue::Scalar(_) => None,
            ChainValue::Chain(entries) => Some(entries),
        }
    }

    /// The maximum entry of a chain value (its last entry), if any.
    pub fn max_entry(&self) -> Option<&ChainValue> {
        self.entries().and_then(|e| e.last())
    }

    /// Appends `entry` to a chain value; `entry` must exceed the current
    /// maximum.
    pub(crate) fn appended(&self, entry: ChainValue) -> Result<ChainValue> {
        let mut entries = match self {
            ChainValue::Chain(entries) => entries.clone(),
            ChainValue::Scalar(_) => {
                return Err(Error::InvalidChainValue(
                    "cannot append to a scalar".to_owned(),
                ))
            }
        };
        if let Some(last) = entries.last() {
            if compare_values(last, &entry)? != CompareResult::LessThan {
                return Err(Error::InvalidChainValue(format!(
                    "appended entry {} does not exceed the maximum {}",
                    entry, last
                )));
            }
        }
        entries.push(entry);
        Ok(ChainValue::Chain(entries))
    }

    fn depths_compatible(&self, other: &ChainValue) -> bool {
        match (self, other) {
            (ChainValue::Scalar(_), ChainValue::Scalar(_)) => true,
            (ChainValue::Chain(a), ChainValue::Chain(b)) => match (a.first(), b.first()) {
                (Some(x), Some(y)) => x.depths_compatible(y),
                _ => true,
            },
            _ => false,
        }
    }
}

impl fmt::Display for ChainValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainValue::Scalar(r) => write!(f, "{}", r),
            ChainValue::Chain(entries) => {
                write!(f, "{{")?;
                for (k, e) in entries.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", e)?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Compares two values of equal depth.
///
/// Scalars compare as rationals; chains compare by the lexicographic rule,
/// recursing into the entries. On uniform-depth values built from rationals
/// the result is a total order and never `Incomparable`.
pub fn compare_values(v: &ChainValue, w: &ChainValue) -> Result<CompareResult> {
    if !v.depths_compatible(w) {
        return Err(Error::DepthMismatch(v.depth(), w.depth()));
    }
    Ok(compare_unchecked(v, w))
}

fn compare_unchecked(v: &ChainValue, w: &ChainValue) -> CompareResult {
    match (v, w) {
        (ChainValue::Scalar(a), ChainValue::Scalar(b)) => match a.cmp(b) {
            std::cmp::Ordering::Less => CompareResult::LessThan,
            std::cmp::Ordering::Equal => CompareResult::Equal,
            std::cmp::Ordering::Greater => CompareResult::GreaterThan,
        },
        (ChainValue::Chain(a), ChainValue::Chain(b)) => {
            lex_compare_by(a, b, compare_unchecked)
        }
        // Unreachable after the depth check.
        _ => CompareResult::Incomparable,
    }
}

/// Lexicographic maximum of a non-empty collection of values.
pub(crate) fn max_value<'a, I>(values: I) -> Result<Option<&'a ChainValue>>
where
    I: IntoIterator<Item = &'a ChainValue>,
{
    let mut best: Option<&ChainValue> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) => {
                if compare_values(v, b)? == CompareResult::GreaterThan {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}
