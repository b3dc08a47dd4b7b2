//! Error type shared by all modules.

use thiserror::Error;

use crate::length::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("empty element id")]
    EmptyElementId,
    #[error("relation closure violates antisymmetry: `{0}` and `{1}` lie on a cycle")]
    CycleDetected(String, String),
    #[error("not a chain: {0}")]
    NotAChain(String),
    #[error("chain values have mismatched depths ({0} vs {1})")]
    DepthMismatch(usize, usize),
    #[error("malformed chain value: {0}")]
    InvalidChainValue(String),
    #[error("chain member `{0}` is not a positive integer")]
    NonPositiveMember(String),
    #[error("candidate map is not a length function")]
    InvalidLengthFunction(ValidationReport),
    #[error("length functions live on different posets")]
    PosetMismatch,
    #[error("length function takes non-integer values")]
    NonIntegerValues,
    #[error("iteration count {requested} exceeds the cap {cap}")]
    IterationBudgetExceeded { requested: usize, cap: usize },
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("field characteristic {0} is not a prime at most 7")]
    FieldUnsupported(u8),
    #[error("quiver is malformed: {0}")]
    MalformedQuiver(String),
    #[error("representations live over different quivers or fields")]
    QuiverMismatch,
    #[error("operation is undefined on the zero representation")]
    ZeroRepresentation,
    #[error("Hom space too large to scan (dimension {0})")]
    HomSpaceTooLarge(usize),
    #[error("enumeration budget exceeded at dimension vector {0:?}")]
    BudgetExceeded(Vec<usize>),
    #[error("category is truncated at length {0}; result would not be exact")]
    TruncatedCategory(usize),
    #[error("summand bound {max_summands} cannot fit within enumeration length {max_len}")]
    BoundTooTight { max_summands: usize, max_len: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}
