//! Gabriel-Roiter measures as computable objects.
//!
//! The crate has two halves. The combinatorial half works with finite posets:
//! the lexicographic order on chains ([`order`]), length functions validated
//! against the (L1)-(L3) axioms ([`length`]), and the chain length function
//! λ* together with its iterates, filtrations and axiom checkers
//! ([`measure`]). The categorical half realizes small abelian length
//! categories as quiver representations over a prime field ([`repcat`]) and
//! runs the measure-theoretic characterizations of injective and simple
//! objects on them ([`verify`]).
//!
//! All arithmetic is exact: scalar values are arbitrary-precision rationals
//! and field computations happen in F_p. Every type is immutable after
//! construction and every operation is a pure function of its inputs.

pub mod dot;
pub mod error;
pub mod json;
pub mod length;
pub mod measure;
pub mod order;
pub mod repcat;
pub mod testing;
pub mod verify;

pub use error::Error;
pub use length::{height_function, LengthFunction, ValidationReport};
pub use measure::{GrFiltration, Measure};
pub use order::{Chain, ChainValue, CompareResult, ElementId, Poset};
pub use repcat::{CategoryLengthFunction, Fp, IndPoset, Quiver, Representation};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
