//! A desk-scale realization of abelian length categories: finite-dimensional
//! representations of acyclic quivers over a small prime field.
//!
//! Everything here is exhaustively decidable: morphism spaces are nullspaces
//! of intertwining systems, monomorphisms are found by scanning Hom spaces,
//! and isomorphism classes are enumerated by quotienting matrix tuples by
//! base change at every vertex.

pub(crate) mod enumerate;
mod field;
mod quiver;
pub(crate) mod rep;

pub use enumerate::{enumerate_ind, IndClass, IndPoset};
pub use field::{Fp, FpMat};
pub use quiver::Quiver;
pub use rep::{
    decompose, end_basis, exists_mono, hom_basis, is_indecomposable, is_isomorphic,
    socle_simples, Morphism, Representation,
};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

/// A length function on the category, determined by its positive values on
/// the vertex simples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryLengthFunction {
    simple_values: Vec<BigRational>,
}

impl CategoryLengthFunction {
    pub fn new(simple_values: Vec<BigRational>) -> Result<CategoryLengthFunction> {
        if simple_values.iter().any(|v| v <= &BigRational::zero()) {
            return Err(Error::InvalidInput(
                "simple values must be positive".to_owned(),
            ));
        }
        Ok(CategoryLengthFunction { simple_values })
    }

    /// ℓ1: composition length; value 1 on every simple.
    pub fn composition_length(vertex_count: usize) -> CategoryLengthFunction {
        CategoryLengthFunction {
            simple_values: vec![BigRational::from_integer(1.into()); vertex_count],
        }
    }

    /// ℓ_S: value 1 on the simple at `vertex`, 2 on every other simple. The
    /// witness used for detecting injectives (and, dually, simples).
    pub fn socle_witness(vertex_count: usize, vertex: usize) -> CategoryLengthFunction {
        let simple_values = (0..vertex_count)
            .map(|v| BigRational::from_integer(if v == vertex { 1 } else { 2 }.into()))
            .collect();
        CategoryLengthFunction { simple_values }
    }

    pub fn simple_value(&self, vertex: usize) -> &BigRational {
        &self.simple_values[vertex]
    }

    pub fn vertex_count(&self) -> usize {
        self.simple_values.len()
    }
}

/// `ℓ(X) = Σ_v dim_v(X) · ℓ(S_v)`: composition factors of a representation
/// of an acyclic quiver are the vertex simples, with multiplicity the
/// dimension at the vertex.
pub fn module_length(rep: &Representation, ell: &CategoryLengthFunction) -> Result<BigRational> {
    if ell.vertex_count() != rep.quiver().vertex_count() {
        return Err(Error::QuiverMismatch);
    }
    let mut total = BigRational::zero();
    for (v, &d) in rep.dims().iter().enumerate() {
        total += BigRational::from_integer((d as i64).into()) * ell.simple_value(v);
    }
    Ok(total)
}

#[cfg(test)]
pub(crate) mod tests;
