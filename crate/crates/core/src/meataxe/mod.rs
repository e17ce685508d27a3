//! MeatAxe over prime fields: irreducibility, composition factors,
//! homomorphism spaces and radicals.

mod fp;
mod fppoly;
mod module;

pub use fp::{inv_mod, mul_mod, pow_mod, FpMat, Subspace};
pub use fppoly::roots;
pub use module::{chop, hom_space, is_irreducible, is_isomorphic, radical, FpModule, Irreducibility};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MeatAxeError {
    #[error("random search exhausted; retry with another seed")]
    Exhausted,
    #[error("zero module")]
    ZeroModule,
    #[error("not a prime field: {0}")]
    NotPrimeField(String),
    #[error("module basis is not homogeneous")]
    Ungraded,
    #[error("{0}")]
    Graded(String),
}
