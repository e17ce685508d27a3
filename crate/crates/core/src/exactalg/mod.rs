//! Exact scalars over a small tower of fields and rings, and sparse linear
//! algebra over any field level of that tower.

mod field;
mod matrix;
mod parse;
mod scalar;
mod unipoly;

use thiserror::Error;

pub use field::{cyclotomic_polynomial, is_prime, FieldKind, FieldSpec, Rat};
pub use matrix::{nullspace, rcef, solve, sv_axpy, sv_scale, Echelon, ExactMatrix, SparseVec};
pub use parse::parse_field;
pub use scalar::{
    ground_denominator, modulus_roots_mod_p, reduce_mod_prime, scalar_arithmetic, ArithOp, Scalar,
    Specialization,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
