//! Rational Cherednik algebras `H_{t,c}` in PBW form: parameters, products,
//! the Euler element, Euler families and Poisson brackets of central elements.

mod algebra;
mod euler;
mod param;
mod pbw;
mod rewrite;

use thiserror::Error;

use crate::exactalg::ExactError;

pub use algebra::{CherednikAlgebra, Commutator};
pub use euler::{euler_families, euler_scalar, poisson_bracket};
pub use param::{
    ggor_on_hyperplane, ggor_to_c, ggor_variable_names, named_parametrisation, orbit_orders, CherednikParameter,
    GgorParameter,
};
pub use pbw::PbwElement;
pub use rewrite::naive_rewrite_product;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CherednikError {
    #[error("parameter: {0}")]
    Parameter(String),
    #[error("not central: {0}")]
    NonCentral(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[cfg(test)]
mod tests;
