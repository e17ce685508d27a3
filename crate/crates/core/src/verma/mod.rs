//! Graded modules over generator-presented algebras, Verma modules of the
//! restricted rational Cherednik algebra, and their graded characters.

mod character;
mod construct;
mod module;
mod xtable;

pub use character::{graded_character, NatPoly};
pub use construct::{check_module_relations, module_relation_failure, verma_module, verma_module_with, StandardLayout};
pub use module::GradedModule;
pub use xtable::XTable;

use thiserror::Error;

use crate::cherednik::CherednikError;
use crate::exactalg::ExactError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VermaError {
    #[error("grading violated: {0}")]
    Grading(String),
    #[error("seed vector is not homogeneous")]
    NonHomogeneous,
    #[error("subspace is not invariant under generator {0}")]
    NotInvariant(usize),
    #[error("graded character: {0}")]
    Character(String),
    #[error("module text: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Cherednik(#[from] CherednikError),
}
