//! From modular radicals to exact heads: specialization to finite fields,
//! abstract structures of echelon bases, the linear search for submodules with
//! a given structure, and the decomposition of Verma modules family by family.

mod esystem;
mod gordon;
mod heads;
mod modfinder;
mod spec;
mod structure;

use thiserror::Error;

use crate::cherednik::CherednikError;
use crate::meataxe::MeatAxeError;
use crate::verma::VermaError;

pub use esystem::{build_esystem, column_degrees, Affine, ESystem, Equation};
pub use gordon::{gordon, poincare_series, FamilyRun, GordonOptions, GordonResult};
pub use heads::{decompose_family, head_and_radical, verma_families, FamilyDecomposition, HeadResult};
pub use modfinder::{modfinder, modfinder_with_stats, ModFinderStats};
pub use spec::{draw_specialization, specialize_module, DrawPolicy, FiniteFieldSpec};
pub use structure::{abstract_structure, abstract_structure_fp, concretize, AbstractStructure};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("specialization: {0}")]
    Specialization(String),
    #[error("not in reduced column echelon form: {0}")]
    NotEchelon(String),
    #[error("concretization: {0}")]
    Concretize(String),
    #[error("column {0} is not homogeneous")]
    NonHomogeneous(usize),
    #[error("no submodule with this structure")]
    NoSubmodule,
    #[error("system is not solvable by linear steps")]
    NotLinearlySolvable,
    #[error("quotient by the lifted radical is not simple")]
    HeadNotSimple,
    #[error("constituent of dimension {dim} in member {member} matches {matches} heads")]
    UnmatchedConstituent { member: usize, dim: usize, matches: usize },
    #[error("member {member}: constituents add up to dimension {found}, expected {expected}")]
    DimensionAudit { member: usize, expected: usize, found: usize },
    #[error("family {members:?} failed on every specialization; last error: {last}")]
    FamilyFailed { members: Vec<usize>, last: Box<LiftError> },
    #[error("parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    MeatAxe(#[from] MeatAxeError),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Cherednik(#[from] CherednikError),
    #[error(transparent)]
    Exact(#[from] crate::exactalg::ExactError),
}
