//! Front end for the `rrca` crate: parameter parsing, Gordon records and
//! their comparison against a shipped database of expected results.

pub mod commands;
pub mod expected;
pub mod params;
pub mod record;

use thiserror::Error;

pub use params::{parse_irrep, resolve_parameter, ParameterInput, ResolvedParameter};
pub use record::{compare, Expected, GordonRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] rrca::refgroup::GroupError),
    #[error("{0}")]
    Computation(String),
    #[error("record: {0}")]
    Record(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for malformed input, 1 for everything that failed while computing or comparing.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Group(rrca::refgroup::GroupError::Unknown(_)) => 2,
            _ => 1,
        }
    }
}
