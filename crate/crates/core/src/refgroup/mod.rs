//! Finite complex reflection groups: element enumeration, reflections and
//! their pairings, invariants, coinvariant algebras, irreducible
//! representations and their fake-degree labels.

mod characters;
mod coinvariant;
mod data;
mod group;

use std::path::{Path, PathBuf};

use thiserror::Error;

pub use characters::{fake_degree, IrrepLabel};
pub use coinvariant::{act_on_poly, fundamental_invariants, jacobian_determinant, CoinvariantAlgebra, Side};
pub use data::{parse_group_data, GroupData, Parametrisation};
pub use group::{Irrep, Reflection, ReflectionGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group data: {0}")]
    Data(String),
    #[error("irrep {0}: {1}")]
    Irrep(usize, String),
    #[error("invariants: {0}")]
    Invariants(String),
    #[error("unknown group {0}")]
    Unknown(String),
}

/// Environment variable naming a directory of `<id>.grp` files.
pub const DATA_DIR_ENV: &str = "RRCA_GROUP_DIR";

const SHIPPED: &[(&str, &str)] = &[
    ("C2", include_str!("../../data/C2.grp")),
    ("S3", include_str!("../../data/S3.grp")),
    ("B2", include_str!("../../data/B2.grp")),
    ("G4", include_str!("../../data/G4.grp")),
];

/// Identifiers of the groups shipped with the crate.
pub fn shipped_groups() -> Vec<&'static str> {
    SHIPPED.iter().map(|(k, _)| *k).collect()
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(PathBuf::from)
}

/// Load a group by identifier: from the data directory if set, else the shipped copy.
pub fn load_group(id: &str) -> Result<ReflectionGroup, GroupError> {
    if let Some(dir) = data_dir() {
        let path = dir.join(format!("{id}.grp"));
        if path.exists() {
            return load_group_file(&path);
        }
    }
    let text = SHIPPED
        .iter()
        .find(|(k, _)| *k == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| GroupError::Unknown(id.to_string()))?;
    ReflectionGroup::from_data(parse_group_data(text)?)
}

pub fn load_group_file(path: &Path) -> Result<ReflectionGroup, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Data(format!("{}: {e}", path.display())))?;
    ReflectionGroup::from_data(parse_group_data(&text)?)
}

#[cfg(test)]
mod tests;
