use std::collections::HashMap;
use std::hash::Hash;

use crate::exactalg::{ExactMatrix, FieldSpec, Scalar, SparseVec};
use crate::meataxe::Subspace;

use super::LiftError;

/// Field-independent shape of a subspace in reduced column echelon form:
/// pivot rows plus an equality pattern of the remaining entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractStructure {
    nrows: usize,
    /// Row of the leading 1 of each column.
    pivots: Vec<usize>,
    /// `(row, column, label)` for each non-pivot nonzero entry; labels run over `1..=complexity`.
    fine: Vec<(usize, usize, usize)>,
    complexity: usize,
}

impl AbstractStructure {
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn fine_entries(&self) -> &[(usize, usize, usize)] {
        &self.fine
    }

    pub fn complexity(&self) -> usize {
        self.complexity
    }

    /// Dense coarse matrix: one leading 1 per column.
    pub fn coarse_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0; self.ncols()]; self.nrows];
        for (j, &r) in self.pivots.iter().enumerate() {
            m[r][j] = 1;
        }
        m
    }

    /// Dense fine matrix of labels (0 where there is no fine entry).
    pub fn fine_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.ncols()]; self.nrows];
        for &(r, c, l) in &self.fine {
            m[r][c] = l;
        }
        m
    }

    /// Fine entries of column `j` as `(row, label)`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.fine.iter().filter(move |e| e.1 == j).map(|&(r, _, l)| (r, l))
    }

    /// Build from column vectors (sparse, row index to value) that are already in rcef.
    pub fn from_columns<V: Clone + Eq + Hash>(
        nrows: usize,
        cols: &[Vec<(usize, V)>],
        is_one: impl Fn(&V) -> bool,
    ) -> Result<Self, LiftError> {
        let mut pivots = vec![];
        for c in cols {
            let &(r, ref v) = c.first().ok_or_else(|| LiftError::NotEchelon("zero column".into()))?;
            if !is_one(v) {
                return Err(LiftError::NotEchelon("leading entry is not 1".into()));
            }
            if pivots.last().is_some_and(|&p| p >= r) {
                return Err(LiftError::NotEchelon("pivots not increasing".into()));
            }
            pivots.push(r);
        }
        let mut entries: Vec<(usize, usize, V)> = vec![];
        for (j, c) in cols.iter().enumerate() {
            for (r, v) in c.iter().skip(1) {
                if let Some(k) = pivots.iter().position(|p| p == r) {
                    if k != j {
                        return Err(LiftError::NotEchelon("nonzero entry in a pivot row".into()));
                    }
                }
                entries.push((*r, j, v.clone()));
            }
        }
        // labels by first occurrence in row-major order
        entries.sort_by_key(|&(r, c, _)| (r, c));
        let mut labels: HashMap<V, usize> = HashMap::new();
        let fine = entries
            .into_iter()
            .map(|(r, c, v)| {
                let next = labels.len() + 1;
                let l = *labels.entry(v).or_insert(next);
                (r, c, l)
            })
            .collect::<Vec<_>>();
        let mut fine = fine;
        fine.sort_by_key(|&(r, c, _)| (c, r));
        Ok(AbstractStructure { nrows, pivots, fine, complexity: labels.len() })
    }
}

/// Abstract structure of an exact matrix in reduced column echelon form.
pub fn abstract_structure(m: &ExactMatrix) -> Result<AbstractStructure, LiftError> {
    let cols: Vec<Vec<(usize, Scalar)>> = m.columns().iter().map(|c| c.iter().map(|(r, v)| (*r, v.clone())).collect()).collect();
    AbstractStructure::from_columns(m.nrows(), &cols, Scalar::is_one)
}

/// Abstract structure of a subspace over `F_p` in its rcef basis.
pub fn abstract_structure_fp(s: &Subspace) -> AbstractStructure {
    let cols: Vec<Vec<(usize, u64)>> =
        s.basis().iter().map(|v| v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect()).collect();
    AbstractStructure::from_columns(s.ambient(), &cols, |&x| x == 1).expect("subspace basis is in rcef")
}

/// `cM + theta*(fM)` for nonzero, pairwise distinct label values.
pub fn concretize(a: &AbstractStructure, field: &FieldSpec, theta: &[Scalar]) -> Result<ExactMatrix, LiftError> {
    if theta.len() != a.complexity {
        return Err(LiftError::Concretize(format!("need {} values, got {}", a.complexity, theta.len())));
    }
    if theta.iter().any(Scalar::is_zero) {
        return Err(LiftError::Concretize("zero label value".into()));
    }
    for i in 0..theta.len() {
        if theta[..i].contains(&theta[i]) {
            return Err(LiftError::Concretize("label values are not distinct".into()));
        }
    }
    let mut cols: Vec<SparseVec> = a.pivots.iter().map(|&r| [(r, Scalar::one(field))].into_iter().collect()).collect();
    for &(r, c, l) in &a.fine {
        cols[c].insert(r, theta[l - 1].clone());
    }
    Ok(ExactMatrix::from_columns(field, a.nrows, cols))
}
