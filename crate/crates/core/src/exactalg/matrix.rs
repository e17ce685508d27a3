use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{ExactError, FieldSpec, Scalar};

/// Sparse vector: index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `y += a * x`, dropping cancellations.
pub fn sv_axpy(y: &mut SparseVec, a: &Scalar, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (i, xi) in x {
        let t = a * xi;
        match y.get_mut(i) {
            Some(e) => {
                let s = &*e + &t;
                if s.is_zero() {
                    y.remove(i);
                } else {
                    *e = s;
                }
            }
            None => {
                y.insert(*i, t);
            }
        }
    }
}

pub fn sv_scale(x: &SparseVec, a: &Scalar) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(i, v)| (*i, v * a)).collect()
}

/// Sparse matrix over a tower level, stored by columns. No stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: FieldSpec,
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zero(field: &FieldSpec, nrows: usize, ncols: usize) -> Self {
        ExactMatrix { field: field.clone(), nrows, ncols, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.cols[i].insert(i, Scalar::one(field));
        }
        m
    }

    pub fn from_columns(field: &FieldSpec, nrows: usize, cols: Vec<SparseVec>) -> Self {
        let cols = cols
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect::<Vec<SparseVec>>();
        debug_assert!(cols.iter().all(|c| c.keys().all(|&i| i < nrows)));
        ExactMatrix { field: field.clone(), nrows, ncols: cols.len(), cols }
    }

    pub fn from_rows(field: &FieldSpec, rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(field, nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged rows");
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(&i).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.nrows && j < self.ncols);
        if v.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.nrows];
        for (i, j, v) in self.entries() {
            rows[i].insert(j, v.clone());
        }
        rows
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix { field: self.field.clone(), nrows: self.ncols, ncols: self.nrows, cols: self.rows() }
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut y = SparseVec::new();
        for (j, xj) in x {
            sv_axpy(&mut y, xj, &self.cols[*j]);
        }
        y
    }

    pub fn mul(&self, other: &ExactMatrix) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let cols = other.cols.iter().map(|c| self.mul_vec(c)).collect();
        ExactMatrix { field: self.field.clone(), nrows: self.nrows, ncols: other.ncols, cols }
    }

    pub fn add(&self, other: &ExactMatrix) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let one = Scalar::one(&self.field);
        let mut out = self.clone();
        for (j, c) in other.cols.iter().enumerate() {
            sv_axpy(&mut out.cols[j], &one, c);
        }
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> Self {
        self.add(&other.scale(&-Scalar::one(&self.field)))
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        let cols = self.cols.iter().map(|c| sv_scale(c, a)).collect();
        ExactMatrix { field: self.field.clone(), nrows: self.nrows, ncols: self.ncols, cols }
    }

    /// Entrywise image under `f` into another field.
    pub fn map<F>(&self, target: &FieldSpec, mut f: F) -> Result<Self, ExactError>
    where
        F: FnMut(&Scalar) -> Result<Scalar, ExactError>,
    {
        let mut cols = Vec::with_capacity(self.ncols);
        for c in &self.cols {
            let mut nc = SparseVec::new();
            for (i, v) in c {
                let w = f(v)?;
                if !w.is_zero() {
                    nc.insert(*i, w);
                }
            }
            cols.push(nc);
        }
        Ok(ExactMatrix { field: target.clone(), nrows: self.nrows, ncols: self.ncols, cols })
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<Self, ExactError> {
        self.map(target, |v| v.embed(target))
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(a, b)| (*b, a)).collect();
        let cs = cols
            .iter()
            .map(|&j| self.cols[j].iter().filter_map(|(i, v)| pos.get(i).map(|&a| (a, v.clone()))).collect())
            .collect();
        ExactMatrix { field: self.field.clone(), nrows: rows.len(), ncols: cols.len(), cols: cs }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::zero(&self.field); self.ncols]; self.nrows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero(&self.field);
        for i in 0..self.nrows.min(self.ncols) {
            if let Some(v) = self.cols[i].get(&i) {
                t = &t + v;
            }
        }
        t
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.nrows != self.ncols {
            return Err(ExactError::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut b = SparseVec::new();
            b.insert(j, Scalar::one(&self.field));
            let (x, null) = solve(self, &b)?.ok_or_else(|| ExactError::Domain("singular matrix".into()))?;
            if null.ncols() > 0 {
                return Err(ExactError::Domain("singular matrix".into()));
            }
            cols.push(x);
        }
        Ok(ExactMatrix { field: self.field.clone(), nrows: n, ncols: n, cols })
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        let n = self.nrows;
        let mut a = self.to_dense();
        let mut det = Scalar::one(&self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Scalar::zero(&self.field);
            };
            if p != c {
                a.swap(p, c);
                det = -&det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] * &inv;
                for k in c..n {
                    let t = &f * &a[c][k];
                    a[r][k] = &a[r][k] - &t;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(&self.field, self.nrows);
        for c in &self.cols {
            e.insert(c.clone());
        }
        e.len()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.to_dense();
        write!(f, "[")?;
        for (i, r) in d.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained reduced echelon basis of a subspace.
///
/// Every stored vector has leading (lowest-index) entry 1 and is zero at the
/// leading index of every other stored vector.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    dim: usize,
    vecs: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: &FieldSpec, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, vecs: vec![], pivots: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivot_rows(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivots.contains_key(&i)
    }

    /// Remainder of `v` modulo the span; zero exactly when `v` lies in it.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<usize> = v.keys().filter(|i| self.pivots.contains_key(i)).copied().collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                let b = &self.vecs[self.pivots[&p]];
                sv_axpy(&mut v, &-&c, b);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Add `v` to the span; returns the new pivot index when the span grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (&p, lead) = r.iter().next()?;
        let r = sv_scale(&r, &lead.inv().expect("nonzero leading entry"));
        for b in self.vecs.iter_mut() {
            if let Some(c) = b.get(&p).cloned() {
                sv_axpy(b, &-&c, &r);
            }
        }
        self.pivots.insert(p, self.vecs.len());
        self.vecs.push(r);
        Some(p)
    }

    /// The unique reduced column echelon form, columns sorted by pivot.
    pub fn to_matrix(&self) -> ExactMatrix {
        let cols = self.pivots.values().map(|&k| self.vecs[k].clone()).collect();
        ExactMatrix::from_columns(&self.field, self.dim, cols)
    }

    /// Coordinates of `v` (assumed in the span) w.r.t. the sorted basis.
    pub fn coordinates(&self, v: &SparseVec) -> SparseVec {
        let order: BTreeMap<usize, usize> = self.pivots.keys().enumerate().map(|(a, p)| (*p, a)).collect();
        v.iter().filter_map(|(i, x)| order.get(i).map(|&a| (a, x.clone()))).collect()
    }
}

/// Reduced column echelon form of the column span of `m`.
pub fn rcef(m: &ExactMatrix) -> ExactMatrix {
    let mut e = Echelon::new(m.field(), m.nrows());
    for c in m.columns() {
        e.insert(c.clone());
    }
    e.to_matrix()
}

/// Row-reduce the rows of `m` (as vectors indexed by column).
fn row_reduce(m: &ExactMatrix, extra: Option<&SparseVec>) -> Echelon {
    let width = m.ncols() + usize::from(extra.is_some());
    let mut rows = m.rows();
    if let Some(b) = extra {
        for (i, v) in b {
            rows[*i].insert(m.ncols(), v.clone());
        }
    }
    let mut e = Echelon::new(m.field(), width);
    for r in rows {
        e.insert(r);
    }
    e
}

fn null_from_echelon(e: &Echelon, field: &FieldSpec, n: usize) -> ExactMatrix {
    let pivots: BTreeSet<usize> = e.pivot_rows().copied().filter(|&p| p < n).collect();
    let mut basis = vec![];
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = SparseVec::new();
        v.insert(f, Scalar::one(field));
        for (p, &k) in &e.pivots {
            if *p >= n {
                continue;
            }
            if let Some(c) = e.vecs[k].get(&f) {
                v.insert(*p, -c);
            }
        }
        basis.push(v);
    }
    rcef(&ExactMatrix::from_columns(field, n, basis))
}

/// Basis of `{x : m x = 0}` in reduced column echelon form.
pub fn nullspace(m: &ExactMatrix) -> ExactMatrix {
    let e = row_reduce(m, None);
    null_from_echelon(&e, m.field(), m.ncols())
}

/// Particular solution of `m x = b` together with a nullspace basis, or
/// `None` when the system is inconsistent.
pub fn solve(m: &ExactMatrix, b: &SparseVec) -> Result<Option<(SparseVec, ExactMatrix)>, ExactError> {
    let n = m.ncols();
    let e = row_reduce(m, Some(b));
    if e.is_pivot(n) {
        return Ok(None);
    }
    let mut x = SparseVec::new();
    for (p, &k) in &e.pivots {
        if let Some(c) = e.vecs[k].get(&n) {
            x.insert(*p, c.clone());
        }
    }
    Ok(Some((x, null_from_echelon(&e, m.field(), n))))
}
