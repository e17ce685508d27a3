//! Dense linear algebra over a prime field `F_p` with `p < 2^32`.

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// `y += a * x`.
pub fn axpy(y: &mut [u64], a: u64, x: &[u64], p: u64) {
    if a == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = (*yi + mul_mod(a, xi, p)) % p;
        }
    }
}

/// Row-major dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    p: u64,
    nrows: usize,
    ncols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zero(p: u64, nrows: usize, ncols: usize) -> Self {
        FpMat { p, nrows, ncols, data: vec![0; nrows * ncols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, ncols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zero(p, rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn from_columns(p: u64, nrows: usize, cols: &[Vec<u64>]) -> Self {
        Self::from_rows(p, nrows, cols).transpose()
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.ncols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.p, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.data[j * self.nrows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.ncols, other.nrows);
        let p = self.p;
        let mut out = FpMat::zero(p, self.nrows, other.ncols);
        for i in 0..self.nrows {
            let mut acc = vec![0u128; other.ncols];
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    let b = other.data[k * other.ncols + j];
                    if b != 0 {
                        *slot += (a * b) as u128;
                    }
                }
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|v| *v %= p as u128);
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * other.ncols + j] = (v % p as u128) as u64;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        (0..self.nrows)
            .map(|i| {
                let s: u128 = self.row(i).iter().zip(v).map(|(&a, &b)| (a * b) as u128).sum();
                (s % p as u128) as u64
            })
            .collect()
    }

    pub fn add(&self, other: &FpMat) -> FpMat {
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + b) % self.p;
        }
        out
    }

    pub fn sub(&self, other: &FpMat) -> FpMat {
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + self.p - b) % self.p;
        }
        out
    }

    pub fn scale(&self, a: u64) -> FpMat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = mul_mod(*v, a, self.p);
        }
        out
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: u64) -> FpMat {
        let mut out = self.clone();
        for i in 0..self.nrows.min(self.ncols) {
            let v = out.get(i, i);
            out.set(i, i, v + self.p - lambda % self.p);
        }
        out
    }

    /// Basis of `{v : self v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut rows: Vec<Vec<u64>> = (0..self.nrows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots: Vec<(usize, usize)> = vec![];
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
            rows.swap(r, k);
            let inv = inv_mod(rows[r][c], p);
            rows[r].iter_mut().for_each(|v| *v = mul_mod(*v, inv, p));
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k != r && row[c] != 0 {
                    let f = p - row[c];
                    axpy(row, f, &pivot_row, p);
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        (0..self.ncols)
            .filter(|c| !pivot_cols.contains(c))
            .map(|free| {
                let mut v = vec![0; self.ncols];
                v[free] = 1;
                for &(r, c) in &pivots {
                    v[c] = (p - rows[r][free]) % p;
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.ncols - self.nullspace().len()
    }

    pub fn inverse(&self) -> Option<FpMat> {
        let n = self.nrows;
        let mut s = Subspace::new(self.p, 2 * n);
        for i in 0..n {
            let mut r = self.row(i).to_vec();
            r.extend((0..n).map(|j| u64::from(i == j)));
            s.insert(r);
        }
        if (0..n).any(|c| !s.pivots.contains(&c)) {
            return None;
        }
        let rows: Vec<Vec<u64>> = s.basis().iter().map(|r| r[n..].to_vec()).collect();
        Some(FpMat::from_rows(self.p, n, &rows))
    }

    /// Characteristic polynomial `det(xI - self)`, constant term first.
    pub fn charpoly(&self) -> Vec<u64> {
        let n = self.nrows;
        let p = self.p;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let inv = inv_mod(h.get(m, m - 1), p);
            for i in m + 1..n {
                let u = mul_mod(h.get(i, m - 1), inv, p);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = (h.get(i, j) + p - mul_mod(u, h.get(m, j), p)) % p;
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = (h.get(j, m) + mul_mod(u, h.get(j, i), p)) % p;
                    h.set(j, m, v);
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = vec![0u64; k + 2];
            for (d, &c) in polys[k].iter().enumerate() {
                next[d + 1] = (next[d + 1] + c) % p;
                next[d] = (next[d] + p - mul_mod(h.get(k, k), c, p)) % p;
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = mul_mod(prod, h.get(i + 1, i), p);
                if prod == 0 {
                    break;
                }
                let coef = mul_mod(h.get(i, k), prod, p);
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = (next[d] + p - mul_mod(coef, c, p)) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// Row space in reduced echelon form: each basis vector has leading entry 1 and
/// is zero at every other pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    p: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(p: u64, dim: usize) -> Self {
        Subspace { p, dim, rows: vec![], pivots: vec![] }
    }

    pub fn spanned_by(p: u64, dim: usize, vecs: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut s = Self::new(p, dim);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis sorted by pivot position.
    pub fn basis(&self) -> Vec<Vec<u64>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c] != 0 {
                let f = self.p - v[c];
                axpy(&mut v, f, r, self.p);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Add `v`; returns true when the span grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(r[c], self.p);
        r.iter_mut().for_each(|x| *x = mul_mod(*x, inv, self.p));
        for row in self.rows.iter_mut() {
            if row[c] != 0 {
                let f = self.p - row[c];
                axpy(row, f, &r, self.p);
            }
        }
        self.rows.push(r);
        self.pivots.push(c);
        true
    }

    /// Coordinates of `v` (assumed in the span) in the pivot-sorted basis.
    pub fn coordinates(&self, v: &[u64]) -> Vec<u64> {
        let mut piv = self.pivots.clone();
        piv.sort_unstable();
        piv.iter().map(|&c| v[c]).collect()
    }

    /// `{w : <w, u> = 0 for all u in self}`.
    pub fn annihilator(&self) -> Subspace {
        let m = FpMat::from_rows(self.p, self.dim, &self.rows);
        Subspace::spanned_by(self.p, self.dim, m.nullspace())
    }
}
