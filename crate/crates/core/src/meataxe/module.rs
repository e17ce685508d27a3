use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactalg::{ExactMatrix, FieldKind, FieldSpec, Scalar};
use crate::verma::GradedModule;

use super::fp::{FpMat, Subspace};
use super::fppoly;
use super::MeatAxeError;

/// A module over `F_p` for the free algebra on its generator matrices.
///
/// Column `i` of `gens[k]` is `a_k v_i`. Degrees are kept while the basis is
/// known to be homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    p: u64,
    dim: usize,
    gens: Vec<FpMat>,
    degrees: Option<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

impl FpModule {
    pub fn new(p: u64, dim: usize, gens: Vec<FpMat>, degrees: Option<Vec<i32>>) -> Self {
        assert!(gens.iter().all(|g| g.nrows() == dim && g.ncols() == dim && g.prime() == p));
        FpModule { p, dim, gens, degrees }
    }

    pub fn from_graded(m: &GradedModule) -> Result<Self, MeatAxeError> {
        let FieldKind::PrimeField { p } = m.field().kind() else {
            return Err(MeatAxeError::NotPrimeField(m.field().to_string()));
        };
        let p = *p;
        let gens = m
            .actions()
            .iter()
            .map(|a| {
                let mut d = FpMat::zero(p, m.dim(), m.dim());
                for (r, c, v) in a.entries() {
                    d.set(r, c, v.to_fp().expect("prime field entry"));
                }
                d
            })
            .collect();
        Ok(FpModule { p, dim: m.dim(), gens, degrees: Some(m.degrees().to_vec()) })
    }

    /// Back to a sparse graded module; needs a homogeneous basis.
    pub fn to_graded(&self, names: Vec<String>, generator_degrees: Vec<i32>) -> Result<GradedModule, MeatAxeError> {
        let degrees = self.degrees.clone().ok_or(MeatAxeError::Ungraded)?;
        let f = FieldSpec::prime_field(self.p).expect("prime");
        let actions = self
            .gens
            .iter()
            .map(|g| {
                let cols = (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .filter(|&i| g.get(i, j) != 0)
                            .map(|i| (i, Scalar::from_int(&f, g.get(i, j) as i64)))
                            .collect()
                    })
                    .collect();
                ExactMatrix::from_columns(&f, self.dim, cols)
            })
            .collect();
        GradedModule::new(&f, degrees, names, generator_degrees, actions).map_err(|e| MeatAxeError::Graded(e.to_string()))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FpMat] {
        &self.gens
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    /// The transposed action, a module for the opposite algebra.
    pub fn dual(&self) -> FpModule {
        FpModule { p: self.p, dim: self.dim, gens: self.gens.iter().map(FpMat::transpose).collect(), degrees: None }
    }

    /// Change of basis: the module on the columns of `b` (invertible).
    pub fn conjugate(&self, b: &FpMat) -> FpModule {
        let bi = b.inverse().expect("invertible change of basis");
        FpModule { p: self.p, dim: self.dim, gens: self.gens.iter().map(|g| bi.mul(g).mul(b)).collect(), degrees: None }
    }

    /// Smallest invariant subspace containing `seeds`.
    pub fn spin(&self, seeds: &[Vec<u64>]) -> Subspace {
        let mut s = Subspace::new(self.p, self.dim);
        let mut queue = vec![];
        for v in seeds {
            if s.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.mul_vec(&v);
                if s.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        s
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        u.basis().iter().all(|v| self.gens.iter().all(|g| u.contains(&g.mul_vec(v))))
    }

    fn homogeneous_degree(&self, v: &[u64]) -> Option<i32> {
        let d = self.degrees.as_ref()?;
        let mut it = v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| d[i]);
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }

    /// Action on an invariant subspace, in its pivot-sorted basis.
    pub fn submodule(&self, u: &Subspace) -> FpModule {
        let basis = u.basis();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<u64>> = basis.iter().map(|b| u.coordinates(&g.mul_vec(b))).collect();
                FpMat::from_columns(self.p, basis.len(), &cols)
            })
            .collect();
        let degrees = basis.iter().map(|b| self.homogeneous_degree(b)).collect::<Option<Vec<_>>>();
        FpModule { p: self.p, dim: basis.len(), gens, degrees }
    }

    /// Action on `M / U`, on the unit vectors that are not pivots of `U`.
    pub fn quotient(&self, u: &Subspace) -> FpModule {
        let keep: Vec<usize> = (0..self.dim).filter(|i| !u.pivots().contains(i)).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<u64>> = keep
                    .iter()
                    .map(|&i| {
                        let r = u.reduce(g.col(i));
                        keep.iter().map(|&k| r[k]).collect()
                    })
                    .collect();
                FpMat::from_columns(self.p, keep.len(), &cols)
            })
            .collect();
        let graded = u.basis().iter().all(|b| self.homogeneous_degree(b).is_some());
        let degrees = match (&self.degrees, graded) {
            (Some(d), true) => Some(keep.iter().map(|&i| d[i]).collect()),
            _ => None,
        };
        FpModule { p: self.p, dim: keep.len(), gens, degrees }
    }

    fn random_vector<R: Rng>(&self, basis: &[Vec<u64>], rng: &mut R) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        for b in basis {
            super::fp::axpy(&mut v, rng.gen_range(1..self.p), b, self.p);
        }
        v
    }
}

/// Pool of algebra elements grown by random products, for Norton's test.
struct ElementPool {
    pool: Vec<FpMat>,
}

impl ElementPool {
    fn new(m: &FpModule) -> Self {
        let mut pool = m.gens.clone();
        if pool.is_empty() {
            pool.push(FpMat::zero(m.p, m.dim, m.dim));
        }
        ElementPool { pool }
    }

    fn draw<R: Rng>(&mut self, p: u64, rng: &mut R) -> FpMat {
        let a = self.pool.choose(rng).unwrap().clone();
        let b = self.pool.choose(rng).unwrap();
        let prod = a.mul(b);
        if self.pool.len() < 16 {
            self.pool.push(prod.clone());
        } else {
            let i = rng.gen_range(0..self.pool.len());
            self.pool[i] = prod.clone();
        }
        let mut theta = prod;
        for _ in 0..2 {
            let c = self.pool.choose(rng).unwrap();
            theta = theta.add(&c.scale(rng.gen_range(0..p)));
        }
        theta
    }
}

const NORTON_TRIALS: usize = 400;

/// Norton's irreducibility test. Never wrong; gives up after a fixed number of draws.
pub fn is_irreducible<R: Rng>(m: &FpModule, rng: &mut R) -> Result<Irreducibility, MeatAxeError> {
    if m.dim == 0 {
        return Err(MeatAxeError::ZeroModule);
    }
    if m.dim == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let dual = m.dual();
    let mut pool = ElementPool::new(m);
    for _ in 0..NORTON_TRIALS {
        let theta = pool.draw(m.p, rng);
        let roots = fppoly::roots(&theta.charpoly(), m.p, rng);
        let Some(&lambda) = roots.choose(rng) else { continue };
        let shifted = theta.shift(lambda);
        let null = shifted.nullspace();
        let v = m.random_vector(&null, rng);
        let s = m.spin(&[v]);
        if s.len() < m.dim {
            return Ok(Irreducibility::Reducible(s));
        }
        if null.len() == 1 {
            let tnull = shifted.transpose().nullspace();
            let w = dual.spin(&tnull);
            if w.len() < m.dim {
                return Ok(Irreducibility::Reducible(w.annihilator()));
            }
            return Ok(Irreducibility::Irreducible);
        }
    }
    Err(MeatAxeError::Exhausted)
}

/// Composition factors with multiplicities, pairwise non-isomorphic.
pub fn chop<R: Rng>(m: &FpModule, rng: &mut R) -> Result<Vec<(FpModule, usize)>, MeatAxeError> {
    let mut factors: Vec<(FpModule, usize)> = vec![];
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim == 0 {
            continue;
        }
        match is_irreducible(&x, rng)? {
            Irreducibility::Reducible(u) => {
                stack.push(x.quotient(&u));
                stack.push(x.submodule(&u));
            }
            Irreducibility::Irreducible => match factors.iter_mut().find(|(s, _)| is_isomorphic(s, &x)) {
                Some((_, k)) => *k += 1,
                None => factors.push((x, 1)),
            },
        }
    }
    Ok(factors)
}

/// Basis of `Hom(M, N)` as `dim N x dim M` matrices.
pub fn hom_space(m: &FpModule, n: &FpModule) -> Vec<FpMat> {
    assert_eq!(m.p, n.p);
    assert_eq!(m.gens.len(), n.gens.len());
    let p = m.p;
    if m.dim == 0 || n.dim == 0 {
        return vec![];
    }
    // standard basis of M: each vector is a seed or a generator applied to an earlier one
    enum Origin {
        Seed(usize),
        Image(usize, usize),
    }
    let mut span = Subspace::new(p, m.dim);
    let mut basis: Vec<Vec<u64>> = vec![];
    let mut origin = vec![];
    let mut seeds = 0;
    let mut next = 0;
    for e in 0..m.dim {
        let mut unit = vec![0; m.dim];
        unit[e] = 1;
        if !span.insert(unit.clone()) {
            continue;
        }
        basis.push(unit);
        origin.push(Origin::Seed(seeds));
        seeds += 1;
        while next < basis.len() {
            for (k, g) in m.gens.iter().enumerate() {
                let w = g.mul_vec(&basis[next]);
                if span.insert(w.clone()) {
                    basis.push(w);
                    origin.push(Origin::Image(next, k));
                }
            }
            next += 1;
        }
        if basis.len() == m.dim {
            break;
        }
    }
    let b = FpMat::from_columns(p, m.dim, &basis);
    let binv = b.inverse().expect("standard basis spans");
    let unknowns = seeds * n.dim;
    // images[j]: unknowns -> phi(basis_j)
    let mut images: Vec<FpMat> = Vec::with_capacity(m.dim);
    for o in &origin {
        let img = match *o {
            Origin::Seed(q) => {
                let mut z = FpMat::zero(p, n.dim, unknowns);
                for i in 0..n.dim {
                    z.set(i, q * n.dim + i, 1);
                }
                z
            }
            Origin::Image(i, k) => n.gens[k].mul(&images[i]),
        };
        images.push(img);
    }
    let mut eqs = Subspace::new(p, unknowns);
    for (j, bj) in basis.iter().enumerate() {
        for (k, g) in m.gens.iter().enumerate() {
            if origin.iter().skip(j + 1).any(|o| matches!(o, Origin::Image(i, kk) if *i == j && *kk == k)) {
                continue;
            }
            let coords = binv.mul_vec(&g.mul_vec(bj));
            let mut lhs = n.gens[k].mul(&images[j]);
            for (i, &c) in coords.iter().enumerate() {
                if c != 0 {
                    lhs = lhs.sub(&images[i].scale(c));
                }
            }
            for r in 0..lhs.nrows() {
                let row = lhs.row(r);
                if row.iter().any(|&x| x != 0) {
                    eqs.insert(row.to_vec());
                }
            }
            if eqs.len() == unknowns {
                return vec![];
            }
        }
    }
    eqs.annihilator()
        .basis()
        .into_iter()
        .map(|x| {
            let cols: Vec<Vec<u64>> = images.iter().map(|img| img.mul_vec(&x)).collect();
            FpMat::from_columns(p, n.dim, &cols).mul(&binv)
        })
        .collect()
}

/// Isomorphism test for simple modules.
pub fn is_isomorphic(m: &FpModule, n: &FpModule) -> bool {
    m.dim == n.dim && m.gens.len() == n.gens.len() && hom_space(m, n).iter().any(|h| h.inverse().is_some())
}

/// `rad M`: the intersection of the kernels of all maps to composition factors.
pub fn radical<R: Rng>(m: &FpModule, rng: &mut R) -> Result<Subspace, MeatAxeError> {
    let mut functionals = Subspace::new(m.p, m.dim);
    for (s, _) in chop(m, rng)? {
        for h in hom_space(m, &s) {
            for r in 0..h.nrows() {
                functionals.insert(h.row(r).to_vec());
            }
        }
    }
    Ok(functionals.annihilator())
}
