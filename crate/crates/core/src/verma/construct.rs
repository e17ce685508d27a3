use std::collections::HashMap;

use crate::cherednik::CherednikParameter;
use crate::exactalg::{ExactMatrix, FieldSpec, Scalar};
use crate::groebner::MultiPoly;
use crate::refgroup::{ReflectionGroup, Side};

use super::{GradedModule, VermaError, XTable};

/// Generator positions `y_1..y_n, g_1..g_r, x_1..x_n` of a module over the restricted algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardLayout {
    pub rank: usize,
    pub group_generators: usize,
}

impl StandardLayout {
    pub fn of(g: &ReflectionGroup) -> Self {
        StandardLayout { rank: g.dim(), group_generators: g.num_generators() }
    }

    pub fn y(&self, i: usize) -> usize {
        i
    }

    pub fn g(&self, k: usize) -> usize {
        self.rank + k
    }

    pub fn x(&self, i: usize) -> usize {
        self.rank + self.group_generators + i
    }

    pub fn len(&self) -> usize {
        2 * self.rank + self.group_generators
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.rank).map(|i| format!("y{i}")).collect();
        v.extend((1..=self.group_generators).map(|k| format!("g{k}")));
        v.extend((1..=self.rank).map(|i| format!("x{i}")));
        v
    }

    pub fn degrees(&self) -> Vec<i32> {
        let mut v = vec![-1; self.rank];
        v.extend(std::iter::repeat(0).take(self.group_generators));
        v.extend(std::iter::repeat(1).take(self.rank));
        v
    }
}

/// `A (x) B`, indexed so that `(a, b)` becomes `a * B.nrows() + b`.
fn kron(a: &ExactMatrix, b: &ExactMatrix, field: &FieldSpec) -> Result<ExactMatrix, VermaError> {
    let (ra, rb) = (a.nrows(), b.nrows());
    let mut cols = vec![Default::default(); a.ncols() * b.ncols()];
    for (i, j, x) in a.entries() {
        let x = x.embed(field)?;
        for (k, l, y) in b.entries() {
            let col: &mut crate::exactalg::SparseVec = &mut cols[j * b.ncols() + l];
            col.insert(i * rb + k, &x * &y.embed(field)?);
        }
    }
    Ok(ExactMatrix::from_columns(field, ra * rb, cols))
}

/// `Delta_c(lambda) = K[V]_G (x) lambda`, basis `x^mu (x) w_k` ordered by `mu` (degree-major) then `k`.
pub fn verma_module(g: &ReflectionGroup, param: &CherednikParameter, irrep: usize) -> Result<GradedModule, VermaError> {
    verma_module_with(g, &XTable::new(g), param, irrep)
}

/// As [`verma_module`], reusing a precomputed X-table.
pub fn verma_module_with(
    g: &ReflectionGroup,
    xt: &XTable,
    param: &CherednikParameter,
    irrep: usize,
) -> Result<GradedModule, VermaError> {
    if !param.t().is_zero() {
        return Err(VermaError::Grading("Verma modules of the restricted algebra need t = 0".into()));
    }
    let field = param.field();
    let co = g.coinvariants(Side::X);
    let rho = g
        .irreps()
        .get(irrep)
        .ok_or_else(|| VermaError::Grading(format!("no irreducible representation {irrep}")))?;
    let layout = StandardLayout::of(g);
    let id_w = ExactMatrix::identity(g.field(), rho.dim);
    let mut actions = vec![ExactMatrix::zero(field, co.dim() * rho.dim, co.dim() * rho.dim); layout.len()];
    for i in 0..g.dim() {
        let mut y = ExactMatrix::zero(field, co.dim() * rho.dim, co.dim() * rho.dim);
        for (r, s) in g.reflections().iter().enumerate() {
            let c = &param.c()[s.class];
            if c.is_zero() || xt.matrix(i, r).is_zero() {
                continue;
            }
            y = y.add(&kron(xt.matrix(i, r), &rho.elements[s.element], field)?.scale(c));
        }
        actions[layout.y(i)] = y;
        actions[layout.x(i)] = kron(&co.mult[i], &id_w, field)?;
    }
    for k in 0..g.num_generators() {
        let e = g.generator_element(k);
        actions[layout.g(k)] = kron(&co.action[e], &rho.elements[e], field)?;
    }
    let degrees = co.monomials.iter().flat_map(|m| std::iter::repeat(crate::groebner::degree(m) as i32).take(rho.dim)).collect();
    GradedModule::new(field, degrees, layout.names(), layout.degrees(), actions)
}

/// Matrices of every group element, built from the generator matrices along stored words.
pub(crate) fn group_element_matrices(g: &ReflectionGroup, gens: &[&ExactMatrix], field: &FieldSpec, dim: usize) -> Vec<ExactMatrix> {
    (0..g.order())
        .map(|e| g.word(e).iter().fold(ExactMatrix::identity(field, dim), |m, &k| m.mul(gens[k])))
        .collect()
}

fn eval_poly(f: &MultiPoly, mats: &[&ExactMatrix], field: &FieldSpec) -> Result<ExactMatrix, VermaError> {
    let dim = mats[0].nrows();
    let mut powers: HashMap<(usize, u32), ExactMatrix> = HashMap::new();
    let mut total = ExactMatrix::zero(field, dim, dim);
    for (m, c) in f.terms() {
        let mut term = ExactMatrix::identity(field, dim).scale(&c.embed(field)?);
        for (j, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = powers.entry((j, e)).or_insert_with(|| {
                (1..e).fold(mats[j].clone(), |acc, _| acc.mul(mats[j]))
            });
            term = term.mul(p);
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// The first relation of the restricted algebra that `m` violates, if any.
pub fn module_relation_failure(g: &ReflectionGroup, param: &CherednikParameter, m: &GradedModule) -> Option<String> {
    let layout = StandardLayout::of(g);
    if m.num_generators() != layout.len() {
        return Some("generator layout".into());
    }
    let field = m.field();
    let embed = |s: &Scalar| s.embed(field).ok();
    let n = g.dim();
    let dim = m.dim();
    let id = ExactMatrix::identity(field, dim);
    let gens: Vec<&ExactMatrix> = (0..g.num_generators()).map(|k| m.action(layout.g(k))).collect();
    let elems = group_element_matrices(g, &gens, field, dim);
    if elems[0] != id {
        return Some("identity element".into());
    }
    for k in 0..g.num_generators() {
        let gk = g.generator_element(k);
        for e in 0..g.order() {
            if gens[k].mul(&elems[e]) != elems[g.mult(gk, e)] {
                return Some(format!("group relation g{} * element {e}", k + 1));
            }
        }
    }
    let xs: Vec<&ExactMatrix> = (0..n).map(|i| m.action(layout.x(i))).collect();
    let ys: Vec<&ExactMatrix> = (0..n).map(|i| m.action(layout.y(i))).collect();
    for (side, mats, tag) in [(Side::X, &xs, "x"), (Side::Y, &ys, "y")] {
        for i in 0..n {
            for j in 0..i {
                if mats[i].mul(mats[j]) != mats[j].mul(mats[i]) {
                    return Some(format!("{tag}{} {tag}{} commutation", j + 1, i + 1));
                }
            }
        }
        for k in 0..g.num_generators() {
            let l = g.linear_action(side, g.generator_element(k));
            for j in 0..n {
                let mut image = ExactMatrix::zero(field, dim, dim);
                for (r, v) in l.col(j) {
                    image = image.add(&mats[*r].scale(&embed(v)?));
                }
                if gens[k].mul(mats[j]) != image.mul(gens[k]) {
                    return Some(format!("g{} {tag}{} equivariance", k + 1, j + 1));
                }
            }
        }
        for f in &g.coinvariants(side).ideal {
            match eval_poly(f, mats, field) {
                Ok(v) if v.is_zero() => {}
                _ => return Some(format!("{tag}-side Hilbert ideal generator does not act as zero")),
            }
        }
    }
    let t = embed(param.t())?;
    for i in 0..n {
        for j in 0..n {
            let lhs = ys[i].mul(xs[j]).sub(&xs[j].mul(ys[i]));
            let mut rhs = if i == j { id.scale(&t) } else { ExactMatrix::zero(field, dim, dim) };
            for s in g.reflections() {
                let coef = &embed(&s.pairing[i][j])? * &embed(&param.c()[s.class])?;
                if !coef.is_zero() {
                    rhs = rhs.add(&elems[s.element].scale(&coef));
                }
            }
            if lhs != rhs {
                return Some(format!("[y{}, x{}] relation", i + 1, j + 1));
            }
        }
    }
    None
}

/// Whether `m` is a module for the restricted algebra with parameter `param`.
pub fn check_module_relations(g: &ReflectionGroup, param: &CherednikParameter, m: &GradedModule) -> bool {
    module_relation_failure(g, param, m).is_none()
}
