use std::collections::{BTreeMap, HashMap};

use crate::exactalg::{Echelon, ExactMatrix, FieldSpec, Scalar, SparseVec};
use crate::groebner::{degree, groebner_basis, normal_form, standard_monomials, Monomial, MonomialOrder, MultiPoly};

use super::group::ReflectionGroup;
use super::GroupError;

/// Which polynomial ring: `X` is `K[V]` (variables `x_i` in `V*`), `Y` is `K[V*]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

/// Coinvariant algebra `K[V]_G` (or `K[V*]_G`) with its standard-monomial basis.
#[derive(Clone, Debug)]
pub struct CoinvariantAlgebra {
    pub side: Side,
    pub field: FieldSpec,
    pub nvars: usize,
    /// Fundamental invariants, in increasing degree.
    pub invariants: Vec<MultiPoly>,
    /// Reduced lex Gröbner basis of the Hilbert ideal.
    pub ideal: Vec<MultiPoly>,
    /// Standard monomials, sorted by degree then decreasing lex.
    pub monomials: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
    /// Multiplication by variable `i`, in the monomial basis.
    pub mult: Vec<ExactMatrix>,
    /// Action of each group element, in the monomial basis.
    pub action: Vec<ExactMatrix>,
}

/// Image of a polynomial under the substitution `var_i -> sum_j L[j][i] var_j`.
pub fn act_on_poly(l: &ExactMatrix, f: &MultiPoly) -> MultiPoly {
    let n = f.nvars();
    let field = f.field();
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let mut p = MultiPoly::zero(field, n);
            for (j, v) in l.col(i) {
                let mut m = vec![0; n];
                m[*j] = 1;
                p.add_term(m, v.clone());
            }
            p
        })
        .collect();
    f.compose(&images)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = vec![];
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - a) {
            let mut m = vec![a];
            m.append(&mut rest);
            out.push(m);
        }
    }
    out
}

fn to_vec(f: &MultiPoly, pos: &BTreeMap<Monomial, usize>) -> SparseVec {
    f.terms().iter().map(|(m, c)| (pos[m], c.clone())).collect()
}

fn from_vec(v: &SparseVec, mons: &[Monomial], field: &FieldSpec, n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(field, n);
    for (i, c) in v {
        p.add_term(mons[*i].clone(), c.clone());
    }
    p
}

/// Fundamental invariants by Reynolds averaging, degree by degree.
pub fn fundamental_invariants(g: &ReflectionGroup, side: Side) -> Result<Vec<MultiPoly>, GroupError> {
    let n = g.dim();
    let field = g.field().clone();
    let inv_order = Scalar::from_frac(&field, 1, g.order() as i64);
    let mut chosen: Vec<MultiPoly> = vec![];
    let mut d = 1u32;
    while chosen.len() < n {
        if d as usize > g.order() {
            return Err(GroupError::Invariants("no complete set of fundamental invariants found".into()));
        }
        let mons = monomials_of_degree(n, d);
        let pos: BTreeMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        // degree-d part of the subalgebra generated so far
        let mut span = Echelon::new(&field, mons.len());
        for prod in products_of_degree(&chosen, d, n, &field) {
            span.insert(to_vec(&prod, &pos));
        }
        let mut invariants = Echelon::new(&field, mons.len());
        for m in &mons {
            let f = MultiPoly::monomial(&field, m.clone(), Scalar::one(&field));
            let mut avg = MultiPoly::zero(&field, n);
            for e in 0..g.order() {
                avg = avg.add(&act_on_poly(g.linear_action(side, e), &f));
            }
            invariants.insert(to_vec(&avg.scale(&inv_order), &pos));
        }
        for v in invariants.to_matrix().columns() {
            if span.insert(v.clone()).is_some() {
                chosen.push(from_vec(v, &mons, &field, n));
            }
        }
        d += 1;
    }
    let degs: usize = chosen.iter().map(|f| f.total_degree().unwrap() as usize).product();
    if degs != g.order() || chosen.len() != n {
        return Err(GroupError::Invariants(format!("degree product {degs} != |G| = {}", g.order())));
    }
    if jacobian_determinant(&chosen).is_zero() {
        return Err(GroupError::Invariants("invariants are algebraically dependent".into()));
    }
    Ok(chosen)
}

fn products_of_degree(gens: &[MultiPoly], d: u32, n: usize, field: &FieldSpec) -> Vec<MultiPoly> {
    fn rec(gens: &[MultiPoly], start: usize, d: u32, acc: MultiPoly, out: &mut Vec<MultiPoly>) {
        if d == 0 {
            out.push(acc);
            return;
        }
        for i in start..gens.len() {
            let gd = gens[i].total_degree().unwrap();
            if gd <= d {
                rec(gens, i, d - gd, acc.mul(&gens[i]), out);
            }
        }
    }
    let mut out = vec![];
    if !gens.is_empty() {
        rec(gens, 0, d, MultiPoly::one(field, n), &mut out);
    }
    out
}

/// Determinant of the Jacobian matrix of `fs` (as many polynomials as variables).
pub fn jacobian_determinant(fs: &[MultiPoly]) -> MultiPoly {
    let n = fs.len();
    let jac: Vec<Vec<MultiPoly>> = fs.iter().map(|f| (0..n).map(|i| f.derivative(i)).collect()).collect();
    fn det(m: &[Vec<MultiPoly>], rows: &[usize], col: usize) -> MultiPoly {
        if rows.len() == 1 {
            return m[rows[0]][col].clone();
        }
        let mut acc = MultiPoly::zero(m[0][0].field(), m[0][0].nvars());
        for (k, &r) in rows.iter().enumerate() {
            let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let t = m[r][col].mul(&det(m, &rest, col + 1));
            acc = if k % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        acc
    }
    let rows: Vec<usize> = (0..n).collect();
    det(&jac, &rows, 0)
}

impl CoinvariantAlgebra {
    pub(crate) fn compute(g: &ReflectionGroup, side: Side) -> Result<Self, GroupError> {
        let n = g.dim();
        let field = g.field().clone();
        let invariants = fundamental_invariants(g, side)?;
        let ideal = groebner_basis(&invariants, MonomialOrder::Lex).map_err(|e| GroupError::Invariants(e.to_string()))?;
        let monomials =
            standard_monomials(&ideal, n, MonomialOrder::Lex).map_err(|e| GroupError::Invariants(e.to_string()))?;
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut alg = CoinvariantAlgebra { side, field: field.clone(), nvars: n, invariants, ideal, monomials, index, mult: vec![], action: vec![] };
        let dim = alg.monomials.len();
        for i in 0..n {
            let mut cols = Vec::with_capacity(dim);
            for m in &alg.monomials {
                let mut mm = m.clone();
                mm[i] += 1;
                cols.push(alg.coords(&MultiPoly::monomial(&field, mm, Scalar::one(&field))));
            }
            alg.mult.push(ExactMatrix::from_columns(&field, dim, cols));
        }
        let gens: Vec<ExactMatrix> = (0..g.num_generators())
            .map(|k| {
                let l = g.linear_action(side, g.generator_element(k));
                let cols = alg
                    .monomials
                    .iter()
                    .map(|m| alg.coords(&act_on_poly(l, &MultiPoly::monomial(&field, m.clone(), Scalar::one(&field)))))
                    .collect();
                ExactMatrix::from_columns(&field, dim, cols)
            })
            .collect();
        alg.action = (0..g.order())
            .map(|e| {
                let mut m = ExactMatrix::identity(&field, dim);
                for &k in g.word(e) {
                    m = m.mul(&gens[k]);
                }
                m
            })
            .collect();
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        normal_form(f, &self.ideal, MonomialOrder::Lex)
    }

    /// Coordinates of the class of `f` in the standard-monomial basis.
    pub fn coords(&self, f: &MultiPoly) -> SparseVec {
        self.normal_form(f).terms().iter().map(|(m, c)| (self.index[m], c.clone())).collect()
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        degree(&self.monomials[i])
    }

    pub fn max_degree(&self) -> u32 {
        self.monomials.iter().map(|m| degree(m)).max().unwrap_or(0)
    }

    /// Number of basis monomials in each degree.
    pub fn hilbert_series(&self) -> Vec<usize> {
        let mut s = vec![0; self.max_degree() as usize + 1];
        for m in &self.monomials {
            s[degree(m) as usize] += 1;
        }
        s
    }

    /// Character of the degree-`d` piece, indexed by group element.
    pub fn graded_character(&self, d: u32) -> Vec<Scalar> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| self.degree_of(i) == d).collect();
        self.action
            .iter()
            .map(|m| idx.iter().fold(Scalar::zero(&self.field), |acc, &i| &acc + &m.get(i, i)))
            .collect()
    }
}
