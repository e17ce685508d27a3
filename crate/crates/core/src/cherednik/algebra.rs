use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::exactalg::{ExactMatrix, FieldSpec, Scalar};
use crate::groebner::{Monomial, MultiPoly};
use crate::refgroup::{act_on_poly, ReflectionGroup};

use super::param::CherednikParameter;
use super::pbw::PbwElement;
use super::CherednikError;

/// `[y_i, x^mu]` split into its identity part and per-reflection parts.
#[derive(Clone, Debug)]
pub struct Commutator {
    /// `[y_i, x^mu]_t`, a polynomial in the x's.
    pub t_part: MultiPoly,
    /// `(s, [y_i, x^mu]_s)` for reflections with nonzero contribution.
    pub s_parts: Vec<(usize, MultiPoly)>,
}

/// The rational Cherednik algebra `H_{t,c}` with its runtime caches.
///
/// Caches use interior mutability; an instance belongs to one thread.
pub struct CherednikAlgebra {
    group: Arc<ReflectionGroup>,
    param: CherednikParameter,
    field: FieldSpec,
    n: usize,
    /// Block matrix of each element on `(x_1..x_n, y_1..y_n)`.
    action: Vec<ExactMatrix>,
    /// `(reflection element, c(s), pairing[i][j] * c(s))`.
    reflections: Vec<(usize, Scalar, Vec<Vec<Scalar>>)>,
    act_cache: RefCell<HashMap<(usize, Monomial), Rc<MultiPoly>>>,
    comm_cache: RefCell<HashMap<(usize, Monomial), Rc<Commutator>>>,
}

impl CherednikAlgebra {
    pub fn new(group: Arc<ReflectionGroup>, param: CherednikParameter) -> Result<Self, CherednikError> {
        let field = param.field().clone();
        let n = group.dim();
        let mut action = Vec::with_capacity(group.order());
        for e in 0..group.order() {
            let dx = group.dual_element(e).embed(&field)?;
            let dy = group.element(e).embed(&field)?;
            let mut m = ExactMatrix::zero(&field, 2 * n, 2 * n);
            for (i, j, v) in dx.entries() {
                m.set(i, j, v.clone());
            }
            for (i, j, v) in dy.entries() {
                m.set(n + i, n + j, v.clone());
            }
            action.push(m);
        }
        let mut reflections = vec![];
        for r in group.reflections() {
            let c = param.c()[r.class].clone();
            let pairing = r
                .pairing
                .iter()
                .map(|row| row.iter().map(|v| Ok(&v.embed(&field)? * &c)).collect::<Result<Vec<_>, CherednikError>>())
                .collect::<Result<Vec<_>, _>>()?;
            reflections.push((r.element, c, pairing));
        }
        Ok(CherednikAlgebra {
            group,
            param,
            field,
            n,
            action,
            reflections,
            act_cache: RefCell::new(HashMap::new()),
            comm_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<ReflectionGroup> {
        &self.group
    }

    pub fn parameter(&self) -> &CherednikParameter {
        &self.param
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> PbwElement {
        PbwElement::zero(&self.field, self.n)
    }

    pub fn one(&self) -> PbwElement {
        self.scalar(Scalar::one(&self.field))
    }

    pub fn scalar(&self, c: Scalar) -> PbwElement {
        PbwElement::from_poly(MultiPoly::constant(c, 2 * self.n), 0)
    }

    pub fn x(&self, i: usize) -> PbwElement {
        PbwElement::from_poly(MultiPoly::var(&self.field, 2 * self.n, i), 0)
    }

    pub fn y(&self, i: usize) -> PbwElement {
        PbwElement::from_poly(MultiPoly::var(&self.field, 2 * self.n, self.n + i), 0)
    }

    /// The group element with index `e`.
    pub fn g(&self, e: usize) -> PbwElement {
        PbwElement::from_poly(MultiPoly::one(&self.field, 2 * self.n), e)
    }

    /// Algebra generators in the order `y_1..y_n, g_1..g_r, x_1..x_n`.
    pub fn generators(&self) -> Vec<PbwElement> {
        let mut v: Vec<PbwElement> = (0..self.n).map(|i| self.y(i)).collect();
        v.extend((0..self.group.num_generators()).map(|k| self.g(self.group.generator_element(k))));
        v.extend((0..self.n).map(|i| self.x(i)));
        v
    }

    fn act_monomial(&self, g: usize, m: &[u32]) -> Rc<MultiPoly> {
        if g == 0 {
            return Rc::new(MultiPoly::monomial(&self.field, m.to_vec(), Scalar::one(&self.field)));
        }
        let key = (g, m.to_vec());
        if let Some(p) = self.act_cache.borrow().get(&key) {
            return p.clone();
        }
        let mono = MultiPoly::monomial(&self.field, m.to_vec(), Scalar::one(&self.field));
        let p = Rc::new(act_on_poly(&self.action[g], &mono));
        self.act_cache.borrow_mut().insert(key, p.clone());
        p
    }

    /// `^g p` for a polynomial in the `2n` variables.
    pub fn act(&self, g: usize, p: &MultiPoly) -> MultiPoly {
        if g == 0 {
            return p.clone();
        }
        let mut out = MultiPoly::zero(&self.field, 2 * self.n);
        let unit = vec![0; 2 * self.n];
        for (m, c) in p.terms() {
            out.add_scaled(c, &unit, &self.act_monomial(g, m));
        }
        out
    }

    fn x_monomial(&self, mu: &[u32]) -> Monomial {
        let mut m = mu.to_vec();
        m.resize(2 * self.n, 0);
        m
    }

    /// `[y_i, x^mu]` in PBW form (cached).
    pub fn commutator_y_xpow(&self, i: usize, mu: &[u32]) -> Rc<Commutator> {
        let key = (i, mu.to_vec());
        if let Some(c) = self.comm_cache.borrow().get(&key) {
            return c.clone();
        }
        let n = self.n;
        let nv = 2 * n;
        let f = &self.field;
        let mut t_part = MultiPoly::zero(f, nv);
        if !self.param.t().is_zero() {
            for j in 0..n {
                if mu[j] == 0 || j != i {
                    continue;
                }
                let mut m = self.x_monomial(mu);
                m[j] -= 1;
                t_part.add_term(m, self.param.t() * &Scalar::from_int(f, mu[j] as i64));
            }
        }
        let mut s_parts = vec![];
        for (s, c, pairing) in &self.reflections {
            if c.is_zero() {
                continue;
            }
            let mut total = MultiPoly::zero(f, nv);
            for j in 0..n {
                if mu[j] == 0 || pairing[i][j].is_zero() {
                    continue;
                }
                // x_1^mu_1 .. x_{j-1}^mu_{j-1}
                let mut head = vec![0u32; nv];
                head[..j].copy_from_slice(&mu[..j]);
                // ^s(x_{j+1}^mu_{j+1} .. x_n^mu_n)
                let mut tail = vec![0u32; nv];
                tail[j + 1..n].copy_from_slice(&mu[j + 1..n]);
                let tail = self.act_monomial(*s, &tail);
                let mut middle = MultiPoly::zero(f, nv);
                for l in 0..mu[j] {
                    let mut xl = vec![0u32; nv];
                    xl[j] = l;
                    let mut rest = vec![0u32; nv];
                    rest[j] = mu[j] - l - 1;
                    let sr = self.act_monomial(*s, &rest);
                    middle.add_scaled(&Scalar::one(f), &xl, &sr);
                }
                let prod = middle.mul(&tail);
                total.add_scaled(&pairing[i][j], &head, &prod);
            }
            if !total.is_zero() {
                s_parts.push((*s, total));
            }
        }
        let comm = Rc::new(Commutator { t_part, s_parts });
        self.comm_cache.borrow_mut().insert(key, comm.clone());
        comm
    }

    /// `y_i * e`.
    pub fn y_times(&self, i: usize, e: &PbwElement) -> PbwElement {
        let n = self.n;
        let mut out = self.zero();
        for (&h, p) in e.terms() {
            for (m, k) in p.terms() {
                let (mu, beta) = (&m[..n], &m[n..]);
                // x^mu y_i y^beta h
                let mut shifted = m.clone();
                shifted[n + i] += 1;
                out.add_poly(h, MultiPoly::monomial(&self.field, shifted, k.clone()));
                if mu.iter().all(|&a| a == 0) {
                    continue;
                }
                let comm = self.commutator_y_xpow(i, mu);
                let mut ymon = vec![0u32; 2 * n];
                ymon[n..].copy_from_slice(beta);
                if !comm.t_part.is_zero() {
                    out.add_scaled(h, k, &ymon, &comm.t_part);
                }
                for (s, part) in &comm.s_parts {
                    let sy = self.act_monomial(*s, &ymon);
                    out.add_poly(self.group.mult(*s, h), part.mul(&sy).scale(k));
                }
            }
        }
        out
    }

    /// Product in `H_{t,c}` via the commutator formula.
    pub fn product(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let n = self.n;
        let mut c = self.zero();
        for (&g, ag) in a.terms() {
            // e = g b
            let mut e = self.zero();
            for (&h, bh) in b.terms() {
                e.add_poly(self.group.mult(g, h), self.act(g, bh));
            }
            // y^nu e, memoised by nu
            let mut memo: HashMap<Vec<u32>, PbwElement> = HashMap::new();
            memo.insert(vec![0; n], e);
            for (m, kt) in ag.terms() {
                let (alpha, nu) = (&m[..n], &m[n..]);
                let ye = self.y_power_times(nu, &mut memo);
                let mut xmon = vec![0u32; 2 * n];
                xmon[..n].copy_from_slice(alpha);
                for (&h, p) in ye.terms() {
                    c.add_scaled(h, kt, &xmon, p);
                }
            }
        }
        c
    }

    fn y_power_times(&self, nu: &[u32], memo: &mut HashMap<Vec<u32>, PbwElement>) -> PbwElement {
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        // peel the last nonzero exponent: y^nu e = y_i (y^{nu - e_i} e)
        let i = nu.iter().rposition(|&a| a > 0).unwrap();
        let mut prev = nu.to_vec();
        prev[i] -= 1;
        let inner = self.y_power_times(&prev, memo);
        let r = self.y_times(i, &inner);
        memo.insert(nu.to_vec(), r.clone());
        r
    }

    pub fn pow(&self, a: &PbwElement, e: u32) -> PbwElement {
        let mut r = self.one();
        for _ in 0..e {
            r = self.product(&r, a);
        }
        r
    }

    pub fn commutator(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.product(a, b).sub(&self.product(b, a))
    }

    /// `eu = sum_i x_i y_i + sum_s eps_s/(eps_s - 1) c(s) s`.
    pub fn euler_element(&self) -> PbwElement {
        let n = self.n;
        let mut eu = self.zero();
        for i in 0..n {
            let mut m = vec![0u32; 2 * n];
            m[i] = 1;
            m[n + i] = 1;
            eu.add_poly(0, MultiPoly::monomial(&self.field, m, Scalar::one(&self.field)));
        }
        for r in self.group.reflections() {
            let eps = r.eigenvalue.embed(&self.field).expect("group field embeds");
            let factor = eps.checked_div(&(&eps - &Scalar::one(&self.field))).expect("eigenvalue differs from 1");
            let coef = &factor * &self.param.c()[r.class];
            eu.add_poly(r.element, MultiPoly::constant(coef, 2 * n));
        }
        eu
    }

    /// Whether `a` commutes with every algebra generator.
    pub fn is_central(&self, a: &PbwElement) -> bool {
        self.generators().iter().all(|h| self.commutator(a, h).is_zero())
    }
}
