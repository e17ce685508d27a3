use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{FieldSpec, Scalar};
use crate::groebner::MultiPoly;

/// `sum_g a_g(x, y) g`, each `a_g` a polynomial in `x_1..x_n, y_1..y_n` read with x's left of y's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElement {
    field: FieldSpec,
    n: usize,
    terms: BTreeMap<usize, MultiPoly>,
}

impl PbwElement {
    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        PbwElement { field: field.clone(), n, terms: BTreeMap::new() }
    }

    /// `p * g` for a polynomial `p` in the `2n` variables.
    pub fn from_poly(p: MultiPoly, g: usize) -> Self {
        assert_eq!(p.nvars() % 2, 0);
        let mut e = Self::zero(p.field(), p.nvars() / 2);
        e.add_poly(g, p);
        e
    }

    /// Single term `c x^alpha y^beta g`.
    pub fn term(field: &FieldSpec, alpha: &[u32], beta: &[u32], g: usize, c: Scalar) -> Self {
        let mut m = alpha.to_vec();
        m.extend_from_slice(beta);
        Self::from_poly(MultiPoly::monomial(field, m, c), g)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Rank `n` of the reflection representation.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<usize, MultiPoly> {
        &self.terms
    }

    pub fn coefficient(&self, g: usize) -> MultiPoly {
        self.terms.get(&g).cloned().unwrap_or_else(|| MultiPoly::zero(&self.field, 2 * self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_poly(&mut self, g: usize, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(q) => {
                *q = q.add(&p);
                if q.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, p);
            }
        }
    }

    /// `self += c * mon * p * g` where `mon` is a monomial in all `2n` variables.
    pub(crate) fn add_scaled(&mut self, g: usize, c: &Scalar, mon: &[u32], p: &MultiPoly) {
        let slot = self.terms.entry(g).or_insert_with(|| MultiPoly::zero(&self.field, 2 * self.n));
        slot.add_scaled(c, mon, p);
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut r = self.clone();
        for (g, p) in &other.terms {
            r.add_poly(*g, p.clone());
        }
        r
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.scale(&-Scalar::one(&self.field)))
    }

    pub fn scale(&self, c: &Scalar) -> PbwElement {
        let mut r = Self::zero(&self.field, self.n);
        for (g, p) in &self.terms {
            r.add_poly(*g, p.scale(c));
        }
        r
    }

    pub fn map_coeffs<F: FnMut(&Scalar) -> Scalar>(&self, target: &FieldSpec, mut f: F) -> PbwElement {
        let mut r = Self::zero(target, self.n);
        for (g, p) in &self.terms {
            r.add_poly(*g, p.map_coeffs(target, &mut f));
        }
        r
    }

    /// Largest total degree in x and y.
    pub fn degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|p| p.total_degree()).max()
    }

    /// Iterate `(g, x-exponents, y-exponents, coefficient)`.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, &[u32], &[u32], &Scalar)> {
        let n = self.n;
        self.terms
            .iter()
            .flat_map(move |(g, p)| p.terms().iter().map(move |(m, c)| (*g, &m[..n], &m[n..], c)))
    }

    pub fn variable_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect()
    }
}


impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = Self::variable_names(self.n);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let parts: Vec<String> = self.terms.iter().map(|(g, p)| format!("({})*g[{g}]", p.render(&refs))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
