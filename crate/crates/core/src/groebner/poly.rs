use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactalg::{FieldSpec, Scalar};

/// Exponent vector.
pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with the first variable largest.
    #[default]
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Sparse multivariate polynomial with coefficients in a tower level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: &FieldSpec, nvars: usize) -> Self {
        MultiPoly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let mut p = Self::zero(c.field(), nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(field: &FieldSpec, nvars: usize) -> Self {
        Self::constant(Scalar::one(field), nvars)
    }

    pub fn monomial(field: &FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(field, m.len());
        p.add_term(m, c);
        p
    }

    /// The variable with index `i`.
    pub fn var(field: &FieldSpec, nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(field, m, Scalar::one(field))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                let s = &*e + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * mon * other`.
    pub fn add_scaled(&mut self, c: &Scalar, mon: &[u32], other: &MultiPoly) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            let nm: Monomial = m.iter().zip(mon).map(|(a, b)| a + b).collect();
            self.add_term(nm, c * v);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, v) in &other.terms {
            r.add_term(m.clone(), v.clone());
        }
        r
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, v) in &other.terms {
            r.add_term(m.clone(), -v);
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Scalar::one(&self.field))
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.field, self.nvars);
        }
        MultiPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut r = Self::zero(&self.field, self.nvars);
        for (m, v) in &self.terms {
            r.add_scaled(v, m, other);
        }
        r
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut r = Self::one(&self.field, self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ds = self.terms.keys().map(|m| degree(m));
        match ds.next() {
            None => true,
            Some(d) => ds.all(|e| e == d),
        }
    }

    /// Leading monomial and coefficient.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn make_monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("field coefficients")),
        }
    }

    /// Substitute polynomial `images[i]` for variable `i`.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target_n = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(&self.field, p.nvars), p.clone()]).collect();
        let mut out = Self::zero(&self.field, target_n);
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone(), target_n);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Formal partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut r = Self::zero(&self.field, self.nvars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm[i] -= 1;
            r.add_term(nm, c * &Scalar::from_int(&self.field, m[i] as i64));
        }
        r
    }

    /// Coefficients mapped into another field.
    pub fn map_coeffs<F>(&self, target: &FieldSpec, mut f: F) -> MultiPoly
    where
        F: FnMut(&Scalar) -> Scalar,
    {
        let mut r = Self::zero(target, self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mon: Vec<String> = m
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, x)| if *e == 1 { x.to_string() } else { format!("{x}^{e}") })
                .collect();
            let mon = mon.join("*");
            let cs = c.to_string();
            let (neg, body) = if cs.contains(' ') {
                (false, if mon.is_empty() { format!("({cs})") } else { format!("({cs})*{mon}") })
            } else {
                let (neg, abs) = match cs.strip_prefix('-') {
                    Some(r) => (true, r.to_string()),
                    None => (false, cs.clone()),
                };
                let body = if mon.is_empty() {
                    abs
                } else if abs == "1" {
                    mon
                } else {
                    format!("{abs}*{mon}")
                };
                (neg, body)
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    /// Parse a polynomial in the named variables with coefficients in `field`.
    pub fn parse(field: &FieldSpec, names: &[&str], text: &str) -> Result<MultiPoly, crate::exactalg::ExactError> {
        let ring = FieldSpec::poly_ring(field, names);
        let s = Scalar::parse(&ring, text)?;
        let mut p = Self::zero(field, names.len());
        for (m, c) in s.poly_terms().expect("poly ring element") {
            p.add_term(m, c);
        }
        Ok(p)
    }
}
