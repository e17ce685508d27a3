use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::unipoly;
use super::ExactError;

pub type Rat = num_rational::BigRational;

/// One level of the coefficient tower.
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    /// `Q[a]/(f)` with `f` monic, coefficients stored low degree first.
    NumberField { name: String, modulus: Vec<Rat> },
    /// Polynomial ring over `base`; variables ordered, the first is lex-largest.
    PolyRing { base: FieldSpec, vars: Vec<String> },
    /// `base(var)`; `base` must itself be a field.
    RationalFunctions { base: FieldSpec, var: String },
    PrimeField { p: u64 },
}

/// Shared handle to a coefficient domain. Cheap to clone.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<FieldKind>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for FieldSpec {}
impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Canonical representation of an element; interpreted relative to a [`FieldKind`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Rat(Rat),
    /// Coefficients in the power basis, trailing zeros trimmed.
    Nf(Vec<Rat>),
    /// Exponent vector to nonzero base coefficient.
    Poly(BTreeMap<Vec<u32>, Value>),
    /// Numerator and denominator, coprime, denominator monic.
    RatFn(Vec<Value>, Vec<Value>),
    Fp(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn rat_poly_trim(v: &mut Vec<Rat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Cyclotomic polynomial `Phi_n` over the integers, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rat> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num: Vec<Rat> = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in 1..n {
        if n % d == 0 {
            let phi = cyclotomic_polynomial(d);
            let (q, _) = rat_poly_divrem(&num, &phi);
            num = q;
        }
    }
    num
}

pub(crate) fn rat_poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r: Vec<Rat> = a.to_vec();
    rat_poly_trim(&mut r);
    let mut b = b.to_vec();
    rat_poly_trim(&mut b);
    let db = b.len() - 1;
    let lc = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lc;
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            r[k + i] -= t;
        }
        q[k] = c;
        rat_poly_trim(&mut r);
    }
    rat_poly_trim(&mut q);
    (q, r)
}

fn rat_poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_poly_trim(&mut out);
    out
}

fn rat_poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        out.push(x - y);
    }
    rat_poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` over the rationals, if `gcd(a, m) = 1`.
fn rat_poly_invmod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // extended Euclid tracking only the coefficient of a
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    rat_poly_trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rat>, Vec<Rat>) = (vec![], vec![Rat::one()]);
    while !r1.is_empty() {
        let (q, r) = rat_poly_divrem(&r0, &r1);
        let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

fn nf_reduce(mut v: Vec<Rat>, modulus: &[Rat]) -> Vec<Rat> {
    let d = modulus.len() - 1;
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = v.len() - d;
        for i in 0..d {
            let t = &top * &modulus[i];
            v[k + i] -= t;
        }
    }
    rat_poly_trim(&mut v);
    v
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(mod_pow(a, p - 2, p))
    }
}

/// Reduce a rational modulo `p`; `None` when `p` divides the denominator.
pub(crate) fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64().unwrap();
    let d = r.denom().mod_floor(&pb).to_u64().unwrap();
    inv_mod(d, p).map(|di| mul_mod(n, di, p))
}

impl FieldSpec {
    pub fn new(kind: FieldKind) -> Self {
        FieldSpec(Arc::new(kind))
    }

    pub fn rationals() -> Self {
        Self::new(FieldKind::Rationals)
    }

    /// `Q(z_n)` with generator named `z{n}`; `n` of 1 or 2 gives the rationals.
    pub fn cyclotomic(n: u32) -> Self {
        if n <= 2 {
            return Self::rationals();
        }
        Self::new(FieldKind::NumberField {
            name: format!("z{n}"),
            modulus: cyclotomic_polynomial(n),
        })
    }

    pub fn number_field(name: &str, modulus: Vec<Rat>) -> Result<Self, ExactError> {
        let mut m = modulus;
        rat_poly_trim(&mut m);
        if m.len() < 2 || !m.last().unwrap().is_one() {
            return Err(ExactError::Domain("number field modulus must be monic of degree >= 1".into()));
        }
        Ok(Self::new(FieldKind::NumberField { name: name.to_string(), modulus: m }))
    }

    pub fn poly_ring(base: &FieldSpec, vars: &[&str]) -> Self {
        Self::new(FieldKind::PolyRing {
            base: base.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn rational_functions(base: &FieldSpec, var: &str) -> Result<Self, ExactError> {
        if !base.is_field() {
            return Err(ExactError::Domain("rational functions need a field as base".into()));
        }
        Ok(Self::new(FieldKind::RationalFunctions { base: base.clone(), var: var.to_string() }))
    }

    pub fn prime_field(p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::Domain(format!("{p} is not prime")));
        }
        Ok(Self::new(FieldKind::PrimeField { p }))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn is_field(&self) -> bool {
        !matches!(*self.0, FieldKind::PolyRing { .. })
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind() {
            FieldKind::PrimeField { p } => *p,
            FieldKind::PolyRing { base, .. } | FieldKind::RationalFunctions { base, .. } => {
                base.characteristic()
            }
            _ => 0,
        }
    }

    pub fn base(&self) -> Option<&FieldSpec> {
        match self.kind() {
            FieldKind::PolyRing { base, .. } | FieldKind::RationalFunctions { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Degree of the number field at the bottom of the tower (1 for the rationals).
    pub fn number_field_degree(&self) -> usize {
        match self.kind() {
            FieldKind::NumberField { modulus, .. } => modulus.len() - 1,
            FieldKind::PolyRing { base, .. } | FieldKind::RationalFunctions { base, .. } => {
                base.number_field_degree()
            }
            _ => 1,
        }
    }

    /// Number field (or rationals) at the bottom of the tower.
    pub fn ground(&self) -> FieldSpec {
        match self.base() {
            Some(b) => b.ground(),
            None => self.clone(),
        }
    }

    /// Names of all tower variables, bottom level first.
    pub fn variables(&self) -> Vec<String> {
        match self.kind() {
            FieldKind::PolyRing { base, vars } => {
                let mut v = base.variables();
                v.extend(vars.iter().cloned());
                v
            }
            FieldKind::RationalFunctions { base, var } => {
                let mut v = base.variables();
                v.push(var.clone());
                v
            }
            _ => vec![],
        }
    }

    pub fn modulus(&self) -> Option<&[Rat]> {
        match self.kind() {
            FieldKind::NumberField { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    // ---- value level arithmetic ----

    pub(crate) fn zero_v(&self) -> Value {
        match self.kind() {
            FieldKind::Rationals => Value::Rat(Rat::zero()),
            FieldKind::NumberField { .. } => Value::Nf(vec![]),
            FieldKind::PolyRing { .. } => Value::Poly(BTreeMap::new()),
            FieldKind::RationalFunctions { base, .. } => Value::RatFn(vec![], vec![base.one_v()]),
            FieldKind::PrimeField { .. } => Value::Fp(0),
        }
    }

    pub(crate) fn one_v(&self) -> Value {
        match self.kind() {
            FieldKind::Rationals => Value::Rat(Rat::one()),
            FieldKind::NumberField { .. } => Value::Nf(vec![Rat::one()]),
            FieldKind::PolyRing { base, vars } => {
                let mut m = BTreeMap::new();
                m.insert(vec![0; vars.len()], base.one_v());
                Value::Poly(m)
            }
            FieldKind::RationalFunctions { base, .. } => Value::RatFn(vec![base.one_v()], vec![base.one_v()]),
            FieldKind::PrimeField { p } => Value::Fp(1 % p),
        }
    }

    pub(crate) fn is_zero_v(&self, v: &Value) -> bool {
        match v {
            Value::Rat(r) => r.is_zero(),
            Value::Nf(c) => c.is_empty(),
            Value::Poly(m) => m.is_empty(),
            Value::RatFn(n, _) => n.is_empty(),
            Value::Fp(x) => *x == 0,
        }
    }

    pub(crate) fn is_one_v(&self, v: &Value) -> bool {
        *v == self.one_v()
    }

    pub(crate) fn from_rat_v(&self, r: &Rat) -> Result<Value, ExactError> {
        Ok(match self.kind() {
            FieldKind::Rationals => Value::Rat(r.clone()),
            FieldKind::NumberField { .. } => {
                if r.is_zero() {
                    Value::Nf(vec![])
                } else {
                    Value::Nf(vec![r.clone()])
                }
            }
            FieldKind::PolyRing { base, vars } => {
                let c = base.from_rat_v(r)?;
                let mut m = BTreeMap::new();
                if !base.is_zero_v(&c) {
                    m.insert(vec![0; vars.len()], c);
                }
                Value::Poly(m)
            }
            FieldKind::RationalFunctions { base, .. } => {
                let c = base.from_rat_v(r)?;
                let num = if base.is_zero_v(&c) { vec![] } else { vec![c] };
                Value::RatFn(num, vec![base.one_v()])
            }
            FieldKind::PrimeField { p } => Value::Fp(
                rat_mod_p(r, *p).ok_or_else(|| ExactError::DivisionByZero(format!("denominator of {r} vanishes mod {p}")))?,
            ),
        })
    }

    /// Wrap a value of the base level as a constant of this level.
    pub(crate) fn const_from_base_v(&self, c: Value) -> Value {
        match self.kind() {
            FieldKind::PolyRing { base, vars } => {
                let mut m = BTreeMap::new();
                if !base.is_zero_v(&c) {
                    m.insert(vec![0; vars.len()], c);
                }
                Value::Poly(m)
            }
            FieldKind::RationalFunctions { base, .. } => {
                let num = if base.is_zero_v(&c) { vec![] } else { vec![c] };
                Value::RatFn(num, vec![base.one_v()])
            }
            _ => c,
        }
    }

    pub(crate) fn neg_v(&self, a: &Value) -> Value {
        match (self.kind(), a) {
            (_, Value::Rat(x)) => Value::Rat(-x),
            (_, Value::Nf(c)) => Value::Nf(c.iter().map(|x| -x).collect()),
            (FieldKind::PolyRing { base, .. }, Value::Poly(m)) => {
                Value::Poly(m.iter().map(|(k, v)| (k.clone(), base.neg_v(v))).collect())
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, d)) => {
                Value::RatFn(unipoly::neg(base, n), d.clone())
            }
            (FieldKind::PrimeField { p }, Value::Fp(x)) => Value::Fp(if *x == 0 { 0 } else { p - x }),
            _ => unreachable!("value does not match field"),
        }
    }

    pub(crate) fn add_v(&self, a: &Value, b: &Value) -> Value {
        match (self.kind(), a, b) {
            (_, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (_, Value::Nf(x), Value::Nf(y)) => {
                let n = x.len().max(y.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    out.push(match (x.get(i), y.get(i)) {
                        (Some(u), Some(v)) => u + v,
                        (Some(u), None) => u.clone(),
                        (None, Some(v)) => v.clone(),
                        (None, None) => unreachable!(),
                    });
                }
                rat_poly_trim(&mut out);
                Value::Nf(out)
            }
            (FieldKind::PolyRing { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                let mut out = x.clone();
                for (k, v) in y {
                    poly_accumulate(base, &mut out, k, v);
                }
                Value::Poly(out)
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n1, d1), Value::RatFn(n2, d2)) => {
                if n1.is_empty() {
                    return b.clone();
                }
                if n2.is_empty() {
                    return a.clone();
                }
                if d1 == d2 {
                    let n = unipoly::add(base, n1, n2);
                    if unipoly::is_one(base, d1) {
                        return Value::RatFn(n, d1.clone());
                    }
                    ratfn_normalize(base, n, d1.clone())
                } else {
                    let n = unipoly::add(base, &unipoly::mul(base, n1, d2), &unipoly::mul(base, n2, d1));
                    ratfn_normalize(base, n, unipoly::mul(base, d1, d2))
                }
            }
            (FieldKind::PrimeField { p }, Value::Fp(x), Value::Fp(y)) => {
                let s = x + y;
                Value::Fp(if s >= *p { s - p } else { s })
            }
            _ => unreachable!("value does not match field"),
        }
    }

    pub(crate) fn sub_v(&self, a: &Value, b: &Value) -> Value {
        self.add_v(a, &self.neg_v(b))
    }

    pub(crate) fn mul_v(&self, a: &Value, b: &Value) -> Value {
        match (self.kind(), a, b) {
            (_, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (FieldKind::NumberField { modulus, .. }, Value::Nf(x), Value::Nf(y)) => {
                Value::Nf(nf_reduce(rat_poly_mul(x, y), modulus))
            }
            (FieldKind::PolyRing { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                let mut out = BTreeMap::new();
                for (kx, vx) in x {
                    for (ky, vy) in y {
                        let k: Vec<u32> = kx.iter().zip(ky).map(|(a, b)| a + b).collect();
                        let v = base.mul_v(vx, vy);
                        poly_accumulate(base, &mut out, &k, &v);
                    }
                }
                Value::Poly(out)
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n1, d1), Value::RatFn(n2, d2)) => {
                if n1.is_empty() || n2.is_empty() {
                    return self.zero_v();
                }
                let one1 = unipoly::is_one(base, d1);
                let one2 = unipoly::is_one(base, d2);
                if one1 && one2 {
                    return Value::RatFn(unipoly::mul(base, n1, n2), d1.clone());
                }
                // cross cancellation keeps the operands small
                let g1 = unipoly::gcd(base, n1, d2);
                let g2 = unipoly::gcd(base, n2, d1);
                let a1 = unipoly::div_exact(base, n1, &g1);
                let b2 = unipoly::div_exact(base, d2, &g1);
                let a2 = unipoly::div_exact(base, n2, &g2);
                let b1 = unipoly::div_exact(base, d1, &g2);
                let n = unipoly::mul(base, &a1, &a2);
                let d = unipoly::mul(base, &b1, &b2);
                ratfn_make_monic(base, n, d)
            }
            (FieldKind::PrimeField { p }, Value::Fp(x), Value::Fp(y)) => Value::Fp(mul_mod(*x, *y, *p)),
            _ => unreachable!("value does not match field"),
        }
    }

    /// Multiplicative inverse; `None` for zero and for non-units of a ring level.
    pub(crate) fn inv_v(&self, a: &Value) -> Option<Value> {
        if self.is_zero_v(a) {
            return None;
        }
        match (self.kind(), a) {
            (_, Value::Rat(x)) => Some(Value::Rat(x.recip())),
            (FieldKind::NumberField { modulus, .. }, Value::Nf(x)) => {
                if x.len() == 1 {
                    return Some(Value::Nf(vec![x[0].recip()]));
                }
                rat_poly_invmod(x, modulus).map(|v| Value::Nf(nf_reduce(v, modulus)))
            }
            (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
                if m.len() == 1 {
                    let (k, v) = m.iter().next().unwrap();
                    if k.iter().all(|e| *e == 0) {
                        let iv = base.inv_v(v)?;
                        let mut out = BTreeMap::new();
                        out.insert(vec![0; vars.len()], iv);
                        return Some(Value::Poly(out));
                    }
                }
                None
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, d)) => {
                Some(ratfn_make_monic(base, d.clone(), n.clone()))
            }
            (FieldKind::PrimeField { p }, Value::Fp(x)) => inv_mod(*x, *p).map(Value::Fp),
            _ => unreachable!("value does not match field"),
        }
    }

    pub(crate) fn fmt_value(&self, v: &Value, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(v))
    }

    pub(crate) fn render(&self, v: &Value) -> String {
        match (self.kind(), v) {
            (_, Value::Rat(r)) => r.to_string(),
            (FieldKind::NumberField { name, .. }, Value::Nf(c)) => {
                let mut terms = vec![];
                for (i, x) in c.iter().enumerate().rev() {
                    if x.is_zero() {
                        continue;
                    }
                    let mon = match i {
                        0 => String::new(),
                        1 => name.clone(),
                        _ => format!("{name}^{i}"),
                    };
                    terms.push(signed_term(&x.abs().to_string(), x.is_negative(), &mon));
                }
                join_terms(terms)
            }
            (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
                let mut terms = vec![];
                for (k, c) in m.iter().rev() {
                    let mon: Vec<String> = k
                        .iter()
                        .zip(vars)
                        .filter(|(e, _)| **e > 0)
                        .map(|(e, x)| if *e == 1 { x.clone() } else { format!("{x}^{e}") })
                        .collect();
                    terms.push(coeff_term(&base.render(c), &mon.join("*")));
                }
                join_terms(terms)
            }
            (FieldKind::RationalFunctions { base, var }, Value::RatFn(n, d)) => {
                let num = render_unipoly(base, n, var);
                if unipoly::is_one(base, d) {
                    num
                } else {
                    let den = render_unipoly(base, d, var);
                    format!("{}/{}", paren_if_compound(&num), paren_if_compound(&den))
                }
            }
            (_, Value::Fp(x)) => x.to_string(),
            _ => unreachable!("value does not match field"),
        }
    }
}

fn poly_accumulate(base: &FieldSpec, out: &mut BTreeMap<Vec<u32>, Value>, k: &[u32], v: &Value) {
    match out.get_mut(k) {
        Some(e) => {
            let s = base.add_v(e, v);
            if base.is_zero_v(&s) {
                out.remove(k);
            } else {
                *e = s;
            }
        }
        None => {
            if !base.is_zero_v(v) {
                out.insert(k.to_vec(), v.clone());
            }
        }
    }
}

pub(crate) fn ratfn_normalize(base: &FieldSpec, n: Vec<Value>, d: Vec<Value>) -> Value {
    if n.is_empty() {
        return Value::RatFn(vec![], vec![base.one_v()]);
    }
    let g = unipoly::gcd(base, &n, &d);
    let (n, d) = if unipoly::is_one(base, &g) {
        (n, d)
    } else {
        (unipoly::div_exact(base, &n, &g), unipoly::div_exact(base, &d, &g))
    };
    ratfn_make_monic(base, n, d)
}

fn ratfn_make_monic(base: &FieldSpec, n: Vec<Value>, d: Vec<Value>) -> Value {
    if n.is_empty() {
        return Value::RatFn(vec![], vec![base.one_v()]);
    }
    let lc = d.last().expect("zero denominator").clone();
    if base.is_one_v(&lc) {
        return Value::RatFn(n, d);
    }
    let il = base.inv_v(&lc).expect("base is a field");
    Value::RatFn(unipoly::scale(base, &n, &il), unipoly::scale(base, &d, &il))
}

fn render_unipoly(base: &FieldSpec, p: &[Value], var: &str) -> String {
    let mut terms = vec![];
    for (i, c) in p.iter().enumerate().rev() {
        if base.is_zero_v(c) {
            continue;
        }
        let mon = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(coeff_term(&base.render(c), &mon));
    }
    join_terms(terms)
}

fn paren_if_compound(s: &str) -> String {
    if s.contains(' ') || s.contains('/') || s.starts_with('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// `(negative, body)` for a coefficient string times a monomial string.
fn coeff_term(coeff: &str, mon: &str) -> (bool, String) {
    if coeff.contains(' ') {
        let body = if mon.is_empty() { coeff.to_string() } else { format!("({coeff})*{mon}") };
        return (false, body);
    }
    let (neg, abs) = match coeff.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, coeff),
    };
    signed_term(abs, neg, mon)
}

fn signed_term(abs: &str, neg: bool, mon: &str) -> (bool, String) {
    let body = if mon.is_empty() {
        abs.to_string()
    } else if abs == "1" {
        mon.to_string()
    } else {
        format!("{abs}*{mon}")
    };
    (neg, body)
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::NumberField { name, modulus } => {
                if let Some(n) = name.strip_prefix('z').and_then(|s| s.parse::<u32>().ok()) {
                    if cyclotomic_polynomial(n) == *modulus {
                        return write!(f, "Q({name})");
                    }
                }
                let q = FieldSpec::poly_ring(&FieldSpec::rationals(), &[name]);
                let m: BTreeMap<Vec<u32>, Value> = modulus
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (vec![i as u32], Value::Rat(c.clone())))
                    .collect();
                write!(f, "Q[{name}]/({})", q.render(&Value::Poly(m)))
            }
            FieldKind::PolyRing { base, vars } => write!(f, "{base}[{}]", vars.join(",")),
            FieldKind::RationalFunctions { base, var } => write!(f, "{base}({var})"),
            FieldKind::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}
