use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{FieldKind, FieldSpec, Rat, Value};
use super::ExactError;

/// An element of some level of the coefficient tower.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: Value,
}

/// Arithmetic operation selector for [`scalar_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic; the operands must share a field.
pub fn scalar_arithmetic(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ExactError> {
    if a.field != b.field {
        return Err(ExactError::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl Scalar {
    pub(crate) fn from_value(field: &FieldSpec, value: Value) -> Self {
        Scalar { field: field.clone(), value }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_value(field, field.zero_v())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::from_value(field, field.one_v())
    }

    pub fn from_int(field: &FieldSpec, n: i64) -> Self {
        Self::from_rat(field, &Rat::from_integer(BigInt::from(n))).expect("integers embed everywhere")
    }

    pub fn from_rat(field: &FieldSpec, r: &Rat) -> Result<Self, ExactError> {
        Ok(Self::from_value(field, field.from_rat_v(r)?))
    }

    pub fn from_frac(field: &FieldSpec, n: i64, d: i64) -> Self {
        Self::from_rat(field, &Rat::new(BigInt::from(n), BigInt::from(d))).expect("nonzero denominator")
    }

    /// The generator of a number field level, or a named tower variable.
    pub fn variable(field: &FieldSpec, name: &str) -> Option<Self> {
        match field.kind() {
            FieldKind::NumberField { name: g, .. } if g == name => {
                Some(Self::from_value(field, Value::Nf(vec![Rat::zero(), Rat::one()])))
            }
            FieldKind::PolyRing { base, vars } => {
                if let Some(i) = vars.iter().position(|v| v == name) {
                    let mut e = vec![0u32; vars.len()];
                    e[i] = 1;
                    let mut m = BTreeMap::new();
                    m.insert(e, base.one_v());
                    return Some(Self::from_value(field, Value::Poly(m)));
                }
                let b = Self::variable(base, name)?;
                Some(Self::from_value(field, field.const_from_base_v(b.value)))
            }
            FieldKind::RationalFunctions { base, var } => {
                if var == name {
                    return Some(Self::from_value(
                        field,
                        Value::RatFn(vec![base.zero_v(), base.one_v()], vec![base.one_v()]),
                    ));
                }
                let b = Self::variable(base, name)?;
                Some(Self::from_value(field, field.const_from_base_v(b.value)))
            }
            _ => None,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero_v(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self.field.is_one_v(&self.value)
    }

    pub fn inv(&self) -> Result<Scalar, ExactError> {
        self.field
            .inv_v(&self.value)
            .map(|v| Self::from_value(&self.field, v))
            .ok_or_else(|| {
                if self.is_zero() {
                    ExactError::DivisionByZero(format!("inverse of zero in {}", self.field))
                } else {
                    ExactError::Domain(format!("{} is not a unit in {}", self, self.field))
                }
            })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        if self.field != other.field {
            return Err(ExactError::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut r = Scalar::one(&self.field);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        r
    }

    /// Rational value, if this is a constant rational at every level.
    pub fn to_rational(&self) -> Option<Rat> {
        value_to_rational(&self.field, &self.value)
    }

    /// Integer value of a prime-field element.
    pub fn to_fp(&self) -> Option<u64> {
        match self.value {
            Value::Fp(x) => Some(x),
            _ => None,
        }
    }

    /// Whether the element lies in the ground field (no tower variables).
    pub fn is_constant(&self) -> bool {
        value_is_constant(&self.value)
    }

    /// Image of `self` in `target`, which must contain this field as a sub-level.
    pub fn embed(&self, target: &FieldSpec) -> Result<Scalar, ExactError> {
        if self.field == *target {
            return Ok(self.clone());
        }
        if let Some(r) = self.to_rational() {
            return Scalar::from_rat(target, &r);
        }
        match target.base() {
            Some(b) => {
                let inner = self.embed(b)?;
                Ok(Scalar::from_value(target, target.const_from_base_v(inner.value)))
            }
            None => Err(ExactError::FieldMismatch(self.field.to_string(), target.to_string())),
        }
    }

    /// Image of a constant element in a sub-level of the tower.
    pub fn restrict(&self, target: &FieldSpec) -> Result<Scalar, ExactError> {
        if self.field == *target {
            return Ok(self.clone());
        }
        let inner = match (self.field.kind(), &self.value) {
            (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
                if m.is_empty() {
                    Scalar::zero(base)
                } else if m.len() == 1 && m.contains_key(&vec![0u32; vars.len()]) {
                    Scalar::from_value(base, m.values().next().unwrap().clone())
                } else {
                    return Err(ExactError::Domain(format!("{self} is not constant")));
                }
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, d)) => {
                if n.len() <= 1 && d.len() == 1 {
                    Scalar::from_value(base, n.first().cloned().unwrap_or_else(|| base.zero_v()))
                } else {
                    return Err(ExactError::Domain(format!("{self} is not constant")));
                }
            }
            _ => return Err(ExactError::FieldMismatch(self.field.to_string(), target.to_string())),
        };
        inner.restrict(target)
    }

    /// Coefficients of a ground-field element in the power basis.
    pub fn ground_coefficients(&self) -> Option<Vec<Rat>> {
        match &self.value {
            Value::Rat(r) => Some(vec![r.clone()]),
            Value::Nf(c) => Some(c.clone()),
            _ => self.restrict(&self.field.ground()).ok().and_then(|s| s.ground_coefficients()),
        }
    }

    /// Substitute values for tower variables (by name), producing an element of `target`.
    pub fn substitute(&self, assignment: &BTreeMap<String, Scalar>, target: &FieldSpec) -> Result<Scalar, ExactError> {
        substitute_value(&self.field, &self.value, assignment, target)
    }

    /// Numerator and denominator in a rational-function level.
    pub fn ratfn_parts(&self) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        match (self.field.kind(), &self.value) {
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, d)) => Some((
                n.iter().map(|v| Scalar::from_value(base, v.clone())).collect(),
                d.iter().map(|v| Scalar::from_value(base, v.clone())).collect(),
            )),
            _ => None,
        }
    }

    /// Polynomial-ring terms as (exponents, base coefficient).
    pub fn poly_terms(&self) -> Option<Vec<(Vec<u32>, Scalar)>> {
        match (self.field.kind(), &self.value) {
            (FieldKind::PolyRing { base, .. }, Value::Poly(m)) => {
                Some(m.iter().map(|(k, v)| (k.clone(), Scalar::from_value(base, v.clone()))).collect())
            }
            _ => None,
        }
    }

    pub fn parse(field: &FieldSpec, text: &str) -> Result<Scalar, ExactError> {
        super::parse::parse_scalar(field, text)
    }
}

fn value_to_rational(field: &FieldSpec, v: &Value) -> Option<Rat> {
    match (field.kind(), v) {
        (_, Value::Rat(r)) => Some(r.clone()),
        (_, Value::Nf(c)) => match c.len() {
            0 => Some(Rat::zero()),
            1 => Some(c[0].clone()),
            _ => None,
        },
        (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
            if m.is_empty() {
                return Some(Rat::zero());
            }
            if m.len() == 1 {
                let (k, c) = m.iter().next().unwrap();
                if k.len() == vars.len() && k.iter().all(|e| *e == 0) {
                    return value_to_rational(base, c);
                }
            }
            None
        }
        (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, d)) => {
            if n.is_empty() {
                return Some(Rat::zero());
            }
            if n.len() == 1 && d.len() == 1 {
                let a = value_to_rational(base, &n[0])?;
                let b = value_to_rational(base, &d[0])?;
                return Some(a / b);
            }
            None
        }
        _ => None,
    }
}

fn value_is_constant(v: &Value) -> bool {
    match v {
        Value::Poly(m) => m.is_empty() || (m.len() == 1 && m.keys().next().unwrap().iter().all(|e| *e == 0)),
        Value::RatFn(n, d) => n.len() <= 1 && d.len() == 1,
        _ => true,
    }
}

fn substitute_value(
    field: &FieldSpec,
    v: &Value,
    assignment: &BTreeMap<String, Scalar>,
    target: &FieldSpec,
) -> Result<Scalar, ExactError> {
    match (field.kind(), v) {
        (FieldKind::Rationals, Value::Rat(r)) => Scalar::from_rat(target, r),
        (FieldKind::NumberField { name, .. }, Value::Nf(c)) => {
            let gen = match assignment.get(name) {
                Some(g) => g.clone(),
                None => Scalar::from_value(field, Value::Nf(vec![Rat::zero(), Rat::one()])).embed(target)?,
            };
            let mut acc = Scalar::zero(target);
            for x in c.iter().rev() {
                acc = &(&acc * &gen) + &Scalar::from_rat(target, x)?;
            }
            Ok(acc)
        }
        (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
            let gens: Vec<Scalar> = vars
                .iter()
                .map(|x| match assignment.get(x) {
                    Some(s) => Ok(s.clone()),
                    None => Scalar::variable(target, x)
                        .ok_or_else(|| ExactError::Domain(format!("no value for variable {x}"))),
                })
                .collect::<Result<_, _>>()?;
            let mut acc = Scalar::zero(target);
            for (k, c) in m {
                let mut t = substitute_value(base, c, assignment, target)?;
                for (e, g) in k.iter().zip(&gens) {
                    if *e > 0 {
                        t = &t * &g.pow(*e);
                    }
                }
                acc = &acc + &t;
            }
            Ok(acc)
        }
        (FieldKind::RationalFunctions { base, var }, Value::RatFn(n, d)) => {
            let g = match assignment.get(var) {
                Some(s) => s.clone(),
                None => Scalar::variable(target, var)
                    .ok_or_else(|| ExactError::Domain(format!("no value for variable {var}")))?,
            };
            let ev = |p: &[Value]| -> Result<Scalar, ExactError> {
                let mut acc = Scalar::zero(target);
                for c in p.iter().rev() {
                    acc = &(&acc * &g) + &substitute_value(base, c, assignment, target)?;
                }
                Ok(acc)
            };
            let num = ev(n)?;
            let den = ev(d)?;
            num.checked_div(&den)
        }
        (FieldKind::PrimeField { .. }, Value::Fp(x)) => {
            if target == field {
                Ok(Scalar::from_value(field, Value::Fp(*x)))
            } else {
                Err(ExactError::FieldMismatch(field.to_string(), target.to_string()))
            }
        }
        _ => unreachable!("value does not match field"),
    }
}

fn check_same(a: &Scalar, b: &Scalar) {
    assert!(a.field == b.field, "field mismatch: {} vs {}", a.field, b.field);
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        Scalar::from_value(&self.field, self.field.add_v(&self.value, &rhs.value))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        Scalar::from_value(&self.field, self.field.sub_v(&self.value, &rhs.value))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        Scalar::from_value(&self.field, self.field.mul_v(&self.value, &rhs.value))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_value(&self.field, self.field.neg_v(&self.value))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.field.fmt_value(&self.value, f)
    }
}

/// Prime, chosen root of the number-field modulus and values for tower variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialization {
    pub p: u64,
    pub root: Option<u64>,
    pub point: BTreeMap<String, u64>,
}

/// Reduce an element modulo `p`, sending the number-field generator to `root`
/// and each tower variable to its value in `spec.point`.
pub fn reduce_mod_prime(s: &Scalar, spec: &Specialization) -> Result<u64, ExactError> {
    use super::field::{inv_mod, mul_mod, rat_mod_p};
    fn go(field: &FieldSpec, v: &Value, spec: &Specialization) -> Result<u64, ExactError> {
        let p = spec.p;
        match (field.kind(), v) {
            (_, Value::Rat(r)) => rat_mod_p(r, p)
                .ok_or_else(|| ExactError::DivisionByZero(format!("denominator of {r} divisible by {p}"))),
            (FieldKind::NumberField { modulus, name }, Value::Nf(c)) => {
                let root = spec
                    .root
                    .ok_or_else(|| ExactError::Domain(format!("no root chosen for {name} modulo {p}")))?;
                let mut acc = 0u64;
                for x in modulus.iter().rev() {
                    let xm = rat_mod_p(x, p).ok_or_else(|| ExactError::DivisionByZero("modulus".into()))?;
                    acc = (mul_mod(acc, root, p) + xm) % p;
                }
                if acc != 0 {
                    return Err(ExactError::Domain(format!("{root} is not a root of the {name} modulus modulo {p}")));
                }
                let mut acc = 0u64;
                for x in c.iter().rev() {
                    let xm = rat_mod_p(x, p)
                        .ok_or_else(|| ExactError::DivisionByZero(format!("denominator of {x} divisible by {p}")))?;
                    acc = (mul_mod(acc, root, p) + xm) % p;
                }
                Ok(acc)
            }
            (FieldKind::PolyRing { base, vars }, Value::Poly(m)) => {
                let vals: Vec<u64> = vars
                    .iter()
                    .map(|x| {
                        spec.point
                            .get(x)
                            .map(|u| u % p)
                            .ok_or_else(|| ExactError::Domain(format!("no value for variable {x}")))
                    })
                    .collect::<Result<_, _>>()?;
                let mut acc = 0u64;
                for (k, c) in m {
                    let mut t = go(base, c, spec)?;
                    for (e, u) in k.iter().zip(&vals) {
                        for _ in 0..*e {
                            t = mul_mod(t, *u, p);
                        }
                    }
                    acc = (acc + t) % p;
                }
                Ok(acc)
            }
            (FieldKind::RationalFunctions { base, var }, Value::RatFn(n, d)) => {
                let u = spec
                    .point
                    .get(var)
                    .map(|u| u % p)
                    .ok_or_else(|| ExactError::Domain(format!("no value for variable {var}")))?;
                let ev = |q: &[Value]| -> Result<u64, ExactError> {
                    let mut acc = 0u64;
                    for c in q.iter().rev() {
                        acc = (mul_mod(acc, u, p) + go(base, c, spec)?) % p;
                    }
                    Ok(acc)
                };
                let a = ev(n)?;
                let b = ev(d)?;
                let ib = inv_mod(b, p)
                    .ok_or_else(|| ExactError::DivisionByZero(format!("denominator vanishes at {var} = {u} mod {p}")))?;
                Ok(mul_mod(a, ib, p))
            }
            (FieldKind::PrimeField { p: q }, Value::Fp(x)) => {
                if *q == p {
                    Ok(*x)
                } else {
                    Err(ExactError::Domain(format!("cannot reduce GF({q}) element modulo {p}")))
                }
            }
            _ => unreachable!("value does not match field"),
        }
    }
    go(&s.field, &s.value, spec)
}

/// Roots of the number-field modulus of `field` modulo `p`, ascending.
pub fn modulus_roots_mod_p(field: &FieldSpec, p: u64) -> Vec<u64> {
    use super::field::{mul_mod, rat_mod_p};
    let m = match field.ground().modulus() {
        Some(m) => m.to_vec(),
        None => return vec![],
    };
    let coeffs: Option<Vec<u64>> = m.iter().map(|c| rat_mod_p(c, p)).collect();
    let Some(coeffs) = coeffs else { return vec![] };
    (0..p)
        .filter(|&x| {
            let mut acc = 0u64;
            for c in coeffs.iter().rev() {
                acc = (mul_mod(acc, x, p) + c) % p;
            }
            acc == 0
        })
        .collect()
}

/// Least common multiple of the rational denominators occurring in a constant element.
pub fn ground_denominator(s: &Scalar) -> BigInt {
    fn go(field: &FieldSpec, v: &Value) -> BigInt {
        use num_integer::Integer;
        match (field.kind(), v) {
            (_, Value::Rat(r)) => r.denom().clone(),
            (_, Value::Nf(c)) => c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom())),
            (FieldKind::PolyRing { base, .. }, Value::Poly(m)) => {
                m.values().fold(BigInt::one(), |acc, c| acc.lcm(&go(base, c)))
            }
            (FieldKind::RationalFunctions { base, .. }, Value::RatFn(n, _)) => {
                n.iter().fold(BigInt::one(), |acc, c| acc.lcm(&go(base, c)))
            }
            _ => BigInt::one(),
        }
    }
    go(&s.field, &s.value)
}
