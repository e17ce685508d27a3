//! Dense univariate polynomials over a field level, low degree first.

use super::field::{FieldSpec, Value};

pub(crate) fn trim(base: &FieldSpec, v: &mut Vec<Value>) {
    while v.last().is_some_and(|c| base.is_zero_v(c)) {
        v.pop();
    }
}

pub(crate) fn is_one(base: &FieldSpec, p: &[Value]) -> bool {
    p.len() == 1 && base.is_one_v(&p[0])
}

pub(crate) fn neg(base: &FieldSpec, p: &[Value]) -> Vec<Value> {
    p.iter().map(|c| base.neg_v(c)).collect()
}

pub(crate) fn add(base: &FieldSpec, a: &[Value], b: &[Value]) -> Vec<Value> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => base.add_v(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(base, &mut out);
    out
}

pub(crate) fn mul(base: &FieldSpec, a: &[Value], b: &[Value]) -> Vec<Value> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    if is_one(base, a) {
        return b.to_vec();
    }
    if is_one(base, b) {
        return a.to_vec();
    }
    let mut out = vec![base.zero_v(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero_v(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if base.is_zero_v(y) {
                continue;
            }
            let t = base.mul_v(x, y);
            out[i + j] = base.add_v(&out[i + j], &t);
        }
    }
    trim(base, &mut out);
    out
}

pub(crate) fn scale(base: &FieldSpec, a: &[Value], c: &Value) -> Vec<Value> {
    let mut out: Vec<Value> = a.iter().map(|x| base.mul_v(x, c)).collect();
    trim(base, &mut out);
    out
}

/// Lowest exponent with a nonzero coefficient.
fn valuation(base: &FieldSpec, a: &[Value]) -> usize {
    a.iter().position(|c| !base.is_zero_v(c)).unwrap_or(0)
}

fn is_monomial(base: &FieldSpec, a: &[Value]) -> bool {
    !a.is_empty() && valuation(base, a) == a.len() - 1
}

pub(crate) fn divrem(base: &FieldSpec, a: &[Value], b: &[Value]) -> (Vec<Value>, Vec<Value>) {
    let mut r = a.to_vec();
    trim(base, &mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let il = base.inv_v(&b[db]).expect("division by zero polynomial");
    let mut q = vec![base.zero_v(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = base.mul_v(&r[r.len() - 1], &il);
        for (i, bi) in b.iter().enumerate() {
            if base.is_zero_v(bi) {
                continue;
            }
            let t = base.mul_v(&c, bi);
            r[k + i] = base.sub_v(&r[k + i], &t);
        }
        q[k] = c;
        trim(base, &mut r);
    }
    trim(base, &mut q);
    (q, r)
}

pub(crate) fn div_exact(base: &FieldSpec, a: &[Value], b: &[Value]) -> Vec<Value> {
    if is_one(base, b) {
        return a.to_vec();
    }
    let (q, r) = divrem(base, a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

fn make_monic(base: &FieldSpec, a: Vec<Value>) -> Vec<Value> {
    match a.last() {
        None => a,
        Some(lc) if base.is_one_v(lc) => a,
        Some(lc) => {
            let il = base.inv_v(lc).unwrap();
            scale(base, &a, &il)
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(base: &FieldSpec, a: &[Value], b: &[Value]) -> Vec<Value> {
    if a.is_empty() {
        return make_monic(base, b.to_vec());
    }
    if b.is_empty() {
        return make_monic(base, a.to_vec());
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![base.one_v()];
    }
    if is_monomial(base, a) || is_monomial(base, b) {
        let e = valuation(base, a).min(valuation(base, b));
        let mut g = vec![base.zero_v(); e + 1];
        g[e] = base.one_v();
        return g;
    }
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(base, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(base, x)
}

