//! Univariate polynomials over `F_p`, constant term first, for eigenvalue search.

use rand::Rng;

use super::fp::{inv_mod, mul_mod};

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(f, c, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    if let Some(&l) = x.last() {
        let inv = inv_mod(l, p);
        x.iter_mut().for_each(|c| *c = mul_mod(*c, inv, p));
    }
    x
}

fn pow_mod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Distinct roots of `f` in `F_p` (odd `p`), by equal-degree splitting.
pub fn roots<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return vec![];
    }
    let xp = pow_mod_poly(&[0, 1], p, &f, p);
    let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
    let mut out = vec![];
    let mut stack = vec![g];
    while let Some(h) = stack.pop() {
        match h.len() {
            0 | 1 => {}
            2 => out.push((p - mul_mod(h[0], inv_mod(h[1], p), p)) % p),
            _ => loop {
                let a = rng.gen_range(0..p);
                let t = pow_mod_poly(&[a, 1], (p - 1) / 2, &h, p);
                let d = gcd(&h, &sub(&t, &[1], p), p);
                if d.len() > 1 && d.len() < h.len() {
                    let other = div_exact(&h, &d, p);
                    stack.push(d);
                    stack.push(other);
                    break;
                }
            },
        }
    }
    out.sort_unstable();
    out
}

fn div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = mul_mod(*r.last().unwrap(), lead_inv, p);
        q[shift] = f;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(f, c, p)) % p;
        }
        r = trim(r);
    }
    trim(q)
}
