//! Multivariate polynomials, Buchberger's algorithm, normal forms and
//! standard monomials of zero-dimensional quotients.

mod poly;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

pub use poly::{degree, divides, lcm, Monomial, MonomialOrder, MultiPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("quotient is not finite dimensional")]
    InfiniteQuotient,
    #[error("empty generator list")]
    Empty,
}

/// Full reduction of `f` modulo `basis`; the result has no term divisible by a leading monomial.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let leads: Vec<(Monomial, crate::exactalg::Scalar)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.inv().expect("field coefficients"))))
        .collect();
    let mut rest = f.clone();
    let mut out = MultiPoly::zero(f.field(), f.nvars());
    while let Some((m, c)) = rest.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().position(|(l, _)| divides(l, &m));
        match hit {
            Some(k) => {
                let shift: Monomial = m.iter().zip(&leads[k].0).map(|(a, b)| a - b).collect();
                let factor = -&(&c * &leads[k].1);
                rest.add_scaled(&factor, &shift, &basis[k]);
            }
            None => {
                out.add_term(m.clone(), c.clone());
                rest.add_term(m, -&c);
            }
        }
    }
    out
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading(order).unwrap();
    let (mg, cg) = g.leading(order).unwrap();
    let l = lcm(mf, mg);
    let sf: Monomial = l.iter().zip(mf).map(|(a, b)| a - b).collect();
    let sg: Monomial = l.iter().zip(mg).map(|(a, b)| a - b).collect();
    let mut s = MultiPoly::zero(f.field(), f.nvars());
    s.add_scaled(&cf.inv().unwrap(), &sf, f);
    s.add_scaled(&-&cg.inv().unwrap(), &sg, g);
    s
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial).
pub fn groebner_basis(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<MultiPoly>, GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::Empty)?;
    let mut g: Vec<MultiPoly> = gens.iter().filter(|p| !p.is_zero()).map(|p| p.make_monic(order)).collect();
    if g.is_empty() {
        return Ok(vec![MultiPoly::zero(first.field(), first.nvars())]);
    }
    let lm = |p: &MultiPoly| p.leading(order).unwrap().0.clone();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    while let Some((i, j)) = pairs.pop_front() {
        let (li, lj) = (lm(&g[i]), lm(&g[j]));
        let l = lcm(&li, &lj);
        done.insert((i, j));
        // product criterion
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(&lm(&g[k]), &l)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&g[i], &g[j], order);
        let r = normal_form(&s, &g, order);
        if !r.is_zero() {
            let n = g.len();
            g.push(r.make_monic(order));
            for k in 0..n {
                pairs.push_back((k, n));
            }
        }
    }
    // minimalise then interreduce
    let mut keep: Vec<MultiPoly> = vec![];
    for (a, p) in g.iter().enumerate() {
        let la = lm(p);
        let redundant = g.iter().enumerate().any(|(b, q)| {
            let lb = lm(q);
            b != a && divides(&lb, &la) && (lb != la || b < a)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<MultiPoly> = keep.iter().enumerate().filter(|(b, _)| *b != k).map(|(_, q)| q.clone()).collect();
        let (m, c) = keep[k].leading(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = keep[k].clone();
        tail.add_term(m.clone(), -&c);
        let mut p = normal_form(&tail, &others, order);
        p.add_term(m, c);
        reduced.push(p.make_monic(order));
    }
    reduced.sort_by(|a, b| order.cmp(&lm(a), &lm(b)));
    Ok(reduced)
}

/// Monomials not divisible by any leading monomial of `basis`, sorted by
/// degree and, within a degree, decreasingly in `order`.
pub fn standard_monomials(basis: &[MultiPoly], nvars: usize, order: MonomialOrder) -> Result<Vec<Monomial>, GroebnerError> {
    let leads: Vec<Monomial> = basis.iter().filter_map(|g| g.leading(order).map(|(m, _)| m.clone())).collect();
    let mut bounds = vec![u32::MAX; nvars];
    for l in &leads {
        let nz: Vec<usize> = (0..nvars).filter(|&i| l[i] > 0).collect();
        if nz.len() == 1 {
            bounds[nz[0]] = bounds[nz[0]].min(l[nz[0]]);
        }
    }
    if nvars > 0 && leads.iter().any(|l| l.iter().all(|e| *e == 0)) {
        return Ok(vec![]);
    }
    if bounds.iter().any(|b| *b == u32::MAX) {
        return Err(GroebnerError::InfiniteQuotient);
    }
    let mut out = vec![];
    let mut cur = vec![0u32; nvars];
    loop {
        if !leads.iter().any(|l| divides(l, &cur)) {
            out.push(cur.clone());
        }
        // odometer over the bounding box
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| order.cmp(b, a)));
                return Ok(out);
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests;
