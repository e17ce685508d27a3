//! Normal forms by single-step rewriting in the tensor algebra on
//! `x_i, y_i` and the group generators. Slow; used as an oracle.

use std::collections::BTreeMap;

use crate::exactalg::Scalar;

use super::algebra::CherednikAlgebra;
use super::pbw::PbwElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Letter {
    X(usize),
    Y(usize),
    G(usize),
}

type Word = Vec<Letter>;

fn to_words(alg: &CherednikAlgebra, a: &PbwElement) -> Vec<(Word, Scalar)> {
    let g = alg.group();
    a.iter_terms()
        .map(|(e, alpha, beta, c)| {
            let mut w = vec![];
            for (i, &k) in alpha.iter().enumerate() {
                w.extend(std::iter::repeat(Letter::X(i)).take(k as usize));
            }
            for (i, &k) in beta.iter().enumerate() {
                w.extend(std::iter::repeat(Letter::Y(i)).take(k as usize));
            }
            w.extend(g.word(e).iter().map(|&k| Letter::G(k)));
            (w, c.clone())
        })
        .collect()
}

/// One elementary rule applied at the leftmost reducible position, or `None` if `w` is in normal form.
fn rewrite_once(alg: &CherednikAlgebra, w: &[Letter]) -> Option<Vec<(Word, Scalar)>> {
    let f = alg.field();
    let n = alg.rank();
    let g = alg.group();
    let one = Scalar::one(f);
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        let splice = |mid: &[Letter]| -> Word {
            let mut v = w[..p].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[p + 2..]);
            v
        };
        match (a, b) {
            (Letter::X(j), Letter::X(i)) | (Letter::Y(j), Letter::Y(i)) if j > i => {
                return Some(vec![(splice(&[b, a]), one)]);
            }
            (Letter::Y(i), Letter::X(j)) => {
                let mut out = vec![(splice(&[b, a]), one.clone())];
                if i == j && !alg.parameter().t().is_zero() {
                    out.push((splice(&[]), alg.parameter().t().clone()));
                }
                for r in g.reflections() {
                    let coef = &r.pairing[i][j].embed(f).unwrap() * &alg.parameter().c()[r.class];
                    if !coef.is_zero() {
                        let sw: Vec<Letter> = g.word(r.element).iter().map(|&k| Letter::G(k)).collect();
                        out.push((splice(&sw), coef));
                    }
                }
                return Some(out);
            }
            (Letter::G(k), Letter::X(i)) | (Letter::G(k), Letter::Y(i)) => {
                let col = if matches!(b, Letter::X(_)) { i } else { n + i };
                let m = alg.group().linear_action(
                    if col < n { crate::refgroup::Side::X } else { crate::refgroup::Side::Y },
                    g.generator_element(k),
                );
                let out = m
                    .col(i)
                    .iter()
                    .map(|(&l, v)| {
                        let letter = if col < n { Letter::X(l) } else { Letter::Y(l) };
                        (splice(&[letter, a]), v.embed(f).unwrap())
                    })
                    .collect();
                return Some(out);
            }
            _ => {}
        }
    }
    None
}

/// Product by exhaustive elementary rewriting; mathematically equal to [`CherednikAlgebra::product`].
pub fn naive_rewrite_product(alg: &CherednikAlgebra, a: &PbwElement, b: &PbwElement) -> PbwElement {
    let f = alg.field().clone();
    let n = alg.rank();
    let g = alg.group().clone();
    let mut pending: BTreeMap<Word, Scalar> = BTreeMap::new();
    let push = |map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar| {
        let e = map.entry(w.clone()).or_insert_with(|| Scalar::zero(&c.field().clone()));
        *e = &*e + &c;
        if e.is_zero() {
            map.remove(&w);
        }
    };
    for (wa, ca) in to_words(alg, a) {
        for (wb, cb) in to_words(alg, b) {
            let mut w = wa.clone();
            w.extend_from_slice(&wb);
            push(&mut pending, w, &ca * &cb);
        }
    }
    let mut out = PbwElement::zero(&f, n);
    while let Some((w, c)) = pending.pop_first() {
        match rewrite_once(alg, &w) {
            Some(rep) => {
                for (nw, k) in rep {
                    push(&mut pending, nw, &c * &k);
                }
            }
            None => {
                let mut alpha = vec![0u32; n];
                let mut beta = vec![0u32; n];
                let mut e = 0usize;
                for l in &w {
                    match *l {
                        Letter::X(i) => alpha[i] += 1,
                        Letter::Y(i) => beta[i] += 1,
                        Letter::G(k) => e = g.mult(e, g.generator_element(k)),
                    }
                }
                out = out.add(&PbwElement::term(&f, &alpha, &beta, e, c));
            }
        }
    }
    out
}
