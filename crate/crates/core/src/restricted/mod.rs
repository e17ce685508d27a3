//! The restricted rational Cherednik algebra at `t = 0`: PBW arithmetic modulo
//! the Hilbert ideals on both sides, and the good-prime machinery.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cherednik::{CherednikAlgebra, CherednikError, CherednikParameter, PbwElement};
use crate::exactalg::{ground_denominator, Scalar};
use crate::groebner::{normal_form, MonomialOrder, MultiPoly};
use crate::refgroup::{ReflectionGroup, Side};

/// `H_{0,c}` modulo the ideal generated by positive-degree invariants of `K[V]` and `K[V*]`.
pub struct RestrictedAlgebra {
    algebra: CherednikAlgebra,
    /// Union of both Hilbert-ideal Gröbner bases, in the variables `x_1..x_n, y_1..y_n`.
    ideal: Vec<MultiPoly>,
}

impl RestrictedAlgebra {
    pub fn new(group: Arc<ReflectionGroup>, c: Vec<Scalar>) -> Result<Self, CherednikError> {
        let param = CherednikParameter::at_t_zero(&group, c)?;
        let field = param.field().clone();
        let n = group.dim();
        let mut ideal = vec![];
        for (side, offset) in [(Side::X, 0), (Side::Y, n)] {
            for f in &group.coinvariants(side).ideal {
                let mut p = MultiPoly::zero(&field, 2 * n);
                for (m, v) in f.terms() {
                    let mut mm = vec![0u32; 2 * n];
                    mm[offset..offset + n].copy_from_slice(m);
                    p.add_term(mm, v.embed(&field)?);
                }
                ideal.push(p);
            }
        }
        let algebra = CherednikAlgebra::new(group, param)?;
        Ok(RestrictedAlgebra { algebra, ideal })
    }

    pub fn algebra(&self) -> &CherednikAlgebra {
        &self.algebra
    }

    /// `dim K[V]_G * |G| * dim K[V*]_G`.
    pub fn dim(&self) -> usize {
        let g = self.algebra.group();
        g.coinvariants(Side::X).dim() * g.order() * g.coinvariants(Side::Y).dim()
    }

    /// Image of an `H_{0,c}` element in PBW form over the coinvariant bases.
    pub fn reduce(&self, a: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero(a.field(), a.rank());
        for (&g, p) in a.terms() {
            out.add_poly(g, normal_form(p, &self.ideal, MonomialOrder::Lex));
        }
        out
    }

    pub fn product(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.reduce(&self.algebra.product(a, b))
    }

    /// Whether every term lies on the coinvariant monomial bases.
    pub fn is_reduced(&self, a: &PbwElement) -> bool {
        self.reduce(a) == *a
    }
}

fn prime_factors(mut n: BigInt, out: &mut BTreeSet<u64>) {
    let mut d = BigInt::from(2u32);
    while &d * &d <= n {
        while n.is_multiple_of(&d) {
            out.insert(d.to_u64().expect("small prime"));
            n /= &d;
        }
        d += 1u32;
    }
    if n > BigInt::one() {
        out.insert(n.to_u64().expect("prime factor fits in u64"));
    }
}

/// Primes dividing a denominator of: coinvariant structure constants on both sides,
/// generator matrices on `V` and `V*`, and their inverses. Every other prime is good.
pub fn bad_primes(g: &ReflectionGroup) -> BTreeSet<u64> {
    let mut den = BigInt::one();
    let mut absorb = |s: &Scalar| {
        den = den.lcm(&ground_denominator(s));
    };
    for side in [Side::X, Side::Y] {
        let co = g.coinvariants(side);
        let f = &co.field;
        for a in &co.monomials {
            for b in &co.monomials {
                let m: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                for (_, v) in co.coords(&MultiPoly::monomial(f, m, Scalar::one(f))) {
                    absorb(&v);
                }
            }
        }
    }
    for k in 0..g.num_generators() {
        let e = g.generator_element(k);
        for m in [g.element(e), g.dual_element(e), g.element(g.inverse(e)), g.dual_element(g.inverse(e))] {
            for (_, _, v) in m.entries() {
                absorb(v);
            }
        }
    }
    let mut out = BTreeSet::new();
    if !den.is_zero() {
        prime_factors(den, &mut out);
    }
    out
}

/// Whether `c(s) (y_j, x_i)_s` is `p`-integral for every reflection and every `i, j`.
/// `c` must take constant values in the group's field.
pub fn is_potentially_integral(g: &ReflectionGroup, c: &[Scalar], p: u64) -> Result<bool, CherednikError> {
    let pb = BigInt::from(p);
    for r in g.reflections() {
        let cs = c[r.class].restrict(g.field()).map_err(|_| {
            CherednikError::Parameter("potential integrality needs a parameter without free variables".into())
        })?;
        for row in &r.pairing {
            for v in row {
                if ground_denominator(&(&cs * v)).is_multiple_of(&pb) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
