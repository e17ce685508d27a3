use crate::exactalg::{ExactMatrix, Scalar};
use crate::groebner::MultiPoly;
use crate::refgroup::{act_on_poly, ReflectionGroup, Side};

/// Parameter-free part of the `y_i` action on `K[V]_G`, one matrix per `(i, s)`.
///
/// Column `mu` of `matrix(i, r)` holds the coordinates of
/// `sum_t (y_i, x_t)_s x_1^mu_1 .. x_{t-1}^mu_{t-1} (sum_l x_t^l (^s x_t)^(mu_t-l-1)) ^s(x_{t+1}^mu_{t+1} .. x_n^mu_n)`
/// for the `r`-th reflection `s`.
#[derive(Clone, Debug)]
pub struct XTable {
    tables: Vec<Vec<ExactMatrix>>,
}

impl XTable {
    pub fn new(g: &ReflectionGroup) -> Self {
        let co = g.coinvariants(Side::X);
        let f = g.field();
        let n = g.dim();
        let mono = |m: Vec<u32>| MultiPoly::monomial(f, m, Scalar::one(f));
        let tables = (0..n)
            .map(|i| {
                g.reflections()
                    .iter()
                    .map(|r| {
                        let l = g.linear_action(Side::X, r.element);
                        let cols = co
                            .monomials
                            .iter()
                            .map(|mu| {
                                let mut total = MultiPoly::zero(f, n);
                                for t in 0..n {
                                    if mu[t] == 0 || r.pairing[i][t].is_zero() {
                                        continue;
                                    }
                                    let mut start = vec![0; n];
                                    start[..t].copy_from_slice(&mu[..t]);
                                    let mut end = vec![0; n];
                                    end[t + 1..].copy_from_slice(&mu[t + 1..]);
                                    let mut middle = MultiPoly::zero(f, n);
                                    for k in 0..mu[t] {
                                        let mut a = vec![0; n];
                                        a[t] = k;
                                        let mut b = vec![0; n];
                                        b[t] = mu[t] - k - 1;
                                        middle = middle.add(&mono(a).mul(&act_on_poly(l, &mono(b))));
                                    }
                                    let term = mono(start).mul(&middle).mul(&act_on_poly(l, &mono(end)));
                                    total = total.add(&term.scale(&r.pairing[i][t]));
                                }
                                co.coords(&total)
                            })
                            .collect();
                        ExactMatrix::from_columns(f, co.dim(), cols)
                    })
                    .collect()
            })
            .collect();
        XTable { tables }
    }

    /// Matrix for `y_i` and the `r`-th reflection of the group.
    pub fn matrix(&self, i: usize, r: usize) -> &ExactMatrix {
        &self.tables[i][r]
    }
}
