use crate::exactalg::{FieldSpec, Scalar};
use crate::refgroup::ReflectionGroup;

use super::algebra::CherednikAlgebra;
use super::param::CherednikParameter;
use super::pbw::PbwElement;
use super::CherednikError;

/// Scalar by which the Euler element acts on the lowest-degree piece of `Delta(irrep)`:
/// `sum_s eps_s/(eps_s - 1) c(s) chi(s)/chi(1)`.
pub fn euler_scalar(g: &ReflectionGroup, c: &[Scalar], irrep: usize) -> Scalar {
    let f = c[0].field().clone();
    let ir = &g.irreps()[irrep];
    let inv_dim = Scalar::from_frac(&f, 1, ir.dim as i64);
    let mut acc = Scalar::zero(&f);
    for r in g.reflections() {
        let eps = r.eigenvalue.embed(&f).expect("group field embeds");
        let factor = eps.checked_div(&(&eps - &Scalar::one(&f))).expect("eigenvalue differs from 1");
        let chi = ir.character[r.element].embed(&f).expect("group field embeds");
        acc = &acc + &(&(&factor * &c[r.class]) * &chi);
    }
    &acc * &inv_dim
}

/// Irreps grouped by equal Euler scalar, ordered by smallest member; indices are 0-based.
pub fn euler_families(g: &ReflectionGroup, c: &[Scalar]) -> Vec<(Vec<usize>, Scalar)> {
    let mut fams: Vec<(Vec<usize>, Scalar)> = vec![];
    for i in 0..g.irreps().len() {
        let s = euler_scalar(g, c, i);
        match fams.iter_mut().find(|(_, v)| *v == s) {
            Some((members, _)) => members.push(i),
            None => fams.push((vec![i], s)),
        }
    }
    fams
}

/// `{a, b}` for central `a, b` in `H_{0,c}`: the `eps`-coefficient of `[a, b]` computed in `H_{eps,c}`
/// over the dual numbers.
pub fn poisson_bracket(alg: &CherednikAlgebra, a: &PbwElement, b: &PbwElement) -> Result<PbwElement, CherednikError> {
    if !alg.parameter().t().is_zero() {
        return Err(CherednikError::Parameter("Poisson bracket needs t = 0".into()));
    }
    for (name, z) in [("first", a), ("second", b)] {
        if !alg.is_central(z) {
            return Err(CherednikError::NonCentral(format!("{name} argument")));
        }
    }
    let base = alg.field().clone();
    let dual = FieldSpec::poly_ring(&base, &["eps"]);
    let eps = Scalar::variable(&dual, "eps").unwrap();
    let param: CherednikParameter = alg.parameter().embed(&dual)?.with_t(eps);
    let deformed = CherednikAlgebra::new(alg.group().clone(), param)?;
    let lift = |z: &PbwElement| z.map_coeffs(&dual, |v| v.embed(&dual).unwrap());
    let comm = deformed.commutator(&lift(a), &lift(b));
    let part = |k: u32| {
        comm.map_coeffs(&base, |v| {
            v.poly_terms()
                .unwrap()
                .into_iter()
                .find(|(m, _)| m[0] == k)
                .map(|(_, c)| c)
                .unwrap_or_else(|| Scalar::zero(&base))
        })
    };
    if !part(0).is_zero() {
        return Err(CherednikError::NonCentral("commutator does not vanish at t = 0".into()));
    }
    Ok(part(1))
}
