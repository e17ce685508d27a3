use std::fmt;

use crate::exactalg::{ExactError, ExactMatrix, FieldKind, Scalar, SparseVec};

use super::coinvariant::Side;
use super::group::{Irrep, ReflectionGroup};

/// `phi_{dim,b}` with prime ticks separating ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrepLabel {
    pub dim: usize,
    pub b: u32,
    pub ticks: usize,
    /// Fake degree coefficients, constant term first.
    pub fake_degree: Vec<u64>,
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi_{{{},{}}}{}", self.dim, self.b, "'".repeat(self.ticks))
    }
}

/// Multiplicity of `irrep` in each graded piece of `K[V*]_G` (polynomials in the `y_i`).
pub fn fake_degree(g: &ReflectionGroup, irrep: usize) -> Vec<u64> {
    let co = g.coinvariants(Side::Y);
    let chi = &g.irreps()[irrep].character;
    (0..=co.max_degree())
        .map(|d| {
            let m = g.inner_product(&co.graded_character(d), chi);
            let r = m.to_rational().expect("rational multiplicity");
            assert!(r.is_integer(), "non-integral multiplicity");
            r.to_integer().try_into().expect("nonnegative multiplicity")
        })
        .collect()
}

pub(crate) fn compute_labels(g: &ReflectionGroup) -> Vec<IrrepLabel> {
    let mut labels: Vec<IrrepLabel> = (0..g.irreps().len())
        .map(|i| {
            let fd = fake_degree(g, i);
            let b = fd.iter().position(|&c| c > 0).expect("every irrep occurs in the coinvariants") as u32;
            IrrepLabel { dim: g.irreps()[i].dim, b, ticks: 0, fake_degree: fd }
        })
        .collect();
    // ties in (dim, b): ticks by lex-smallest fake degree, then by irrep index
    for i in 0..labels.len() {
        let tied: Vec<usize> =
            (0..labels.len()).filter(|&j| labels[j].dim == labels[i].dim && labels[j].b == labels[i].b).collect();
        if tied.len() > 1 {
            let rank = tied
                .iter()
                .filter(|&&j| (&labels[j].fake_degree, j) < (&labels[i].fake_degree, i))
                .count();
            labels[i].ticks = rank + 1;
        }
    }
    labels
}

/// Roots of unity available in the ground field, as candidate eigenvalues.
fn roots_of_unity(g: &ReflectionGroup) -> Vec<Scalar> {
    let f = g.field();
    let mut out = vec![Scalar::one(f), -Scalar::one(f)];
    if let FieldKind::NumberField { name, .. } = f.kind() {
        let z = Scalar::variable(f, name).unwrap();
        let n: u32 = name.trim_start_matches('z').parse().unwrap_or(1);
        for j in 1..n {
            let p = z.pow(j);
            for c in [p.clone(), -&p] {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Conjugate `irrep` so that generator `k` acts diagonally.
pub(crate) fn diagonalize(g: &ReflectionGroup, irrep: &Irrep, k: usize) -> Result<Irrep, ExactError> {
    let m = &irrep.generators[k];
    let mut cols: Vec<SparseVec> = vec![];
    for lambda in roots_of_unity(g) {
        cols.extend(ReflectionGroup::eigenspace(m, &lambda));
    }
    if cols.len() != irrep.dim {
        return Err(ExactError::Domain("designated generator is not diagonalisable over the ground field".into()));
    }
    let p = ExactMatrix::from_columns(g.field(), irrep.dim, cols);
    let pi = p.inverse()?;
    let conj = |a: &ExactMatrix| pi.mul(a).mul(&p);
    Ok(Irrep {
        dim: irrep.dim,
        generators: irrep.generators.iter().map(conj).collect(),
        elements: irrep.elements.iter().map(conj).collect(),
        character: irrep.character.clone(),
    })
}
