use std::fmt;
use std::str::FromStr;

use crate::exactalg::Scalar;
use crate::refgroup::ReflectionGroup;

use super::construct::{group_element_matrices, StandardLayout};
use super::{GradedModule, VermaError};

/// Polynomial in `t` with nonnegative integer coefficients, constant term first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatPoly(Vec<u64>);

impl NatPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        NatPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, a: u64) -> NatPoly {
        NatPoly::new(self.0.iter().map(|c| c * a).collect())
    }

    pub fn add(&self, other: &NatPoly) -> NatPoly {
        let n = self.0.len().max(other.0.len());
        NatPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0)).collect())
    }
}

impl fmt::Display for NatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.0.iter().enumerate().filter(|(_, c)| **c != 0) {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, e) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{c}t")?,
                _ => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for NatPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(NatPoly::default());
        }
        let mut coeffs = vec![];
        for term in s.split('+') {
            let (c, e) = match term.find('t') {
                None => (term, 0),
                Some(p) => {
                    let e = match &term[p + 1..] {
                        "" => 1,
                        rest => rest.strip_prefix('^').and_then(|x| x.parse().ok()).ok_or(format!("bad term {term}"))?,
                    };
                    (&term[..p], e)
                }
            };
            let c: u64 = if c.is_empty() { 1 } else { c.trim_end_matches('*').parse().map_err(|_| format!("bad term {term}"))? };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += c;
        }
        Ok(NatPoly::new(coeffs))
    }
}

/// Graded multiplicity of each irreducible representation (group order) in `m`.
pub fn graded_character(g: &ReflectionGroup, m: &GradedModule) -> Result<Vec<NatPoly>, VermaError> {
    let layout = StandardLayout::of(g);
    let mut out = vec![vec![]; g.irreps().len()];
    for d in m.degree_set() {
        if d < 0 {
            return Err(VermaError::Character("negative degree".into()));
        }
        let idx = m.basis_in_degree(d);
        let gens: Vec<_> = (0..g.num_generators()).map(|k| m.action(layout.g(k)).submatrix(&idx, &idx)).collect();
        let refs: Vec<_> = gens.iter().collect();
        let elems = group_element_matrices(g, &refs, m.field(), idx.len());
        let chi = elems
            .iter()
            .map(|a| a.trace().restrict(g.field()))
            .collect::<Result<Vec<Scalar>, _>>()
            .map_err(|_| VermaError::Character("trace outside the group field".into()))?;
        for (j, rho) in g.irreps().iter().enumerate() {
            let r = g
                .inner_product(&chi, &rho.character)
                .to_rational()
                .filter(|r| r.is_integer() && *r >= num_rational::BigRational::from_integer(0.into()))
                .ok_or_else(|| VermaError::Character("non-integral multiplicity".into()))?;
            let v: u64 = r.to_integer().try_into().map_err(|_| VermaError::Character("multiplicity overflow".into()))?;
            let slot = &mut out[j];
            slot.resize(d as usize + 1, 0);
            slot[d as usize] = v;
        }
    }
    Ok(out.into_iter().map(NatPoly::new).collect())
}
