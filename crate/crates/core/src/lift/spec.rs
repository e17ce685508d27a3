use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use crate::exactalg::{is_prime, modulus_roots_mod_p, reduce_mod_prime, FieldSpec, Scalar, Specialization};
use crate::verma::GradedModule;

use super::LiftError;

/// A prime, a root of the number-field modulus modulo it, and integer values for the free parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteFieldSpec(pub Specialization);

impl FiniteFieldSpec {
    pub fn new(p: u64, root: Option<u64>, point: BTreeMap<String, u64>) -> Self {
        FiniteFieldSpec(Specialization { p, root, point })
    }

    pub fn prime(&self) -> u64 {
        self.0.p
    }

    pub fn root(&self) -> Option<u64> {
        self.0.root
    }

    pub fn point(&self) -> &BTreeMap<String, u64> {
        &self.0.point
    }

    pub fn target(&self) -> FieldSpec {
        FieldSpec::prime_field(self.0.p).expect("prime")
    }

    pub fn reduce(&self, s: &Scalar) -> Result<u64, LiftError> {
        reduce_mod_prime(s, &self.0).map_err(|e| LiftError::Specialization(e.to_string()))
    }
}

impl fmt::Display for FiniteFieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p = {}", self.0.p)?;
        if let Some(r) = self.0.root {
            write!(f, ", root = {r}")?;
        }
        for (k, v) in &self.0.point {
            write!(f, ", {k} = {v}")?;
        }
        Ok(())
    }
}

/// Entrywise evaluation at the parameter point followed by reduction modulo `p`.
pub fn specialize_module(m: &GradedModule, spec: &FiniteFieldSpec) -> Result<GradedModule, LiftError> {
    let target = spec.target();
    if m.field() == &target {
        return Ok(m.clone());
    }
    m.map_entries(&target, |s| {
        reduce_mod_prime(s, &spec.0).map(|v| Scalar::from_int(&target, v as i64))
    })
    .map_err(|e| LiftError::Specialization(e.to_string()))
}

/// Prime window and parameter range for random specializations.
#[derive(Clone, Debug)]
pub struct DrawPolicy {
    pub primes: std::ops::Range<u64>,
    pub values: std::ops::RangeInclusive<u64>,
    pub exclude: BTreeSet<u64>,
}

impl Default for DrawPolicy {
    fn default() -> Self {
        DrawPolicy { primes: 10_000..60_000, values: 1..=999, exclude: BTreeSet::new() }
    }
}

/// Draw a prime from the window that splits the number field and avoids `exclude`,
/// one of its roots, and a value for each free parameter.
pub fn draw_specialization<R: Rng>(field: &FieldSpec, policy: &DrawPolicy, rng: &mut R) -> FiniteFieldSpec {
    let ground = field.ground();
    let degree = ground.number_field_degree();
    loop {
        let p = rng.gen_range(policy.primes.clone());
        if !is_prime(p) || policy.exclude.contains(&p) {
            continue;
        }
        let roots = modulus_roots_mod_p(&ground, p);
        if degree > 1 && roots.len() != degree {
            continue;
        }
        let root = (degree > 1).then(|| roots[rng.gen_range(0..roots.len())]);
        let point = field.variables().into_iter().map(|v| (v, rng.gen_range(policy.values.clone()))).collect();
        return FiniteFieldSpec::new(p, root, point);
    }
}
