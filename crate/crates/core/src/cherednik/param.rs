use std::collections::BTreeMap;

use crate::exactalg::{FieldSpec, Scalar};
use crate::groebner::MultiPoly;
use crate::refgroup::ReflectionGroup;

use super::CherednikError;

/// `(t, c)` with `c` indexed by reflection class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherednikParameter {
    t: Scalar,
    c: Vec<Scalar>,
}

impl CherednikParameter {
    pub fn new(g: &ReflectionGroup, t: Scalar, c: Vec<Scalar>) -> Result<Self, CherednikError> {
        if c.len() != g.num_reflection_classes() {
            return Err(CherednikError::Parameter(format!(
                "{} values given for {} reflection classes",
                c.len(),
                g.num_reflection_classes()
            )));
        }
        if c.iter().any(|v| v.field() != t.field()) {
            return Err(CherednikError::Parameter("t and c live in different rings".into()));
        }
        Ok(CherednikParameter { t, c })
    }

    /// `t = 0` with the given class values.
    pub fn at_t_zero(g: &ReflectionGroup, c: Vec<Scalar>) -> Result<Self, CherednikError> {
        let f = c.first().map(|s| s.field().clone()).unwrap_or_else(|| g.field().clone());
        Self::new(g, Scalar::zero(&f), c)
    }

    pub fn field(&self) -> &FieldSpec {
        self.t.field()
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    pub fn c(&self) -> &[Scalar] {
        &self.c
    }

    pub fn with_t(&self, t: Scalar) -> Self {
        CherednikParameter { t, c: self.c.clone() }
    }

    pub fn embed(&self, target: &FieldSpec) -> Result<Self, CherednikError> {
        Ok(CherednikParameter {
            t: self.t.embed(target)?,
            c: self.c.iter().map(|v| v.embed(target)).collect::<Result<_, _>>()?,
        })
    }
}

/// GGOR parameters `k[orbit][j]`, `j` modulo the hyperplane order of the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GgorParameter {
    k: Vec<Vec<Scalar>>,
}

/// Hyperplane order `e` of each orbit.
pub fn orbit_orders(g: &ReflectionGroup) -> Vec<usize> {
    g.reflection_library().iter().map(|o| o[0].len() + 1).collect()
}

/// Names `k<orbit>_<j>` (1-based orbit, `j >= 1`) of the generic GGOR variables.
pub fn ggor_variable_names(g: &ReflectionGroup) -> Vec<String> {
    orbit_orders(g)
        .iter()
        .enumerate()
        .flat_map(|(o, &e)| (1..e).map(move |j| format!("k{}_{}", o + 1, j)))
        .collect()
}

impl GgorParameter {
    pub fn new(g: &ReflectionGroup, k: Vec<Vec<Scalar>>) -> Result<Self, CherednikError> {
        let orders = orbit_orders(g);
        if k.len() != orders.len() || k.iter().zip(&orders).any(|(v, &e)| v.len() != e) {
            return Err(CherednikError::Parameter("GGOR indices must cover every (orbit, j mod e)".into()));
        }
        Ok(GgorParameter { k })
    }

    /// `k_{orbit,0} = 0` and the remaining entries taken from `assignment` by name (missing ones are 0).
    pub fn from_assignment(
        g: &ReflectionGroup,
        field: &FieldSpec,
        assignment: &BTreeMap<String, Scalar>,
    ) -> Result<Self, CherednikError> {
        let names = ggor_variable_names(g);
        if let Some(bad) = assignment.keys().find(|n| !names.contains(n)) {
            return Err(CherednikError::Parameter(format!("unknown GGOR variable {bad}")));
        }
        let k = orbit_orders(g)
            .iter()
            .enumerate()
            .map(|(o, &e)| {
                (0..e)
                    .map(|j| match assignment.get(&format!("k{}_{}", o + 1, j)) {
                        Some(v) if j > 0 => v.embed(field),
                        _ => Ok(Scalar::zero(field)),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        Ok(GgorParameter { k })
    }

    /// Generic parameter with `k_{orbit,0} = 0`, in the polynomial ring over the group's field.
    pub fn generic(g: &ReflectionGroup) -> Self {
        let names = ggor_variable_names(g);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let field = FieldSpec::poly_ring(g.field(), &refs);
        let assignment = names.iter().map(|n| (n.clone(), Scalar::variable(&field, n).unwrap())).collect();
        Self::from_assignment(g, &field, &assignment).expect("generic names are valid")
    }

    pub fn field(&self) -> &FieldSpec {
        self.k[0][0].field()
    }

    pub fn get(&self, orbit: usize, j: i64) -> &Scalar {
        let e = self.k[orbit].len() as i64;
        &self.k[orbit][j.rem_euclid(e) as usize]
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.k
    }

    /// `k^#_{orbit,j} = k_{orbit,-j}`.
    pub fn sharp(&self) -> Self {
        let k = self
            .k
            .iter()
            .enumerate()
            .map(|(o, v)| (0..v.len() as i64).map(|j| self.get(o, -j).clone()).collect())
            .collect();
        GgorParameter { k }
    }
}

/// `c(s) = sum_{j=0}^{e-1} det(s)^j (k_{orbit(s), j+1} - k_{orbit(s), j})` per reflection class.
pub fn ggor_to_c(g: &ReflectionGroup, k: &GgorParameter) -> Vec<Scalar> {
    let f = k.field().clone();
    g.reflection_classes()
        .iter()
        .map(|&rep| {
            let r = g.reflections().iter().find(|r| r.element == rep).expect("class representative is a reflection");
            let orbit = r.id.0;
            let e = r.hyperplane_order as i64;
            let det = r.eigenvalue.embed(&f).expect("group field embeds");
            let mut acc = Scalar::zero(&f);
            let mut power = Scalar::one(&f);
            for j in 0..e {
                acc = &acc + &(&power * &(k.get(orbit, j + 1) - k.get(orbit, j)));
                power = &power * &det;
            }
            acc
        })
        .collect()
}

/// Generic point of the hyperplane `form = 0` in GGOR space, in one fresh indeterminate `k`.
///
/// The first variable with nonzero coefficient is solved for; exactly one variable must remain.
pub fn ggor_on_hyperplane(g: &ReflectionGroup, form: &str) -> Result<GgorParameter, CherednikError> {
    let names = ggor_variable_names(g);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let lin = MultiPoly::parse(g.field(), &refs, form)?;
    if !lin.is_homogeneous() || lin.total_degree() != Some(1) {
        return Err(CherednikError::Parameter(format!("{form} is not a linear form in {}", names.join(", "))));
    }
    if names.len() != 2 {
        return Err(CherednikError::Parameter(format!(
            "a hyperplane leaves {} free parameters; only one is supported",
            names.len().saturating_sub(1)
        )));
    }
    let coef: Vec<Scalar> = (0..names.len())
        .map(|i| {
            let mut m = vec![0; names.len()];
            m[i] = 1;
            lin.coeff(&m)
        })
        .collect();
    let pivot = coef.iter().position(|c| !c.is_zero()).unwrap();
    let free = 1 - pivot;
    let field = FieldSpec::rational_functions(g.field(), "k")?;
    let kvar = Scalar::variable(&field, "k").unwrap();
    let ratio = (-&coef[free]).checked_div(&coef[pivot])?.embed(&field)?;
    let mut assignment = BTreeMap::new();
    assignment.insert(names[free].clone(), kvar.clone());
    assignment.insert(names[pivot].clone(), &ratio * &kvar);
    GgorParameter::from_assignment(g, &field, &assignment)
}

/// Class values of a parametrisation stored with the group, over the polynomial ring in its variables.
pub fn named_parametrisation(g: &ReflectionGroup, name: &str) -> Result<Vec<Scalar>, CherednikError> {
    let p = g
        .parametrisations()
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| CherednikError::Parameter(format!("group {} has no {name} parametrisation", g.name())))?;
    let refs: Vec<&str> = p.variables.iter().map(|s| s.as_str()).collect();
    let field = FieldSpec::poly_ring(g.field(), &refs);
    if p.class_values.len() != g.num_reflection_classes() {
        return Err(CherednikError::Parameter(format!("{name} parametrisation does not cover every class")));
    }
    Ok(p.class_values.iter().map(|s| Scalar::parse(&field, s)).collect::<Result<_, _>>()?)
}
