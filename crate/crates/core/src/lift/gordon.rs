use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cherednik::{euler_families, CherednikParameter};
use crate::exactalg::Scalar;
use crate::refgroup::ReflectionGroup;
use crate::restricted::bad_primes;
use crate::verma::{graded_character, verma_module_with, GradedModule, NatPoly, StandardLayout, XTable};

use super::{decompose_family, draw_specialization, verma_families, DrawPolicy, FiniteFieldSpec, LiftError};

/// Knobs for [`gordon`].
#[derive(Clone, Debug)]
pub struct GordonOptions {
    /// Restrict to these groups of irreps (0-based); default is every Euler family.
    pub families: Option<Vec<Vec<usize>>>,
    /// Generator indices in the Verma layout used before escalating; default the `y_i`.
    pub gset: Option<Vec<usize>>,
    pub exclude_primes: Vec<u64>,
    pub seed: u64,
    /// Fresh specializations tried per family after the first one fails.
    pub redraws: usize,
    pub max_descents: usize,
}

impl Default for GordonOptions {
    fn default() -> Self {
        GordonOptions { families: None, gset: None, exclude_primes: vec![], seed: 0, redraws: 5, max_descents: 3 }
    }
}

/// Specialization that succeeded for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRun {
    pub members: Vec<usize>,
    pub spec: FiniteFieldSpec,
    pub draws: usize,
}

/// Simple modules and Verma decomposition data at one parameter, over the irreps in `irreps`.
#[derive(Clone, Debug)]
pub struct GordonResult {
    pub euler_families: Vec<(Vec<usize>, Scalar)>,
    /// Irreps that were computed, ascending; the other fields are indexed in this order.
    pub irreps: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub simple_pseries: Vec<NatPoly>,
    /// `graded_structure[a][b]`: graded multiplicity of irrep `b` (all irreps) in the head of `irreps[a]`.
    pub graded_structure: Vec<Vec<NatPoly>>,
    /// `decomposition[a][b]`: multiplicity of the head of `irreps[b]` in the Verma module of `irreps[a]`.
    pub decomposition: Vec<Vec<usize>>,
    pub verma_families: Vec<Vec<usize>>,
    pub runs: Vec<FamilyRun>,
}

/// Poincare series of a graded module shifted to start in degree 0.
pub fn poincare_series(m: &GradedModule) -> NatPoly {
    let degs = m.degree_set();
    let lo = degs.first().copied().unwrap_or(0);
    let mut c = vec![0u64; degs.last().map_or(0, |&hi| (hi - lo) as usize + 1)];
    for &d in m.degrees() {
        c[(d - lo) as usize] += 1;
    }
    NatPoly::new(c)
}

/// Heads of the Verma modules and their decomposition, family by family, at the
/// parameter `c` (class values over a field).
pub fn gordon(g: &ReflectionGroup, c: Vec<Scalar>, opts: &GordonOptions) -> Result<GordonResult, LiftError> {
    let param = CherednikParameter::at_t_zero(g, c.clone())?;
    let field = param.field().clone();
    if !field.is_field() {
        return Err(LiftError::Parameter("parameters must lie in a field".into()));
    }
    let euler = euler_families(g, &c);
    let families: Vec<Vec<usize>> = match &opts.families {
        Some(f) => f.clone(),
        None => euler.iter().map(|f| f.0.clone()).collect(),
    };
    for f in &families {
        if f.is_empty() || f.iter().any(|&i| i >= g.irreps().len()) {
            return Err(LiftError::Parameter(format!("bad family {f:?}")));
        }
    }
    let layout = StandardLayout::of(g);
    let gset = opts.gset.clone().unwrap_or_else(|| (0..g.dim()).map(|i| layout.y(i)).collect());
    let mut policy = DrawPolicy::default();
    policy.exclude = bad_primes(g);
    policy.exclude.extend(&opts.exclude_primes);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let xt = XTable::new(g);

    let mut irreps: Vec<usize> = families.iter().flatten().copied().collect();
    irreps.sort_unstable();
    irreps.dedup();
    let n = irreps.len();
    let idx = |i: usize| irreps.binary_search(&i).unwrap();
    let mut heads: Vec<Option<GradedModule>> = vec![None; n];
    let mut decomposition = vec![vec![0; n]; n];
    let mut runs = vec![];
    for fam in &families {
        let vermas = fam.iter().map(|&i| verma_module_with(g, &xt, &param, i)).collect::<Result<Vec<_>, _>>()?;
        let mut last_err = None;
        let mut done = None;
        for draw in 0..=opts.redraws {
            let spec = draw_specialization(&field, &policy, &mut rng);
            match decompose_family(&vermas, &spec, &gset, opts.max_descents, &mut rng) {
                Ok(d) => {
                    done = Some((d, spec, draw + 1));
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
        let Some((d, spec, draws)) = done else {
            return Err(LiftError::FamilyFailed { members: fam.clone(), last: Box::new(last_err.unwrap()) });
        };
        for (a, &i) in fam.iter().enumerate() {
            heads[idx(i)] = Some(d.heads[a].head.clone());
            for (b, &j) in fam.iter().enumerate() {
                decomposition[idx(i)][idx(j)] += d.matrix[a][b];
            }
        }
        runs.push(FamilyRun { members: fam.clone(), spec, draws });
    }
    let heads: Vec<GradedModule> = heads.into_iter().map(Option::unwrap).collect();
    let graded_structure = heads.iter().map(|h| graded_character(g, h)).collect::<Result<Vec<_>, _>>()?;
    Ok(GordonResult {
        euler_families: euler,
        simple_dims: heads.iter().map(GradedModule::dim).collect(),
        simple_pseries: heads.iter().map(poincare_series).collect(),
        graded_structure,
        verma_families: verma_families(&irreps, &decomposition),
        decomposition,
        irreps,
        runs,
    })
}
