use std::collections::BTreeMap;

use rand::Rng;

use crate::exactalg::{rcef, ExactMatrix, Scalar, SparseVec};
use crate::meataxe::{chop, is_irreducible, is_isomorphic, radical, FpModule, Irreducibility};
use crate::verma::GradedModule;

use super::{abstract_structure_fp, modfinder, specialize_module, FiniteFieldSpec, LiftError};

/// Exact head `Q = V / J` of a module with simple head, and its radical `J`.
#[derive(Clone, Debug)]
pub struct HeadResult {
    /// rcef basis of the radical in the basis of `V`.
    pub radical: ExactMatrix,
    pub head: GradedModule,
    /// Number of random descents used before the search succeeded.
    pub descents: usize,
}

fn specialize_fp(m: &GradedModule, spec: &FiniteFieldSpec) -> Result<FpModule, LiftError> {
    Ok(FpModule::from_graded(&specialize_module(m, spec)?)?)
}

fn head_once<R: Rng>(
    v: &GradedModule,
    spec: &FiniteFieldSpec,
    gset: &[usize],
    rng: &mut R,
) -> Result<(ExactMatrix, GradedModule), LiftError> {
    let vb = specialize_fp(v, spec)?;
    if is_irreducible(&vb, rng)? == Irreducibility::Irreducible {
        return Ok((ExactMatrix::zero(v.field(), v.dim(), 0), v.clone()));
    }
    let rad = radical(&vb, rng)?;
    if rad.is_empty() {
        return Err(LiftError::HeadNotSimple);
    }
    let j = modfinder(v, &abstract_structure_fp(&rad), gset)?;
    let q = v.quotient(&j)?;
    match is_irreducible(&specialize_fp(&q, spec)?, rng)? {
        Irreducibility::Irreducible => Ok((j, q)),
        Irreducibility::Reducible(_) => Err(LiftError::HeadNotSimple),
    }
}

/// Random homogeneous vector in a degree above the lowest one, with small integer entries.
fn random_homogeneous<R: Rng>(v: &GradedModule, rng: &mut R) -> Option<SparseVec> {
    let degs = v.degree_set();
    if degs.len() < 2 {
        return None;
    }
    let d = degs[rng.gen_range(1..degs.len())];
    let f = v.field();
    Some(v.basis_in_degree(d).into_iter().map(|i| (i, Scalar::from_int(f, rng.gen_range(-9..=9)))).filter(|e| !e.1.is_zero()).collect())
}

/// Head and radical of `v`, which must have a simple head.
///
/// The radical is read off modulo `p` and lifted by [`modfinder`]. When that fails,
/// up to `max_descents` times a random proper submodule is factored out first.
pub fn head_and_radical<R: Rng>(
    v: &GradedModule,
    spec: &FiniteFieldSpec,
    gset: &[usize],
    max_descents: usize,
    rng: &mut R,
) -> Result<HeadResult, LiftError> {
    let mut cur = v.clone();
    // basis vectors of `v` that index the basis of `cur`, and the part already factored out
    let mut keep: Vec<usize> = (0..v.dim()).collect();
    let mut factored: Vec<SparseVec> = vec![];
    let mut descents = 0;
    loop {
        let err = match head_once(&cur, spec, gset, rng) {
            Ok((j, q)) => {
                let mut cols = factored.clone();
                cols.extend(j.columns().iter().map(|c| c.iter().map(|(r, x)| (keep[*r], x.clone())).collect()));
                let radical = rcef(&ExactMatrix::from_columns(v.field(), v.dim(), cols));
                return Ok(HeadResult { radical, head: q, descents });
            }
            Err(e) => e,
        };
        let mut proper = None;
        for _ in 0..20 {
            let Some(s) = random_homogeneous(&cur, rng) else { break };
            if s.is_empty() {
                continue;
            }
            let u = cur.graded_spin(&[s])?;
            if u.ncols() < cur.dim() {
                proper = Some(u);
                break;
            }
        }
        let Some(u) = proper.filter(|_| descents < max_descents) else { return Err(err) };
        descents += 1;
        factored.extend(u.columns().iter().map(|c| c.iter().map(|(r, x)| (keep[*r], x.clone())).collect()));
        let pivots: Vec<usize> = u.columns().iter().map(|c| *c.keys().next().unwrap()).collect();
        keep = (0..cur.dim()).filter(|i| !pivots.contains(i)).map(|i| keep[i]).collect();
        cur = cur.quotient(&u)?;
    }
}

/// Decomposition data for one family of modules with simple heads.
#[derive(Clone, Debug)]
pub struct FamilyDecomposition {
    pub heads: Vec<HeadResult>,
    /// `matrix[a][b]`: multiplicity of the head of member `b` in member `a`.
    pub matrix: Vec<Vec<usize>>,
}

/// Heads of every member, then composition multiplicities of each member in terms of those heads.
pub fn decompose_family<R: Rng>(
    members: &[GradedModule],
    spec: &FiniteFieldSpec,
    gset: &[usize],
    max_descents: usize,
    rng: &mut R,
) -> Result<FamilyDecomposition, LiftError> {
    let heads = members
        .iter()
        .map(|v| head_and_radical(v, spec, gset, max_descents, rng))
        .collect::<Result<Vec<_>, _>>()?;
    let heads_fp: Vec<FpModule> = heads.iter().map(|h| specialize_fp(&h.head, spec)).collect::<Result<_, _>>()?;
    let mut matrix = vec![vec![0; members.len()]; members.len()];
    for (a, v) in members.iter().enumerate() {
        for (s, mult) in chop(&specialize_fp(v, spec)?, rng)? {
            let matches: Vec<usize> = (0..heads_fp.len()).filter(|&b| is_isomorphic(&s, &heads_fp[b])).collect();
            match matches[..] {
                [b] => matrix[a][b] += mult,
                _ => return Err(LiftError::UnmatchedConstituent { member: a, dim: s.dim(), matches: matches.len() }),
            }
        }
        let total: usize = (0..members.len()).map(|b| matrix[a][b] * heads[b].head.dim()).sum();
        if total != v.dim() {
            return Err(LiftError::DimensionAudit { member: a, expected: v.dim(), found: total });
        }
    }
    Ok(FamilyDecomposition { heads, matrix })
}

/// Classes of the equivalence relation generated by nonzero decomposition entries.
pub fn verma_families(labels: &[usize], matrix: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = labels.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut i: usize) -> usize {
        while root[i] != i {
            i = root[i];
        }
        i
    }
    for a in 0..n {
        for b in 0..n {
            if matrix[a][b] != 0 {
                let (x, y) = (find(&mut root, a), find(&mut root, b));
                root[x.max(y)] = x.min(y);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..n {
        let r = find(&mut root, a);
        classes.entry(r).or_default().push(labels[a]);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.iter_mut().for_each(|c| c.sort_unstable());
    out.sort();
    out
}
