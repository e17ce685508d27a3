use std::collections::{BTreeMap, BTreeSet};

use crate::exactalg::{solve, ExactMatrix, Scalar, SparseVec};
use crate::verma::GradedModule;

use super::{build_esystem, concretize, AbstractStructure, Equation, LiftError};

/// Union-find over label indices.
struct Components(Vec<usize>);

impl Components {
    fn new(n: usize) -> Self {
        Components((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Statistics of a successful search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModFinderStats {
    pub rounds: usize,
    pub escalated: bool,
    pub equations: usize,
}

/// One pass of the cascade: solve every linear component of the substituted system and
/// record the label values it pins down. Returns the number of newly fixed values.
fn linear_pass(eqs: &[Equation], known: &mut [Option<Scalar>]) -> Result<usize, LiftError> {
    let n = known.len();
    let field = eqs.first().map(|e| e.constant.field().clone());
    let Some(field) = field else { return Ok(0) };
    let mut lin: Vec<Equation> = vec![];
    for e in eqs {
        let s = e.substitute(known);
        if s.is_zero() || !s.is_linear() {
            continue;
        }
        if s.linear.is_empty() {
            return Err(LiftError::NoSubmodule);
        }
        lin.push(s);
    }
    let mut comps = Components::new(n);
    for e in &lin {
        let mut vs = e.linear.keys();
        let first = *vs.next().unwrap();
        for &v in vs {
            comps.union(first, v);
        }
    }
    let mut groups: BTreeMap<usize, Vec<&Equation>> = BTreeMap::new();
    for e in &lin {
        let root = comps.find(*e.linear.keys().next().unwrap());
        groups.entry(root).or_default().push(e);
    }
    let mut fixed = 0;
    for eqs in groups.values() {
        let vars: Vec<usize> = eqs.iter().flat_map(|e| e.linear.keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
        let pos: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // columns of the coefficient matrix are variables
        let mut cols: Vec<SparseVec> = vec![SparseVec::new(); vars.len()];
        let mut rhs = SparseVec::new();
        for (r, e) in eqs.iter().enumerate() {
            for (v, a) in &e.linear {
                cols[pos[v]].insert(r, a.clone());
            }
            if !e.constant.is_zero() {
                rhs.insert(r, -&e.constant);
            }
        }
        let m = ExactMatrix::from_columns(&field, eqs.len(), cols);
        let Some((x, null)) = solve(&m, &rhs)? else { return Err(LiftError::NoSubmodule) };
        let free: BTreeSet<usize> = null.columns().iter().flat_map(|c| c.keys().copied()).collect();
        for (i, &v) in vars.iter().enumerate() {
            if !free.contains(&i) && known[v].is_none() {
                known[v] = Some(x.get(&i).cloned().unwrap_or_else(|| Scalar::zero(&field)));
                fixed += 1;
            }
        }
    }
    Ok(fixed)
}

/// Find a submodule of `m` with abstract structure `a` by a cascade of linear solves,
/// first using the generators in `gset` and then all generators.
pub fn modfinder(m: &GradedModule, a: &AbstractStructure, gset: &[usize]) -> Result<ExactMatrix, LiftError> {
    modfinder_with_stats(m, a, gset).map(|r| r.0)
}

pub fn modfinder_with_stats(
    m: &GradedModule,
    a: &AbstractStructure,
    gset: &[usize],
) -> Result<(ExactMatrix, ModFinderStats), LiftError> {
    let s = a.complexity();
    let mut known: Vec<Option<Scalar>> = vec![None; s];
    let mut stats = ModFinderStats::default();
    let all: Vec<usize> = (0..m.num_generators()).collect();
    let mut gens: Vec<usize> = gset.to_vec();
    loop {
        let sys = build_esystem(m, a, &gens)?;
        let eqs: Vec<Equation> = sys.equations().cloned().collect();
        stats.equations = eqs.len();
        while known.iter().any(Option::is_none) {
            stats.rounds += 1;
            if linear_pass(&eqs, &mut known)? == 0 {
                break;
            }
        }
        if known.iter().all(Option::is_some) {
            // a final pass catches inconsistencies among fully substituted equations
            linear_pass(&eqs, &mut known)?;
            break;
        }
        let mut sorted = gens.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted == all {
            return Err(LiftError::NotLinearlySolvable);
        }
        gens = all.clone();
        stats.escalated = true;
    }
    let theta: Vec<Scalar> = known.into_iter().map(Option::unwrap).collect();
    let u = concretize(a, m.field(), &theta).map_err(|_| LiftError::NoSubmodule)?;
    if !m.is_submodule(&u) {
        return Err(LiftError::NotLinearlySolvable);
    }
    Ok((u, stats))
}
