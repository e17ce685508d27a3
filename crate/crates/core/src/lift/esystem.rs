use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::exactalg::{FieldSpec, Scalar};
use crate::verma::GradedModule;

use super::{AbstractStructure, LiftError};

/// Affine form `constant + sum_q coeff_q * theta_q` in the label values.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine {
    pub constant: Scalar,
    pub linear: BTreeMap<usize, Scalar>,
}

impl Affine {
    fn zero(f: &FieldSpec) -> Self {
        Affine { constant: Scalar::zero(f), linear: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty()
    }

    fn add_scaled(&mut self, label: Option<usize>, a: &Scalar) {
        match label {
            None => self.constant = &self.constant + a,
            Some(q) => add_to(&mut self.linear, q, a),
        }
    }
}

fn add_to<K: Ord>(m: &mut BTreeMap<K, Scalar>, k: K, a: &Scalar) {
    use std::collections::btree_map::Entry;
    match m.entry(k) {
        Entry::Vacant(e) => {
            if !a.is_zero() {
                e.insert(a.clone());
            }
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + a;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Polynomial equation of degree at most 2 in the label values (0-based labels).
#[derive(Clone, Debug, PartialEq)]
pub struct Equation {
    pub constant: Scalar,
    pub linear: BTreeMap<usize, Scalar>,
    /// Keys `(q, r)` with `q <= r`.
    pub quadratic: BTreeMap<(usize, usize), Scalar>,
}

impl Equation {
    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.quadratic.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        let mut v: BTreeSet<usize> = self.linear.keys().copied().collect();
        for &(q, r) in self.quadratic.keys() {
            v.insert(q);
            v.insert(r);
        }
        v
    }

    pub fn evaluate(&self, theta: &[Scalar]) -> Scalar {
        let mut s = self.constant.clone();
        for (q, a) in &self.linear {
            s = &s + &(a * &theta[*q]);
        }
        for ((q, r), a) in &self.quadratic {
            s = &s + &(&(a * &theta[*q]) * &theta[*r]);
        }
        s
    }

    /// Substitute known values; returns the remaining equation.
    pub fn substitute(&self, known: &[Option<Scalar>]) -> Equation {
        let mut out = Equation { constant: self.constant.clone(), linear: BTreeMap::new(), quadratic: BTreeMap::new() };
        for (q, a) in &self.linear {
            match &known[*q] {
                Some(v) => out.constant = &out.constant + &(a * v),
                None => add_to(&mut out.linear, *q, a),
            }
        }
        for (&(q, r), a) in &self.quadratic {
            match (&known[q], &known[r]) {
                (Some(u), Some(v)) => out.constant = &out.constant + &(&(a * u) * v),
                (Some(u), None) => add_to(&mut out.linear, r, &(a * u)),
                (None, Some(v)) => add_to(&mut out.linear, q, &(a * v)),
                (None, None) => add_to(&mut out.quadratic, (q, r), a),
            }
        }
        out
    }
}

/// Necessary conditions on the label values for `cM + theta*(fM)` to span a submodule.
#[derive(Clone, Debug)]
pub struct ESystem {
    pub complexity: usize,
    /// Equations that are already linear.
    pub linear: Vec<Equation>,
    /// Equations with products of label values.
    pub bilinear: Vec<Equation>,
}

impl ESystem {
    pub fn equations(&self) -> impl Iterator<Item = &Equation> {
        self.linear.iter().chain(&self.bilinear)
    }

    pub fn len(&self) -> usize {
        self.linear.len() + self.bilinear.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Degree of each column of the structure in `m`; errors when a column is not homogeneous.
pub fn column_degrees(m: &GradedModule, a: &AbstractStructure) -> Result<Vec<i32>, LiftError> {
    let deg = m.degrees();
    let out: Vec<i32> = a.pivots().iter().map(|&r| deg[r]).collect();
    for &(r, c, _) in a.fine_entries() {
        if deg[r] != out[c] {
            return Err(LiftError::NonHomogeneous(c));
        }
    }
    if a.nrows() != m.dim() {
        return Err(LiftError::Concretize(format!("structure has {} rows, module dimension {}", a.nrows(), m.dim())));
    }
    Ok(out)
}

/// Coefficient matching of `a_k u_j` against the columns of the concretization, for `k` in `gset`.
///
/// `a_k u_j = sum_l Y_l u_l` forces `Y_l` to equal the entry of `a_k u_j` in the pivot row of `u_l`;
/// every other row then gives an equation in the label values alone.
pub fn build_esystem(m: &GradedModule, a: &AbstractStructure, gset: &[usize]) -> Result<ESystem, LiftError> {
    column_degrees(m, a)?;
    let field = m.field();
    let pivot_col: HashMap<usize, usize> = a.pivots().iter().enumerate().map(|(j, &r)| (r, j)).collect();
    let mut fine_by_row: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for &(r, c, l) in a.fine_entries() {
        fine_by_row.entry(r).or_default().push((c, l - 1));
    }
    let mut col_fine: Vec<Vec<(usize, usize)>> = vec![vec![]; a.ncols()];
    for &(r, c, l) in a.fine_entries() {
        col_fine[c].push((r, l - 1));
    }
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut linear = vec![];
    let mut bilinear = vec![];
    for &k in gset {
        let x = m.action(k);
        for j in 0..a.ncols() {
            // w = X u_j as affine forms per row
            let mut w: BTreeMap<usize, Affine> = BTreeMap::new();
            let mut push = |col: usize, label: Option<usize>| {
                for (i, v) in x.col(col) {
                    w.entry(*i).or_insert_with(|| Affine::zero(field)).add_scaled(label, v);
                }
            };
            push(a.pivots()[j], None);
            for &(r, q) in &col_fine[j] {
                push(r, Some(q));
            }
            w.retain(|_, f| !f.is_zero());
            // rows touched by w or by a column whose coefficient Y_l is nonzero
            let mut rows: BTreeSet<usize> = w.keys().copied().collect();
            let mut ys: Vec<(usize, &Affine)> = vec![];
            for (i, f) in &w {
                if let Some(&l) = pivot_col.get(i) {
                    ys.push((l, f));
                    rows.extend(col_fine[l].iter().map(|e| e.0));
                }
            }
            let ymap: HashMap<usize, &Affine> = ys.into_iter().collect();
            for i in rows {
                if pivot_col.contains_key(&i) {
                    continue;
                }
                let mut eq = Equation { constant: Scalar::zero(field), linear: BTreeMap::new(), quadratic: BTreeMap::new() };
                if let Some(f) = w.get(&i) {
                    eq.constant = f.constant.clone();
                    eq.linear = f.linear.clone();
                }
                for &(l, q) in fine_by_row.get(&i).into_iter().flatten() {
                    let Some(y) = ymap.get(&l) else { continue };
                    add_to(&mut eq.linear, q, &-&y.constant);
                    for (r, a) in &y.linear {
                        add_to(&mut eq.quadratic, (q.min(*r), q.max(*r)), &-a);
                    }
                }
                if eq.is_zero() {
                    continue;
                }
                if !seen.insert(format!("{eq:?}")) {
                    continue;
                }
                if eq.is_linear() {
                    linear.push(eq);
                } else {
                    bilinear.push(eq);
                }
            }
        }
    }
    Ok(ESystem { complexity: a.complexity(), linear, bilinear })
}
