use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::exactalg::{parse_field, rcef, Echelon, ExactMatrix, FieldSpec, Scalar, SparseVec};

use super::VermaError;

/// A finite-dimensional graded module given by one action matrix per algebra generator.
///
/// Column `i` of `actions[k]` is `a_k v_i`. An entry in row `l` is only allowed
/// when `deg v_l = deg a_k + deg v_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule {
    field: FieldSpec,
    degrees: Vec<i32>,
    generator_names: Vec<String>,
    generator_degrees: Vec<i32>,
    actions: Vec<ExactMatrix>,
}

impl GradedModule {
    pub fn new(
        field: &FieldSpec,
        degrees: Vec<i32>,
        generator_names: Vec<String>,
        generator_degrees: Vec<i32>,
        actions: Vec<ExactMatrix>,
    ) -> Result<Self, VermaError> {
        let n = degrees.len();
        if generator_names.len() != actions.len() || generator_degrees.len() != actions.len() {
            return Err(VermaError::Grading("generator list lengths differ".into()));
        }
        for (k, a) in actions.iter().enumerate() {
            if a.nrows() != n || a.ncols() != n {
                return Err(VermaError::Grading(format!("generator {k} has the wrong shape")));
            }
            if let Some((l, i, _)) = a.entries().find(|(l, i, _)| degrees[*l] != degrees[*i] + generator_degrees[k]) {
                return Err(VermaError::Grading(format!("generator {k} maps v_{i} to v_{l}")));
            }
        }
        Ok(GradedModule { field: field.clone(), degrees, generator_names, generator_degrees, actions })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_degrees(&self) -> &[i32] {
        &self.generator_degrees
    }

    pub fn num_generators(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, k: usize) -> &ExactMatrix {
        &self.actions[k]
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.actions
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|g| g == name)
    }

    /// Distinct basis degrees, ascending.
    pub fn degree_set(&self) -> Vec<i32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Indices of basis vectors of degree `d`.
    pub fn basis_in_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &SparseVec) -> Option<i32> {
        let mut it = v.keys().map(|&i| self.degrees[i]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Apply `f` to every matrix entry, landing in `target`.
    pub fn map_entries<F>(&self, target: &FieldSpec, mut f: F) -> Result<GradedModule, VermaError>
    where
        F: FnMut(&Scalar) -> Result<Scalar, crate::exactalg::ExactError>,
    {
        let actions = self.actions.iter().map(|a| a.map(target, &mut f)).collect::<Result<Vec<_>, _>>()?;
        Ok(GradedModule {
            field: target.clone(),
            degrees: self.degrees.clone(),
            generator_names: self.generator_names.clone(),
            generator_degrees: self.generator_degrees.clone(),
            actions,
        })
    }

    /// Smallest graded submodule containing the homogeneous `seeds`, in rcef.
    pub fn graded_spin(&self, seeds: &[SparseVec]) -> Result<ExactMatrix, VermaError> {
        self.graded_spin_with(seeds, &(0..self.num_generators()).collect::<Vec<_>>())
    }

    /// As [`graded_spin`](Self::graded_spin), closing only under the listed generators.
    pub fn graded_spin_with(&self, seeds: &[SparseVec], gens: &[usize]) -> Result<ExactMatrix, VermaError> {
        let mut blocks: BTreeMap<i32, Echelon> = BTreeMap::new();
        let mut queue: Vec<SparseVec> = vec![];
        let push = |v: SparseVec, blocks: &mut BTreeMap<i32, Echelon>, queue: &mut Vec<SparseVec>| {
            let Some(d) = self.degree_of(&v) else { return };
            let e = blocks.entry(d).or_insert_with(|| Echelon::new(&self.field, self.dim()));
            if e.insert(v.clone()).is_some() {
                queue.push(v);
            }
        };
        for s in seeds {
            if s.is_empty() {
                continue;
            }
            if self.degree_of(s).is_none() {
                return Err(VermaError::NonHomogeneous);
            }
            push(s.clone(), &mut blocks, &mut queue);
        }
        while let Some(v) = queue.pop() {
            for &k in gens {
                let w = self.actions[k].mul_vec(&v);
                push(w, &mut blocks, &mut queue);
            }
        }
        let cols: Vec<SparseVec> = blocks.values().flat_map(|e| e.to_matrix().into_columns()).collect();
        Ok(rcef(&ExactMatrix::from_columns(&self.field, self.dim(), cols)))
    }

    /// Whether the column span of `u` is stable under every generator.
    pub fn is_submodule(&self, u: &ExactMatrix) -> bool {
        let mut e = Echelon::new(&self.field, self.dim());
        for c in u.columns() {
            e.insert(c.clone());
        }
        self.actions.iter().all(|a| u.columns().iter().all(|c| e.contains(&a.mul_vec(c))))
    }

    /// `M / U` for an rcef submodule matrix `U`, on the basis vectors that are not pivots of `U`.
    pub fn quotient(&self, u: &ExactMatrix) -> Result<GradedModule, VermaError> {
        let mut e = Echelon::new(&self.field, self.dim());
        for c in u.columns() {
            e.insert(c.clone());
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| !e.is_pivot(i)).collect();
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut actions = vec![];
        for (k, a) in self.actions.iter().enumerate() {
            for c in u.columns() {
                if !e.contains(&a.mul_vec(c)) {
                    return Err(VermaError::NotInvariant(k));
                }
            }
            let cols = keep
                .iter()
                .map(|&i| e.reduce(a.col(i).clone()).into_iter().map(|(r, v)| (pos[&r], v)).collect())
                .collect();
            actions.push(ExactMatrix::from_columns(&self.field, keep.len(), cols));
        }
        GradedModule::new(
            &self.field,
            keep.iter().map(|&i| self.degrees[i]).collect(),
            self.generator_names.clone(),
            self.generator_degrees.clone(),
            actions,
        )
    }

    /// The action restricted to the column span of an rcef submodule matrix `u`.
    pub fn submodule(&self, u: &ExactMatrix) -> Result<GradedModule, VermaError> {
        let mut e = Echelon::new(&self.field, self.dim());
        for c in u.columns() {
            e.insert(c.clone());
        }
        let mut degrees = vec![];
        for c in u.columns() {
            degrees.push(self.degree_of(c).ok_or(VermaError::NonHomogeneous)?);
        }
        let mut actions = vec![];
        for (k, a) in self.actions.iter().enumerate() {
            let mut cols = vec![];
            for c in u.columns() {
                let w = a.mul_vec(c);
                if !e.contains(&w) {
                    return Err(VermaError::NotInvariant(k));
                }
                cols.push(e.coordinates(&w));
            }
            actions.push(ExactMatrix::from_columns(&self.field, u.ncols(), cols));
        }
        GradedModule::new(&self.field, degrees, self.generator_names.clone(), self.generator_degrees.clone(), actions)
    }

    /// Line-oriented text form; see [`from_text`](Self::from_text).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let join = |v: &[i32]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(s, "field {}", self.field).unwrap();
        writeln!(s, "dim {}", self.dim()).unwrap();
        writeln!(s, "degrees {}", join(&self.degrees)).unwrap();
        let gens: Vec<String> =
            self.generator_names.iter().zip(&self.generator_degrees).map(|(n, d)| format!("{n}:{d}")).collect();
        writeln!(s, "generators {}", gens.join(" ")).unwrap();
        for (k, a) in self.actions.iter().enumerate() {
            for (r, c, v) in a.entries() {
                writeln!(s, "{k} {r} {c} {v}").unwrap();
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<GradedModule, VermaError> {
        let bad = |m: &str| VermaError::Parse(m.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let mut header = |key: &str| -> Result<String, VermaError> {
            let l = lines.next().ok_or_else(|| bad("truncated header"))?;
            l.strip_prefix(key).map(|r| r.trim().to_string()).ok_or_else(|| bad(&format!("expected {key}")))
        };
        let field = parse_field(&header("field")?)?;
        let dim: usize = header("dim")?.parse().map_err(|_| bad("dim"))?;
        let int = |t: &str| t.parse::<i32>().map_err(|_| bad("integer"));
        let degrees = header("degrees")?.split_whitespace().map(int).collect::<Result<Vec<_>, _>>()?;
        let mut names = vec![];
        let mut gdeg = vec![];
        for g in header("generators")?.split_whitespace() {
            let (n, d) = g.rsplit_once(':').ok_or_else(|| bad("generator"))?;
            names.push(n.to_string());
            gdeg.push(int(d)?);
        }
        if degrees.len() != dim {
            return Err(bad("degree count"));
        }
        let mut actions = vec![ExactMatrix::zero(&field, dim, dim); names.len()];
        for l in lines {
            let mut t = l.splitn(4, ' ');
            let mut idx = || t.next().and_then(|x| x.parse::<usize>().ok()).ok_or_else(|| bad("entry"));
            let (k, r, c) = (idx()?, idx()?, idx()?);
            let v = Scalar::parse(&field, t.next().ok_or_else(|| bad("entry value"))?)?;
            if k >= actions.len() || r >= dim || c >= dim {
                return Err(bad("entry out of range"));
            }
            actions[k].set(r, c, v);
        }
        GradedModule::new(&field, degrees, names, gdeg, actions)
    }
}
