use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use rrca::lift::GordonResult;
use rrca::refgroup::ReflectionGroup;
use rrca::verma::NatPoly;

use crate::CliError;

/// One Euler family: 1-based irrep numbers and the Euler scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerFamily {
    pub members: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
}

/// Finite field specialization that succeeded for a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationRecord {
    pub family: Vec<usize>,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<u64>,
    pub point: BTreeMap<String, u64>,
    pub draws: usize,
}

/// Result of a Gordon run. Irreps are numbered from 1 in group order; the per-simple
/// fields run over `Irreps`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct GordonRecord {
    pub group: String,
    pub hyperplane: String,
    pub seed: u64,
    pub irreps: Vec<usize>,
    pub labels: Vec<String>,
    pub simple_dims: Vec<usize>,
    #[serde(rename = "SimplePSeries")]
    pub simple_pseries: Vec<String>,
    #[serde(rename = "SimpleGModStruct")]
    pub simple_gmod_struct: Vec<Vec<u64>>,
    #[serde(rename = "SimpleGradedGModStruct")]
    pub simple_graded_gmod_struct: Vec<Vec<String>>,
    pub verma_decomposition: Vec<Vec<usize>>,
    #[serde(rename = "CMFamilies")]
    pub cm_families: Vec<Vec<usize>>,
    pub euler_families: Vec<EulerFamily>,
    pub specializations: Vec<SpecializationRecord>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

impl GordonRecord {
    pub fn from_result(g: &ReflectionGroup, hyperplane: &str, seed: u64, r: &GordonResult) -> Self {
        GordonRecord {
            group: g.name().to_string(),
            hyperplane: hyperplane.to_string(),
            seed,
            irreps: one_based(&r.irreps),
            labels: r.irreps.iter().map(|&i| g.labels()[i].to_string()).collect(),
            simple_dims: r.simple_dims.clone(),
            simple_pseries: r.simple_pseries.iter().map(|p| p.to_string()).collect(),
            simple_gmod_struct: r.graded_structure.iter().map(|row| row.iter().map(NatPoly::at_one).collect()).collect(),
            simple_graded_gmod_struct: r.graded_structure.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect(),
            verma_decomposition: r.decomposition.clone(),
            cm_families: r.verma_families.iter().map(|f| one_based(f)).collect(),
            euler_families: r
                .euler_families
                .iter()
                .map(|(m, s)| EulerFamily { members: one_based(m), scalar: Some(s.to_string()) })
                .collect(),
            specializations: r
                .runs
                .iter()
                .map(|run| SpecializationRecord {
                    family: one_based(&run.members),
                    p: run.spec.prime(),
                    root: run.spec.root(),
                    point: run.spec.point().clone(),
                    draws: run.draws,
                })
                .collect(),
        }
    }

    /// Fails only for values TOML cannot hold, such as a seed above `i64::MAX`.
    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Record(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Record(e.to_string()))
    }

    /// Internal consistency against the group: decomposition rows add up to `|G| dim(lambda)`,
    /// Poincare series and graded structure agree with the dimensions.
    pub fn check(&self, g: &ReflectionGroup) -> Result<(), String> {
        let n = self.irreps.len();
        let sizes = [
            self.labels.len(),
            self.simple_dims.len(),
            self.simple_pseries.len(),
            self.simple_gmod_struct.len(),
            self.simple_graded_gmod_struct.len(),
            self.verma_decomposition.len(),
        ];
        if sizes.iter().any(|&s| s != n) {
            return Err("fields disagree on the number of irreps".into());
        }
        let irr = g.irreps();
        if self.irreps.iter().any(|&i| i == 0 || i > irr.len()) {
            return Err("irrep number out of range".into());
        }
        for (a, &i) in self.irreps.iter().enumerate() {
            let row = &self.verma_decomposition[a];
            if row.len() != n {
                return Err(format!("decomposition row {} has {} entries", a + 1, row.len()));
            }
            let total: usize = row.iter().zip(&self.simple_dims).map(|(m, d)| m * d).sum();
            let verma = g.order() * irr[i - 1].dim;
            if total != verma {
                return Err(format!("row {}: sum m*dim = {total}, Verma dimension {verma}", a + 1));
            }
            let p: NatPoly = self.simple_pseries[a].parse()?;
            if p.at_one() as usize != self.simple_dims[a] {
                return Err(format!("Poincare series {} does not evaluate to {}", p, self.simple_dims[a]));
            }
            let graded = &self.simple_graded_gmod_struct[a];
            if graded.len() != irr.len() || self.simple_gmod_struct[a].len() != irr.len() {
                return Err(format!("G-module structure of simple {} has the wrong length", a + 1));
            }
            let mut dim = 0;
            for (b, s) in graded.iter().enumerate() {
                let q: NatPoly = s.parse()?;
                if q.at_one() != self.simple_gmod_struct[a][b] {
                    return Err(format!("graded and ungraded structure of simple {} disagree", a + 1));
                }
                dim += q.at_one() as usize * irr[b].dim;
            }
            if dim != self.simple_dims[a] {
                return Err(format!("G-module structure of simple {} has dimension {dim}", a + 1));
            }
        }
        Ok(())
    }
}

/// Expected values for a record; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "PascalCase")]
pub struct Expected {
    pub group: String,
    pub hyperplane: String,
    pub irreps: Option<Vec<usize>>,
    pub simple_dims: Option<Vec<usize>>,
    #[serde(rename = "SimplePSeries")]
    pub simple_pseries: Option<Vec<String>>,
    #[serde(rename = "SimpleGModStruct")]
    pub simple_gmod_struct: Option<Vec<Vec<u64>>>,
    #[serde(rename = "SimpleGradedGModStruct")]
    pub simple_graded_gmod_struct: Option<Vec<Vec<String>>>,
    pub verma_decomposition: Option<Vec<Vec<usize>>>,
    #[serde(rename = "CMFamilies")]
    pub cm_families: Option<Vec<Vec<usize>>>,
    pub euler_families: Option<Vec<EulerFamily>>,
    /// Poincare series that must occur among the simple modules.
    #[serde(rename = "SomeSimplePSeries")]
    pub some_simple_pseries: Option<Vec<String>>,
}

impl From<&GordonRecord> for Expected {
    fn from(r: &GordonRecord) -> Self {
        Expected {
            group: r.group.clone(),
            hyperplane: r.hyperplane.clone(),
            irreps: Some(r.irreps.clone()),
            simple_dims: Some(r.simple_dims.clone()),
            simple_pseries: Some(r.simple_pseries.clone()),
            simple_gmod_struct: Some(r.simple_gmod_struct.clone()),
            simple_graded_gmod_struct: Some(r.simple_graded_gmod_struct.clone()),
            verma_decomposition: Some(r.verma_decomposition.clone()),
            cm_families: Some(r.cm_families.clone()),
            euler_families: Some(r.euler_families.clone()),
            some_simple_pseries: None,
        }
    }
}

fn polys(v: &[String]) -> Result<Vec<NatPoly>, String> {
    v.iter().map(|s| s.parse()).collect()
}


/// Field-by-field differences between a record and expected values; families compare as sets.
/// Only irreps present in both are compared, so a single-family run can be checked against a full record.
pub fn compare(record: &GordonRecord, expected: &Expected) -> Vec<String> {
    let mut diffs = vec![];
    if record.group != expected.group {
        diffs.push(format!("Group: {} vs {}", record.group, expected.group));
        return diffs;
    }
    // irreps present on both sides, with their positions in each
    let want: Vec<usize> = expected.irreps.clone().unwrap_or_else(|| record.irreps.clone());
    let (rpos, epos): (Vec<usize>, Vec<usize>) = want
        .iter()
        .enumerate()
        .filter_map(|(e, i)| record.irreps.iter().position(|j| j == i).map(|r| (r, e)))
        .unzip();
    if rpos.is_empty() {
        diffs.push(format!("Irreps: record covers {:?}, expected {:?}", record.irreps, want));
        return diffs;
    }
    let shared: BTreeSet<usize> = rpos.iter().map(|&r| record.irreps[r]).collect();
    let mut check = |name: &str, ok: bool, got: String, want: String| {
        if !ok {
            diffs.push(format!("{name}: {got} vs expected {want}"));
        }
    };
    fn pick<T: Clone>(v: &[T], pos: &[usize]) -> Vec<T> {
        pos.iter().map(|&a| v[a].clone()).collect()
    }
    fn square<T: Clone>(v: &[Vec<T>], pos: &[usize]) -> Vec<Vec<T>> {
        pos.iter().map(|&a| pick(&v[a], pos)).collect()
    }
    if let Some(w) = &expected.simple_dims {
        let (got, w) = (pick(&record.simple_dims, &rpos), pick(w, &epos));
        check("SimpleDims", got == w, format!("{got:?}"), format!("{w:?}"));
    }
    if let Some(w) = &expected.simple_pseries {
        let (got, w) = (pick(&record.simple_pseries, &rpos), pick(w, &epos));
        check("SimplePSeries", polys(&got) == polys(&w), format!("{got:?}"), format!("{w:?}"));
    }
    // rows are restricted to the shared heads, columns always cover all irreps
    if let Some(w) = &expected.simple_gmod_struct {
        let (got, w) = (pick(&record.simple_gmod_struct, &rpos), pick(w, &epos));
        check("SimpleGModStruct", got == w, format!("{got:?}"), format!("{w:?}"));
    }
    if let Some(w) = &expected.simple_graded_gmod_struct {
        let (got, w) = (pick(&record.simple_graded_gmod_struct, &rpos), pick(w, &epos));
        let same = got.len() == w.len() && got.iter().zip(&w).all(|(a, b)| polys(a) == polys(b));
        check("SimpleGradedGModStruct", same, format!("{got:?}"), format!("{w:?}"));
    }
    if let Some(w) = &expected.verma_decomposition {
        let (got, w) = (square(&record.verma_decomposition, &rpos), square(w, &epos));
        check("VermaDecomposition", got == w, format!("{got:?}"), format!("{w:?}"));
    }
    let restrict = |fams: &[Vec<usize>]| -> BTreeSet<BTreeSet<usize>> {
        fams.iter()
            .map(|f| f.iter().copied().filter(|i| shared.contains(i)).collect::<BTreeSet<_>>())
            .filter(|f| !f.is_empty())
            .collect()
    };
    if let Some(w) = &expected.cm_families {
        check(
            "CMFamilies",
            restrict(&record.cm_families) == restrict(w),
            format!("{:?}", record.cm_families),
            format!("{w:?}"),
        );
    }
    if let Some(w) = &expected.euler_families {
        let key = |f: &EulerFamily| -> BTreeSet<usize> { f.members.iter().copied().filter(|i| shared.contains(i)).collect() };
        let got: BTreeMap<BTreeSet<usize>, Option<String>> =
            record.euler_families.iter().map(|f| (key(f), f.scalar.clone())).filter(|(k, _)| !k.is_empty()).collect();
        let w: Vec<&EulerFamily> = w.iter().filter(|f| !key(f).is_empty()).collect();
        let same = got.len() == w.len()
            && w.iter().all(|f| match (got.get(&key(f)), &f.scalar) {
                (None, _) => false,
                (Some(_), None) => true,
                (Some(a), Some(b)) => a.as_deref().map(|s| s.replace(' ', "")) == Some(b.replace(' ', "")),
            });
        check("EulerFamilies", same, format!("{:?}", record.euler_families), format!("{w:?}"));
    }
    if let Some(w) = &expected.some_simple_pseries {
        let have = polys(&record.simple_pseries).unwrap_or_default();
        for s in w {
            let ok = s.parse::<NatPoly>().map(|p| have.contains(&p)).unwrap_or(false);
            check("SomeSimplePSeries", ok, format!("{:?}", record.simple_pseries), s.clone());
        }
    }
    diffs
}
