use std::collections::BTreeMap;

use rrca::cherednik::{ggor_on_hyperplane, ggor_to_c, ggor_variable_names, named_parametrisation, GgorParameter};
use rrca::exactalg::{FieldSpec, Scalar};
use rrca::refgroup::ReflectionGroup;

use crate::CliError;

/// How the user named a parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParameterInput {
    /// Generic point of a hyperplane in GGOR coordinates, e.g. `k1_1-k1_2`.
    Hyperplane(String),
    /// `name=value` pairs: class values `c1, c2, ..` or GGOR variables `k1_1, ..`; values may use `k`.
    Values(String),
    /// A parametrisation stored with the group data, e.g. `BR`.
    Named(String),
    /// Generic GGOR parameter over the polynomial ring.
    Generic,
}

#[derive(Clone, Debug)]
pub struct ResolvedParameter {
    pub c: Vec<Scalar>,
    pub description: String,
}

fn mentions_k(s: &str) -> bool {
    s.split(|ch: char| !ch.is_ascii_alphanumeric() && ch != '_').any(|t| t == "k")
}

/// Class values `c` for the given input.
pub fn resolve_parameter(g: &ReflectionGroup, input: &ParameterInput) -> Result<ResolvedParameter, CliError> {
    let usage = |e: String| CliError::Usage(e);
    match input {
        ParameterInput::Hyperplane(h) => {
            let k = ggor_on_hyperplane(g, h).map_err(|e| usage(e.to_string()))?;
            Ok(ResolvedParameter { c: ggor_to_c(g, &k), description: h.replace(' ', "") })
        }
        ParameterInput::Generic => {
            Ok(ResolvedParameter { c: ggor_to_c(g, &GgorParameter::generic(g)), description: "generic".into() })
        }
        ParameterInput::Named(n) => {
            Ok(ResolvedParameter { c: named_parametrisation(g, n).map_err(|e| usage(e.to_string()))?, description: n.clone() })
        }
        ParameterInput::Values(text) => {
            let pairs: Vec<(String, String)> = text
                .split(',')
                .map(|p| {
                    let (a, b) = p.split_once('=').ok_or_else(|| usage(format!("expected name=value, got {p}")))?;
                    Ok((a.trim().to_string(), b.trim().to_string()))
                })
                .collect::<Result<_, CliError>>()?;
            let field = if pairs.iter().any(|(_, v)| mentions_k(v)) {
                FieldSpec::rational_functions(g.field(), "k").map_err(|e| usage(e.to_string()))?
            } else {
                g.field().clone()
            };
            let parse = |v: &str| Scalar::parse(&field, v).map_err(|e| usage(format!("{v}: {e}")));
            let ggor = ggor_variable_names(g);
            let c = if pairs.iter().all(|(n, _)| ggor.contains(n)) {
                let assignment: BTreeMap<String, Scalar> =
                    pairs.iter().map(|(n, v)| Ok((n.clone(), parse(v)?))).collect::<Result<_, CliError>>()?;
                let k = GgorParameter::from_assignment(g, &field, &assignment).map_err(|e| usage(e.to_string()))?;
                ggor_to_c(g, &k)
            } else {
                let mut c = vec![None; g.num_reflection_classes()];
                for (n, v) in &pairs {
                    let i: usize = n
                        .strip_prefix('c')
                        .and_then(|s| s.parse().ok())
                        .filter(|&i| i >= 1 && i <= c.len())
                        .ok_or_else(|| usage(format!("unknown parameter {n}")))?;
                    c[i - 1] = Some(parse(v)?);
                }
                c.into_iter()
                    .enumerate()
                    .map(|(i, v)| v.ok_or_else(|| usage(format!("missing value for c{}", i + 1))))
                    .collect::<Result<_, _>>()?
            };
            Ok(ResolvedParameter { c, description: text.replace(' ', "") })
        }
    }
}

/// Irrep index (0-based) from a 1-based number or a label such as `phi_{1,4}` or `phi_1_4`.
pub fn parse_irrep(g: &ReflectionGroup, s: &str) -> Result<usize, CliError> {
    let n = g.irreps().len();
    if let Ok(i) = s.parse::<usize>() {
        return (1..=n).contains(&i).then(|| i - 1).ok_or_else(|| CliError::Usage(format!("irrep number {i} out of range 1..={n}")));
    }
    let norm = |t: &str| t.replace(['{', '}', ' '], "").replace(',', "_");
    let want = norm(s);
    g.labels()
        .iter()
        .position(|l| norm(&l.to_string()) == want)
        .ok_or_else(|| CliError::Usage(format!("unknown irrep {s}")))
}
