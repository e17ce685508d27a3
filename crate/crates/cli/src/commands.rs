use std::fmt::Write;

use rrca::cherednik::{euler_families, ggor_variable_names, CherednikParameter};
use rrca::lift::{gordon, GordonOptions};
use rrca::refgroup::{load_group, ReflectionGroup, Side};
use rrca::restricted::bad_primes;
use rrca::verma::{verma_module, GradedModule, StandardLayout};

use crate::params::{parse_irrep, resolve_parameter, ParameterInput, ResolvedParameter};
use crate::record::{compare, Expected, GordonRecord};
use crate::{expected, CliError};

pub fn group(id: &str) -> Result<ReflectionGroup, CliError> {
    Ok(load_group(id)?)
}

pub fn group_info(g: &ReflectionGroup) -> String {
    let mut s = String::new();
    let degs: Vec<u32> = g.coinvariants(Side::X).invariants.iter().map(|f| f.total_degree().unwrap_or(0)).collect();
    writeln!(s, "group {}", g.name()).unwrap();
    writeln!(s, "field {}", g.field()).unwrap();
    writeln!(s, "rank {}", g.dim()).unwrap();
    writeln!(s, "order {}", g.order()).unwrap();
    writeln!(s, "reflections {} in {} classes", g.reflections().len(), g.num_reflection_classes()).unwrap();
    writeln!(s, "invariant degrees {degs:?}").unwrap();
    writeln!(s, "GGOR variables {}", ggor_variable_names(g).join(", ")).unwrap();
    writeln!(s, "bad primes {:?}", bad_primes(g)).unwrap();
    for (i, (l, r)) in g.labels().iter().zip(g.irreps()).enumerate() {
        writeln!(s, "irrep {} {} dim {}", i + 1, l, r.dim).unwrap();
    }
    s
}

pub fn euler(g: &ReflectionGroup, input: &ParameterInput) -> Result<String, CliError> {
    let p = resolve_parameter(g, input)?;
    let mut s = String::new();
    for (members, value) in euler_families(g, &p.c) {
        let names: Vec<String> = members.iter().map(|&i| g.labels()[i].to_string()).collect();
        let nums: Vec<String> = members.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(s, "{{{}}} {{{}}} {}", nums.join(","), names.join(", "), value).unwrap();
    }
    Ok(s)
}

pub fn verma(g: &ReflectionGroup, irrep: &str, input: &ParameterInput) -> Result<GradedModule, CliError> {
    let i = parse_irrep(g, irrep)?;
    let p = resolve_parameter(g, input)?;
    let param = CherednikParameter::at_t_zero(g, p.c).map_err(|e| CliError::Usage(e.to_string()))?;
    verma_module(g, &param, i).map_err(|e| CliError::Computation(e.to_string()))
}

pub fn verma_summary(m: &GradedModule) -> String {
    let degs = m.degree_set();
    let counts: Vec<usize> = degs.iter().map(|&d| m.basis_in_degree(d).len()).collect();
    format!(
        "dimension {}, generator degrees {:?}\nbasis degrees {:?} with multiplicities {:?}\n",
        m.dim(),
        m.generator_degrees(),
        degs,
        counts
    )
}

/// Options of the `gordon` command in parsed form.
#[derive(Clone, Debug, Default)]
pub struct GordonArgs {
    pub families: Vec<String>,
    pub gset: Option<String>,
    pub p_exclude: Vec<u64>,
    pub seed: u64,
}

fn parse_family(g: &ReflectionGroup, s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',').map(|t| parse_irrep(g, t.trim())).collect()
}

pub fn run_gordon(g: &ReflectionGroup, input: &ParameterInput, args: &GordonArgs) -> Result<GordonRecord, CliError> {
    gordon_record(g, resolve_parameter(g, input)?, args)
}

pub fn gordon_record(g: &ReflectionGroup, p: ResolvedParameter, args: &GordonArgs) -> Result<GordonRecord, CliError> {
    if !p.c[0].field().is_field() {
        return Err(CliError::Usage("gordon needs parameters in a field (a hyperplane or explicit values)".into()));
    }
    let layout = StandardLayout::of(g);
    let names = layout.names();
    let gset = match &args.gset {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|t| {
                    names.iter().position(|n| n == t.trim()).ok_or_else(|| {
                        CliError::Usage(format!("unknown generator {t}; expected one of {}", names.join(",")))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let families = if args.families.is_empty() {
        None
    } else {
        Some(args.families.iter().map(|f| parse_family(g, f)).collect::<Result<Vec<_>, _>>()?)
    };
    let opts = GordonOptions { families, gset, exclude_primes: args.p_exclude.clone(), seed: args.seed, ..Default::default() };
    let r = gordon(g, p.c, &opts).map_err(|e| CliError::Computation(e.to_string()))?;
    Ok(GordonRecord::from_result(g, &p.description, args.seed, &r))
}

/// Differences between `record` and either `other` or the shipped expected record.
pub fn run_compare(record: &GordonRecord, other: Option<&GordonRecord>) -> Result<Vec<String>, CliError> {
    let want = match other {
        Some(o) => Expected::from(o),
        None => {
            let g = group(&record.group)?;
            expected::lookup(&g, &record.hyperplane)?.ok_or_else(|| {
                CliError::Record(format!("no expected record for {} at {}", record.group, record.hyperplane))
            })?
        }
    };
    Ok(compare(record, &want))
}
