use rrca::cherednik::{euler_families, named_parametrisation, CherednikParameter};
use rrca::exactalg::{FieldSpec, Scalar};
use rrca::lift::{gordon, GordonOptions};
use rrca::refgroup::{load_group, shipped_groups, ReflectionGroup};
use rrca::verma::{check_module_relations, verma_module};

fn one_parameter(g: &ReflectionGroup, values: &[i64]) -> Vec<Scalar> {
    let f = FieldSpec::rational_functions(g.field(), "k").unwrap();
    let k = Scalar::variable(&f, "k").unwrap();
    values.iter().map(|&v| &k * &Scalar::from_int(&f, v)).collect()
}

/// Verma multiplicities times head dimensions add up to `|G| dim(lambda)`.
fn assert_dimensions_add_up(g: &ReflectionGroup, c: Vec<Scalar>) {
    let r = gordon(g, c, &GordonOptions::default()).unwrap();
    for (row, &lambda) in r.decomposition.iter().zip(&r.irreps) {
        let total: usize = row.iter().zip(&r.simple_dims).map(|(m, d)| m * d).sum();
        assert_eq!(total, g.order() * g.irreps()[lambda].dim);
    }
    for (series, &d) in r.simple_pseries.iter().zip(&r.simple_dims) {
        assert_eq!(series.at_one() as usize, d);
    }
}

#[test]
fn every_shipped_group_loads() {
    for id in shipped_groups() {
        let g = load_group(id).unwrap();
        assert_eq!(g.irreps().iter().map(|r| r.dim * r.dim).sum::<usize>(), g.order(), "{id}");
    }
}

#[test]
fn s3_generic_heads() {
    let g = load_group("S3").unwrap();
    let c = one_parameter(&g, &[1]);
    // generic c: every head has dimension |G|, and Delta(lambda) is dim(lambda) copies of it
    let r = gordon(&g, c.clone(), &GordonOptions::default()).unwrap();
    assert_eq!(r.simple_dims, vec![6, 6, 6]);
    assert_eq!(r.decomposition, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]);
    assert_eq!(r.verma_families, vec![vec![0], vec![1], vec![2]]);
    assert_dimensions_add_up(&g, c);
}

#[test]
fn b2_on_equal_parameters() {
    let g = load_group("B2").unwrap();
    let c = one_parameter(&g, &[1, 1]);
    assert_dimensions_add_up(&g, c.clone());
    let fams = euler_families(&g, &c);
    let r = gordon(&g, c, &GordonOptions::default()).unwrap();
    // Verma families refine Euler families
    for fam in &r.verma_families {
        assert!(fams.iter().any(|(e, _)| fam.iter().all(|i| e.contains(i))));
    }
}

#[test]
fn b2_vermas_at_named_parameter() {
    let g = load_group("B2").unwrap();
    let c = named_parametrisation(&g, "BR").unwrap();
    let p = CherednikParameter::at_t_zero(&g, c).unwrap();
    for j in 0..g.irreps().len() {
        let m = verma_module(&g, &p, j).unwrap();
        assert_eq!(m.dim(), g.order() * g.irreps()[j].dim);
        assert!(check_module_relations(&g, &p, &m));
    }
}
