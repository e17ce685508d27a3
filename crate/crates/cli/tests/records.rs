use std::collections::BTreeMap;

use proptest::prelude::*;

use rrca::lift::{gordon, GordonOptions};
use rrca::refgroup::load_group;
use rrca_cli::commands::{run_compare, run_gordon, GordonArgs};
use rrca_cli::expected::{expected_records, lookup};
use rrca_cli::record::{EulerFamily, SpecializationRecord};
use rrca_cli::{compare, resolve_parameter, Expected, GordonRecord, ParameterInput};

fn b2_record(seed: u64) -> GordonRecord {
    let g = load_group("B2").unwrap();
    let input = ParameterInput::Hyperplane("k1_1-k2_1".into());
    run_gordon(&g, &input, &GordonArgs { seed, ..Default::default() }).unwrap()
}

#[test]
fn record_survives_toml() {
    let r = b2_record(3);
    let text = r.to_toml().unwrap();
    assert_eq!(GordonRecord::from_toml(&text).unwrap(), r);
    assert!(text.contains("SimpleDims"));
    assert!(text.contains("[[EulerFamilies]]"));
}

#[test]
fn record_passes_its_own_checks() {
    let g = load_group("B2").unwrap();
    let r = b2_record(0);
    r.check(&g).unwrap();
    assert!(compare(&r, &Expected::from(&r)).is_empty());
}

#[test]
fn tampered_record_fails_checks() {
    let g = load_group("B2").unwrap();
    let mut r = b2_record(0);
    r.simple_dims[0] += 1;
    assert!(r.check(&g).is_err());
    let good = b2_record(0);
    let diffs = compare(&r, &Expected::from(&good));
    assert_eq!(diffs.len(), 1, "{diffs:?}");
    assert!(diffs[0].starts_with("SimpleDims"));
}

#[test]
fn family_order_does_not_matter() {
    let r = b2_record(0);
    let mut want = Expected::from(&r);
    let fams = want.cm_families.as_mut().unwrap();
    fams.reverse();
    for f in fams.iter_mut() {
        f.reverse();
    }
    want.euler_families.as_mut().unwrap().reverse();
    assert!(compare(&r, &want).is_empty());
}

#[test]
fn oversized_seed_is_an_error() {
    let mut r = b2_record(0);
    r.seed = u64::MAX;
    assert!(r.to_toml().is_err());
}

#[test]
fn seed_changes_only_specializations() {
    let a = b2_record(1);
    let b = b2_record(2);
    assert!(compare(&a, &Expected::from(&b)).is_empty());
    assert_eq!(a.to_toml().unwrap(), b2_record(1).to_toml().unwrap());
}

#[test]
fn shipped_records_are_consistent() {
    let g = load_group("G4").unwrap();
    let shipped = expected_records();
    assert!(shipped.len() >= 2);
    for e in &shipped {
        assert_eq!(e.group, "G4");
        if let (Some(dims), Some(d)) = (&e.simple_dims, &e.verma_decomposition) {
            // every Verma module has dimension |G| dim(lambda)
            for (i, row) in d.iter().enumerate() {
                let total: usize = row.iter().zip(dims).map(|(m, s)| m * s).sum();
                assert_eq!(total, g.order() * g.irreps()[i].dim);
            }
        }
    }
}

#[test]
fn lookup_normalises_the_linear_form() {
    let g = load_group("G4").unwrap();
    for form in ["k1_1-k1_2", "k1_1 - k1_2", "2*k1_1-2*k1_2", "-k1_1+k1_2"] {
        let e = lookup(&g, form).unwrap().unwrap_or_else(|| panic!("{form}"));
        assert_eq!(e.simple_dims.as_deref(), Some(&[24, 9, 1, 7, 8, 16, 24][..]));
    }
    assert!(lookup(&g, "k1_1").unwrap().is_none());
}

#[test]
fn g4_run_matches_shipped_record() {
    let g = load_group("G4").unwrap();
    let p = resolve_parameter(&g, &ParameterInput::Hyperplane("k1_1-k1_2".into())).unwrap();
    let r = gordon(&g, p.c, &GordonOptions::default()).unwrap();
    let record = GordonRecord::from_result(&g, "k1_1-k1_2", 0, &r);
    record.check(&g).unwrap();
    assert_eq!(run_compare(&record, None).unwrap(), Vec::<String>::new());
}

fn poly() -> impl Strategy<Value = String> {
    prop::collection::vec(0u8..5, 1..5).prop_map(|cs| {
        let terms: Vec<String> = cs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join("+") }
    })
}

proptest! {
    #[test]
    fn arbitrary_records_round_trip(
        dims in prop::collection::vec(1usize..100, 1..5),
        series in prop::collection::vec(poly(), 1..5),
        seed in 0..=i64::MAX as u64,
        p in 10_000u64..60_000,
        k in 1u64..1000,
    ) {
        let n = dims.len();
        let r = GordonRecord {
            group: "X".into(),
            hyperplane: "k1_1-k1_2".into(),
            seed,
            irreps: (1..=n).collect(),
            labels: (0..n).map(|i| format!("phi_{{1,{i}}}")).collect(),
            simple_dims: dims.clone(),
            simple_pseries: series.iter().cycle().take(n).cloned().collect(),
            simple_gmod_struct: vec![vec![1; n]; n],
            simple_graded_gmod_struct: vec![series.iter().cycle().take(n).cloned().collect(); n],
            verma_decomposition: vec![dims; n],
            cm_families: vec![(1..=n).collect()],
            euler_families: vec![EulerFamily { members: (1..=n).collect(), scalar: Some("2*k".into()) }],
            specializations: vec![SpecializationRecord {
                family: (1..=n).collect(),
                p,
                root: None,
                point: BTreeMap::from([("k".to_string(), k)]),
                draws: 1,
            }],
        };
        prop_assert_eq!(GordonRecord::from_toml(&r.to_toml().unwrap()).unwrap(), r);
    }
}
