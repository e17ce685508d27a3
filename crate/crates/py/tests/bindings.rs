use rrca_py::{Group, Record};

#[test]
fn group_properties() {
    let g = Group::new("G4").unwrap();
    assert_eq!(g.order(), 24);
    assert_eq!(g.rank(), 2);
    assert_eq!(g.labels()[1], "phi_{1,4}");
    assert_eq!(g.irrep_dims(), vec![1, 1, 1, 2, 2, 2, 3]);
    assert_eq!(g.bad_primes(), vec![2, 3, 7]);
    assert!(Group::new("G99").is_err());
}

#[test]
fn euler_families_are_numbered_from_one() {
    let g = Group::new("G4").unwrap();
    let p = g.hyperplane("k1_1-k1_2").unwrap();
    let fams = g.euler_families(&p);
    assert_eq!(fams.len(), 4);
    assert!(fams.iter().any(|(m, _)| m == &vec![2, 3, 4]));
    assert!(g.hyperplane("q").is_err());
}

#[test]
fn gordon_record_round_trip() {
    let g = Group::new("B2").unwrap();
    let p = g.hyperplane("k1_1-k2_1").unwrap();
    let r = g.gordon(&p, None, None, None, 2).unwrap();
    assert_eq!(r.simple_dims(), vec![8, 8, 1, 1, 6]);
    let back = Record::from_toml(&r.to_toml().unwrap()).unwrap();
    assert!(r.compare(Some(&back)).unwrap().is_empty());
}

#[test]
fn family_run_against_shipped_record() {
    let g = Group::new("G4").unwrap();
    let p = g.hyperplane("k1_1-k1_2").unwrap();
    let r = g.gordon(&p, Some(vec![vec![2, 3, 4]]), Some(vec!["y1".into(), "y2".into(), "g2".into()]), Some(vec![2, 3, 5]), 0).unwrap();
    assert_eq!(r.simple_dims(), vec![9, 1, 7]);
    assert!(r.compare(None).unwrap().is_empty());
}
