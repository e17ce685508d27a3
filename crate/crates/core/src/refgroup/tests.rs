use super::*;
use crate::exactalg::{FieldSpec, Scalar};

fn labels(g: &ReflectionGroup) -> Vec<String> {
    g.labels().iter().map(|l| l.to_string()).collect()
}

#[test]
fn g4_elements_and_reflections() {
    let g = load_group("G4").unwrap();
    assert_eq!(g.order(), 24);
    assert_eq!(g.reflections().len(), 8);
    let lib = g.reflection_library();
    assert_eq!(lib.len(), 1);
    assert_eq!(lib[0].len(), 4);
    assert!(lib[0].iter().all(|h| h.len() == 2));
    assert_eq!(g.num_reflection_classes(), 2);
    let z = Scalar::variable(g.field(), "z3").unwrap();
    let first = &g.reflections()[g.reflections().iter().position(|r| r.class == 0).unwrap()];
    assert_eq!(first.eigenvalue, z);
    assert!(g.reflections().iter().all(|r| r.hyperplane_order == 3));
}

#[test]
fn b2_library_and_pairings() {
    let g = load_group("B2").unwrap();
    assert_eq!(g.order(), 8);
    let lib = g.reflection_library();
    assert_eq!(lib.len(), 2);
    assert!(lib.iter().all(|o| o.len() == 2 && o.iter().all(|h| h.len() == 1)));
    assert_eq!(g.num_reflection_classes(), 2);
    // pairing of t = diag(-1, 1): only (y_1, x_1) survives, equal to 1
    let t = g.generator_element(1);
    let r = g.reflections().iter().find(|r| r.element == t).unwrap();
    let f = g.field();
    assert_eq!(r.pairing[0][0], Scalar::one(f));
    assert!(r.pairing[0][1].is_zero() && r.pairing[1][0].is_zero() && r.pairing[1][1].is_zero());
    // pairing of s: entries +-1/2
    let s = g.generator_element(0);
    let r = g.reflections().iter().find(|r| r.element == s).unwrap();
    let half = Scalar::from_frac(f, 1, 2);
    assert_eq!(r.pairing[0][0], half);
    assert_eq!(r.pairing[0][1], -&half);
}

#[test]
fn c2_pairing_is_one() {
    let g = load_group("C2").unwrap();
    assert_eq!(g.order(), 2);
    assert_eq!(g.reflections()[0].pairing[0][0], Scalar::one(&FieldSpec::rationals()));
}

#[test]
fn coinvariant_dimensions() {
    for (id, order, series) in [
        ("C2", 2, vec![1, 1]),
        ("S3", 6, vec![1, 2, 2, 1]),
        ("B2", 8, vec![1, 2, 2, 2, 1]),
        ("G4", 24, vec![1, 2, 3, 4, 4, 4, 3, 2, 1]),
    ] {
        let g = load_group(id).unwrap();
        for side in [Side::X, Side::Y] {
            let co = g.coinvariants(side);
            assert_eq!(co.dim(), order, "{id}");
            assert_eq!(co.hilbert_series(), series, "{id}");
        }
    }
}

#[test]
fn b2_standard_monomials() {
    let g = load_group("B2").unwrap();
    let mons = &g.coinvariants(Side::X).monomials;
    let expected: Vec<Vec<u32>> =
        vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3]];
    assert_eq!(mons, &expected);
}

#[test]
fn regular_representation_in_coinvariants() {
    // each irrep occurs dim-many times in the coinvariant algebra
    let g = load_group("G4").unwrap();
    for (i, ir) in g.irreps().iter().enumerate() {
        let total: u64 = fake_degree(&g, i).iter().sum();
        assert_eq!(total as usize, ir.dim);
    }
}

#[test]
fn g4_labels() {
    let g = load_group("G4").unwrap();
    assert_eq!(
        labels(&g),
        ["phi_{1,0}", "phi_{1,4}", "phi_{1,8}", "phi_{2,5}", "phi_{2,3}", "phi_{2,1}", "phi_{3,2}"]
    );
}

#[test]
fn b2_labels_distinct() {
    let g = load_group("B2").unwrap();
    let ls = labels(&g);
    assert_eq!(ls[0], "phi_{1,0}");
    assert_eq!(ls[4], "phi_{2,1}");
    let mut sorted = ls.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 5);
}

#[test]
fn diagonal_generator_is_diagonal() {
    let g = load_group("G4").unwrap();
    let k = g.diagonal_generator().unwrap();
    for ir in g.irreps() {
        let m = &ir.generators[k];
        for (i, j, _) in m.entries() {
            assert_eq!(i, j);
        }
    }
}

#[test]
fn invariants_are_invariant() {
    let g = load_group("G4").unwrap();
    for side in [Side::X, Side::Y] {
        let inv = fundamental_invariants(&g, side).unwrap();
        let degs: Vec<u32> = inv.iter().map(|f| f.total_degree().unwrap()).collect();
        assert_eq!(degs, [4, 6]);
        for f in &inv {
            for e in 0..g.order() {
                assert_eq!(&act_on_poly(g.linear_action(side, e), f), f);
            }
        }
    }
}

#[test]
fn bad_data_rejected() {
    let text = "name X\nfield Q\ndim 1\ngenerator s\n-1\nirrep 1\n1\nirrep 1\n1\n";
    assert!(matches!(ReflectionGroup::from_data(parse_group_data(text).unwrap()), Err(GroupError::Irrep(2, _))));
    let text = "name X\nfield Q\ndim 1\ngenerator s\n-1\nirrep 1\n2\n";
    assert!(ReflectionGroup::from_data(parse_group_data(text).unwrap()).is_err());
    assert!(matches!(load_group("nope"), Err(GroupError::Unknown(_))));
}
