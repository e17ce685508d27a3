use super::*;
use proptest::prelude::*;

fn q3() -> FieldSpec {
    FieldSpec::cyclotomic(3)
}

fn s(f: &FieldSpec, t: &str) -> Scalar {
    Scalar::parse(f, t).unwrap()
}

#[test]
fn cyclotomic_moduli() {
    let r = |v: &[i64]| v.iter().map(|&x| Rat::from_integer(x.into())).collect::<Vec<_>>();
    assert_eq!(cyclotomic_polynomial(3), r(&[1, 1, 1]));
    assert_eq!(cyclotomic_polynomial(4), r(&[1, 0, 1]));
    assert_eq!(cyclotomic_polynomial(5), r(&[1, 1, 1, 1, 1]));
    assert_eq!(cyclotomic_polynomial(6), r(&[1, -1, 1]));
}

#[test]
fn zeta3_arithmetic() {
    let f = q3();
    let z = s(&f, "z3");
    assert!(z.pow(3).is_one());
    assert!((&(&z * &z) + &(&z + &Scalar::one(&f))).is_zero());
    let w = s(&f, "2*z3+1");
    assert_eq!(&w * &w, Scalar::from_int(&f, -3));
    let inv = s(&f, "z3 - 1").inv().unwrap();
    assert_eq!(inv, s(&f, "(-z3-2)/3"));
    assert_eq!(s(&f, "z3^2"), s(&f, "-z3-1"));
    assert_eq!(s(&f, "z3^-1"), s(&f, "z3^2"));
}

#[test]
fn printing_is_canonical() {
    let f = q3();
    assert_eq!(s(&f, "z3 + 2").to_string(), "z3 + 2");
    assert_eq!(s(&f, "-z3 + 1").to_string(), "-z3 + 1");
    assert_eq!(s(&f, "(2*z3+1)/3").to_string(), "2/3*z3 + 1/3");
    let r = FieldSpec::poly_ring(&f, &["k1", "k2"]);
    let c = s(&r, "(-z3+1)*k1 + (2*z3+1)*k2");
    assert_eq!(c.to_string(), "(-z3 + 1)*k1 + (2*z3 + 1)*k2");
    let k = FieldSpec::rational_functions(&f, "k").unwrap();
    assert_eq!(s(&k, "8*k").to_string(), "8*k");
    assert_eq!(s(&k, "(k^2-1)/(2*k-2)").to_string(), "1/2*k + 1/2");
    assert_eq!(s(&k, "1/(2*k)").to_string(), "(1/2)/k");
}

#[test]
fn rational_functions_are_reduced() {
    let k = FieldSpec::rational_functions(&q3(), "k").unwrap();
    let a = s(&k, "(k^2-1)/(k-1)");
    assert_eq!(a, s(&k, "k+1"));
    let (_, den) = s(&k, "3/(2*k+4)").ratfn_parts().unwrap();
    assert!(den.last().unwrap().is_one());
    assert!((&s(&k, "1/k") * &s(&k, "k")).is_one());
}

#[test]
fn ring_levels_refuse_division() {
    let r = FieldSpec::poly_ring(&FieldSpec::rationals(), &["A", "B"]);
    assert!(s(&r, "A").inv().is_err());
    assert_eq!(s(&r, "(2*A)/2"), s(&r, "A"));
    assert!(Scalar::parse(&r, "1/A").is_err());
}

#[test]
fn field_mismatch_is_reported() {
    let a = Scalar::one(&q3());
    let b = Scalar::one(&FieldSpec::rationals());
    assert!(matches!(scalar_arithmetic(&a, &b, ArithOp::Add), Err(ExactError::FieldMismatch(..))));
}

#[test]
fn reduction_mod_p() {
    let f = q3();
    let spec = |root| Specialization { p: 7, root: Some(root), point: Default::default() };
    assert_eq!(reduce_mod_prime(&s(&f, "z3"), &spec(2)).unwrap(), 2);
    assert_eq!(reduce_mod_prime(&s(&f, "z3/2 + 1"), &spec(2)).unwrap(), 2);
    assert!(reduce_mod_prime(&s(&f, "z3"), &spec(3)).is_err());
    assert!(reduce_mod_prime(&s(&f, "1/7"), &spec(2)).is_err());
    assert_eq!(modulus_roots_mod_p(&f, 7), vec![2, 4]);
    let k = FieldSpec::rational_functions(&f, "k").unwrap();
    let mut sp = spec(2);
    sp.point.insert("k".into(), 3);
    assert_eq!(reduce_mod_prime(&s(&k, "(z3+2)*k"), &sp).unwrap(), 5);
    assert!(reduce_mod_prime(&s(&k, "1/(k-3)"), &sp).is_err());
}

#[test]
fn field_text_round_trip() {
    let f = q3();
    let fields = vec![
        FieldSpec::rationals(),
        f.clone(),
        FieldSpec::poly_ring(&f, &["k1", "k2"]),
        FieldSpec::rational_functions(&f, "k").unwrap(),
        FieldSpec::prime_field(1873).unwrap(),
        FieldSpec::number_field("a", vec![Rat::from_integer((-2).into()), Rat::from_integer(0.into()), Rat::from_integer(1.into())]).unwrap(),
    ];
    for fs in fields {
        assert_eq!(parse_field(&fs.to_string()).unwrap(), fs);
    }
}

#[test]
fn rcef_worked_example_is_fixed() {
    let f = FieldSpec::rationals();
    let m = ExactMatrix::from_rows(
        &f,
        &[
            vec![s(&f, "1"), s(&f, "0")],
            vec![s(&f, "0"), s(&f, "1")],
            vec![s(&f, "2"), s(&f, "1")],
            vec![s(&f, "1"), s(&f, "4")],
        ],
    );
    assert_eq!(rcef(&m), m);
    let shuffled = ExactMatrix::from_rows(
        &f,
        &[
            vec![s(&f, "1"), s(&f, "1")],
            vec![s(&f, "1"), s(&f, "0")],
            vec![s(&f, "3"), s(&f, "2")],
            vec![s(&f, "5"), s(&f, "1")],
        ],
    );
    assert_eq!(rcef(&shuffled), m);
}

fn int_matrix(f: &FieldSpec, rows: &[Vec<i64>]) -> ExactMatrix {
    let rs: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(f, x)).collect()).collect();
    ExactMatrix::from_rows(f, &rs)
}

fn nf_elem() -> impl Strategy<Value = Scalar> {
    (-6i64..7, -6i64..7, 1i64..4).prop_map(|(a, b, d)| {
        let f = q3();
        Scalar::from_frac(&f, a, d) + Scalar::from_frac(&f, b, d) * Scalar::parse(&f, "z3").unwrap()
    })
}

fn ratfn_elem() -> impl Strategy<Value = Scalar> {
    (nf_elem(), nf_elem(), nf_elem(), nf_elem()).prop_map(|(a, b, c, d)| {
        let k = FieldSpec::rational_functions(&q3(), "k").unwrap();
        let x = Scalar::variable(&k, "k").unwrap();
        let num = &a.embed(&k).unwrap() + &(&b.embed(&k).unwrap() * &x);
        let den = &c.embed(&k).unwrap() + &(&d.embed(&k).unwrap() * &x);
        if den.is_zero() { num } else { num.checked_div(&den).unwrap() }
    })
}

proptest! {
    #[test]
    fn number_field_axioms(a in nf_elem(), b in nf_elem(), c in nf_elem()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(Scalar::parse(a.field(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_function_axioms(a in ratfn_elem(), b in ratfn_elem(), c in ratfn_elem()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
        prop_assert_eq!(Scalar::parse(a.field(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn solve_and_nullspace(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 3),
                           x in proptest::collection::vec(-3i64..4, 4)) {
        let f = FieldSpec::rationals();
        let m = int_matrix(&f, &rows);
        let xv: SparseVec = x.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, Scalar::from_int(&f, *v))).collect();
        let b = m.mul_vec(&xv);
        let (p, null) = solve(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&p), b);
        prop_assert!(m.mul(&null).is_zero());
        prop_assert_eq!(null.ncols() + m.rank(), 4);
        prop_assert_eq!(rcef(&null), null.clone());
    }

    #[test]
    fn rcef_is_unique_and_spans(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 5)) {
        let f = FieldSpec::rationals();
        let m = int_matrix(&f, &rows);
        let r = rcef(&m);
        prop_assert_eq!(rcef(&r), r.clone());
        prop_assert_eq!(r.ncols(), m.rank());
        let mut e = Echelon::new(&f, 5);
        for c in r.columns() { e.insert(c.clone()); }
        for c in m.columns() { prop_assert!(e.contains(c)); }
        for (j, c) in r.columns().iter().enumerate() {
            let (&piv, v) = c.iter().next().unwrap();
            prop_assert!(v.is_one());
            for (l, other) in r.columns().iter().enumerate() {
                if l != j { prop_assert!(!other.contains_key(&piv)); }
            }
        }
    }
}
