use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactalg::{FieldSpec, Scalar};
use crate::groebner::MultiPoly;
use crate::refgroup::{load_group, ReflectionGroup};

fn group(id: &str) -> Arc<ReflectionGroup> {
    Arc::new(load_group(id).unwrap())
}

/// `H_{T,c}` with `T` and each `c_i` independent indeterminates.
fn generic_algebra(g: &Arc<ReflectionGroup>) -> CherednikAlgebra {
    let mut names = vec!["T".to_string()];
    names.extend((1..=g.num_reflection_classes()).map(|i| format!("C{i}")));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let f = FieldSpec::poly_ring(g.field(), &refs);
    let t = Scalar::variable(&f, "T").unwrap();
    let c = names[1..].iter().map(|n| Scalar::variable(&f, n).unwrap()).collect();
    CherednikAlgebra::new(g.clone(), CherednikParameter::new(g, t, c).unwrap()).unwrap()
}

fn random_element(alg: &CherednikAlgebra, rng: &mut ChaCha8Rng, max_deg: u32, terms: usize) -> PbwElement {
    let n = alg.rank();
    let f = alg.field().clone();
    let mut e = alg.zero();
    for _ in 0..terms {
        let mut alpha = vec![0u32; n];
        let mut beta = vec![0u32; n];
        let d = rng.gen_range(0..=max_deg);
        for _ in 0..d {
            if rng.gen_bool(0.5) {
                alpha[rng.gen_range(0..n)] += 1;
            } else {
                beta[rng.gen_range(0..n)] += 1;
            }
        }
        let g = rng.gen_range(0..alg.group().order());
        let c = Scalar::from_int(&f, rng.gen_range(-3..=3));
        e = e.add(&PbwElement::term(&f, &alpha, &beta, g, c));
    }
    e
}

#[test]
fn g4_ggor_map() {
    let g = group("G4");
    let k = GgorParameter::generic(&g);
    let c = ggor_to_c(&g, &k);
    let f = k.field();
    assert_eq!(c[0], Scalar::parse(f, "(-z3+1)*k1_1 + (2*z3+1)*k1_2").unwrap());
    assert_eq!(c[1], Scalar::parse(f, "(z3+2)*k1_1 + (-2*z3-1)*k1_2").unwrap());
}

#[test]
fn zero_ggor_gives_zero_c() {
    for id in ["C2", "B2", "G4"] {
        let g = group(id);
        let f = g.field().clone();
        let k = GgorParameter::from_assignment(&g, &f, &BTreeMap::new()).unwrap();
        assert!(ggor_to_c(&g, &k).iter().all(|v| v.is_zero()));
    }
}

#[test]
fn b2_ggor_is_twice_k() {
    let g = group("B2");
    let k = GgorParameter::generic(&g);
    let c = ggor_to_c(&g, &k);
    let f = k.field();
    let vars = ggor_variable_names(&g);
    assert_eq!(vars, ["k1_1", "k2_1"]);
    // class i lies in orbit i here
    for (i, v) in c.iter().enumerate() {
        let r = g.reflections().iter().find(|r| r.element == g.reflection_classes()[i]).unwrap();
        let var = Scalar::variable(f, &vars[r.id.0]).unwrap();
        assert_eq!(*v, &Scalar::from_int(f, 2) * &var);
    }
}

#[test]
fn sharp_is_an_involution() {
    let g = group("G4");
    let k = GgorParameter::generic(&g);
    let s = k.sharp();
    assert_eq!(s.get(0, 1), k.get(0, 2));
    assert_eq!(s.get(0, 2), k.get(0, 1));
    assert_eq!(s.sharp(), k);
    let b = GgorParameter::generic(&group("B2"));
    assert_eq!(b.sharp(), b);
}

#[test]
fn hyperplane_restriction() {
    let g = group("G4");
    let k = ggor_on_hyperplane(&g, "k1_1-k1_2").unwrap();
    let c = ggor_to_c(&g, &k);
    let f = k.field();
    assert_eq!(c[0], Scalar::parse(f, "(z3+2)*k").unwrap());
    assert_eq!(c[1], Scalar::parse(f, "(-z3+1)*k").unwrap());
    let k2 = ggor_on_hyperplane(&g, "k1_1-2*k1_2").unwrap();
    assert_eq!(k2.get(0, 1), &Scalar::parse(k2.field(), "2*k").unwrap());
    assert!(ggor_on_hyperplane(&g, "k1_1*k1_2").is_err());
}

#[test]
fn commutator_of_degree_one_is_relation_three() {
    let g = group("B2");
    let alg = generic_algebra(&g);
    let f = alg.field().clone();
    for i in 0..2 {
        for j in 0..2 {
            let mut mu = vec![0, 0];
            mu[j] = 1;
            let comm = alg.commutator_y_xpow(i, &mu);
            let mut expected = alg.zero();
            if i == j {
                expected = expected.add(&alg.scalar(alg.parameter().t().clone()));
            }
            for r in g.reflections() {
                let coef = &r.pairing[i][j].embed(&f).unwrap() * &alg.parameter().c()[r.class];
                expected = expected.add(&alg.g(r.element).scale(&coef));
            }
            let mut got = PbwElement::from_poly(comm.t_part.clone(), 0);
            for (s, p) in &comm.s_parts {
                got = got.add(&PbwElement::from_poly(p.clone(), *s));
            }
            assert_eq!(got, expected);
            // and the full product agrees
            assert_eq!(alg.commutator(&alg.y(i), &alg.x(j)), expected);
        }
    }
    assert!(alg.commutator_y_xpow(0, &[0, 0]).s_parts.is_empty());
}

#[test]
fn c2_commutator_with_square() {
    // y x^2 = x^2 y + 2 T x + c (x + ^s x) s, and ^s x = -x
    let g = group("C2");
    let alg = generic_algebra(&g);
    let f = alg.field().clone();
    let x2 = alg.product(&alg.x(0), &alg.x(0));
    let got = alg.commutator(&alg.y(0), &x2);
    let t = Scalar::variable(&f, "T").unwrap();
    assert_eq!(got, alg.x(0).scale(&(&Scalar::from_int(&f, 2) * &t)));
    // [y, x^3] has a group part: c (x^2 + x ^s x + (^s x)^2) = c x^2
    let x3 = alg.product(&x2, &alg.x(0));
    let got = alg.commutator(&alg.y(0), &x3);
    let c = Scalar::variable(&f, "C1").unwrap();
    let x2c = alg.product(&alg.x(0), &alg.x(0));
    let expected = x2c.scale(&(&Scalar::from_int(&f, 3) * &t)).add(&alg.product(&x2c, &alg.g(1)).scale(&c));
    assert_eq!(got, expected);
}

#[test]
fn g4_y1_x1_identity_part() {
    let g = group("G4");
    let k = GgorParameter::generic(&g);
    let c = ggor_to_c(&g, &k);
    let f = k.field().clone();
    let param = CherednikParameter::new(&g, Scalar::one(&f), c).unwrap();
    let alg = CherednikAlgebra::new(g.clone(), param).unwrap();
    let p = alg.product(&alg.y(0), &alg.x(0));
    let id = p.coefficient(0);
    let expected = MultiPoly::parse(&f, &["x1", "x2", "y1", "y2"], "x1*y1 + 1").unwrap();
    assert_eq!(id, expected);
    // six reflections pair y1 with x1 nontrivially
    assert_eq!(p.terms().len(), 7);
    assert!(alg.product(&alg.x(0), &alg.x(1)) == alg.product(&alg.x(1), &alg.x(0)));
}

#[test]
fn generators_commute_within_blocks() {
    let g = group("G4");
    let alg = generic_algebra(&g);
    assert!(alg.commutator(&alg.x(0), &alg.x(1)).is_zero());
    assert!(alg.commutator(&alg.y(0), &alg.y(1)).is_zero());
}

#[test]
fn fast_product_matches_rewriting() {
    for id in ["C2", "S3", "B2"] {
        let g = group(id);
        let alg = generic_algebra(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..15 {
            let a = random_element(&alg, &mut rng, 2, 3);
            let b = random_element(&alg, &mut rng, 2, 3);
            assert_eq!(alg.product(&a, &b), naive_rewrite_product(&alg, &a, &b), "{id}");
        }
    }
}

#[test]
fn product_is_associative() {
    let g = group("B2");
    let alg = generic_algebra(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let a = random_element(&alg, &mut rng, 2, 2);
        let b = random_element(&alg, &mut rng, 2, 2);
        let c = random_element(&alg, &mut rng, 2, 2);
        assert_eq!(alg.product(&alg.product(&a, &b), &c), alg.product(&a, &alg.product(&b, &c)));
    }
}

#[test]
fn b2_euler_element() {
    let g = group("B2");
    let c = named_parametrisation(&g, "BR").unwrap();
    let f = c[0].field().clone();
    let alg = CherednikAlgebra::new(g.clone(), CherednikParameter::at_t_zero(&g, c).unwrap()).unwrap();
    let eu = alg.euler_element();
    let names = ["x1", "x2", "y1", "y2"];
    assert_eq!(eu.coefficient(0), MultiPoly::parse(&f, &names, "x1*y1 + x2*y2").unwrap());
    let mut coefs: Vec<String> = eu.terms().iter().filter(|(g, _)| **g != 0).map(|(_, p)| p.coeff(&[0, 0, 0, 0]).to_string()).collect();
    coefs.sort();
    assert_eq!(coefs, ["-C1", "-C1", "-C2", "-C2"]);
    assert!(alg.is_central(&eu));
}

#[test]
fn euler_element_central_with_t() {
    let g = group("S3");
    let alg = generic_algebra(&g);
    let eu = alg.euler_element();
    // at t != 0, [eu, x] = t x and [eu, y] = -t y
    let t = alg.parameter().t().clone();
    assert_eq!(alg.commutator(&eu, &alg.x(0)), alg.x(0).scale(&t));
    assert_eq!(alg.commutator(&eu, &alg.y(1)), alg.y(1).scale(&-t));
    assert!(alg.commutator(&eu, &alg.g(g.generator_element(0))).is_zero());
}

#[test]
fn g4_euler_families() {
    let g = group("G4");
    let k = ggor_on_hyperplane(&g, "k1_1-k1_2").unwrap();
    let c = ggor_to_c(&g, &k);
    let f = k.field();
    let fams = euler_families(&g, &c);
    let got: Vec<(Vec<usize>, String)> = fams.into_iter().map(|(m, s)| (m, s.to_string())).collect();
    let kk = |s: &str| Scalar::parse(f, s).unwrap().to_string();
    assert_eq!(
        got,
        vec![(vec![0], kk("8*k")), (vec![1, 2, 3], kk("-4*k")), (vec![4, 5], kk("2*k")), (vec![6], kk("0"))]
    );
    let zero: Vec<Scalar> = c.iter().map(|v| Scalar::zero(v.field())).collect();
    assert_eq!(euler_families(&g, &zero).len(), 1);
}

#[test]
fn poisson_brackets_b2() {
    let g = group("B2");
    let c = named_parametrisation(&g, "BR").unwrap();
    let alg = CherednikAlgebra::new(g.clone(), CherednikParameter::at_t_zero(&g, c).unwrap()).unwrap();
    let sq = |a: PbwElement| alg.product(&a, &a);
    let sigma = sq(alg.y(0)).add(&sq(alg.y(1)));
    let big_sigma = sq(alg.x(0)).add(&sq(alg.x(1)));
    let eu = alg.euler_element();
    assert!(poisson_bracket(&alg, &sigma, &sigma).unwrap().is_zero());
    let ab = poisson_bracket(&alg, &sigma, &big_sigma).unwrap();
    let ba = poisson_bracket(&alg, &big_sigma, &sigma).unwrap();
    assert_eq!(ab, ba.scale(&-Scalar::one(alg.field())));
    // {eu, z} = (x-degree minus y-degree) z, from [eu, x] = t x and [eu, y] = -t y
    let f = alg.field().clone();
    assert_eq!(poisson_bracket(&alg, &eu, &sigma).unwrap(), sigma.scale(&Scalar::from_int(&f, -2)));
    assert_eq!(poisson_bracket(&alg, &eu, &big_sigma).unwrap(), big_sigma.scale(&Scalar::from_int(&f, 2)));
    assert!(matches!(poisson_bracket(&alg, &alg.x(0), &sigma), Err(CherednikError::NonCentral(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn prop_oracle_product_c2(seed in any::<u64>()) {
        let g = group("C2");
        let alg = generic_algebra(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, &mut rng, 2, 3);
        let b = random_element(&alg, &mut rng, 2, 3);
        prop_assert_eq!(alg.product(&a, &b), naive_rewrite_product(&alg, &a, &b));
    }

    #[test]
    fn prop_bilinear(seed in any::<u64>()) {
        let g = group("B2");
        let alg = generic_algebra(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&alg, &mut rng, 2, 2);
        let b = random_element(&alg, &mut rng, 2, 2);
        let c = random_element(&alg, &mut rng, 2, 2);
        prop_assert_eq!(alg.product(&a, &b.add(&c)), alg.product(&a, &b).add(&alg.product(&a, &c)));
        prop_assert_eq!(alg.product(&a.add(&b), &c), alg.product(&a, &c).add(&alg.product(&b, &c)));
    }
}
