use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::cherednik::named_parametrisation;
use crate::exactalg::{reduce_mod_prime, FieldSpec, Specialization};
use crate::refgroup::load_group;

fn group(id: &str) -> Arc<ReflectionGroup> {
    Arc::new(load_group(id).unwrap())
}

fn b2_restricted() -> RestrictedAlgebra {
    let g = group("B2");
    let c = named_parametrisation(&g, "BR").unwrap();
    RestrictedAlgebra::new(g, c).unwrap()
}

fn random_reduced(r: &RestrictedAlgebra, rng: &mut ChaCha8Rng) -> PbwElement {
    let alg = r.algebra();
    let g = alg.group();
    let f = alg.field().clone();
    let xs = &g.coinvariants(Side::X).monomials;
    let ys = &g.coinvariants(Side::Y).monomials;
    let mut e = alg.zero();
    for _ in 0..3 {
        let a = &xs[rng.gen_range(0..xs.len())];
        let b = &ys[rng.gen_range(0..ys.len())];
        let h = rng.gen_range(0..g.order());
        e = e.add(&PbwElement::term(&f, a, b, h, Scalar::from_int(&f, rng.gen_range(-2..=2))));
    }
    e
}

#[test]
fn dimension_is_order_cubed() {
    for id in ["C2", "S3", "B2", "G4"] {
        let g = group(id);
        let c = vec![Scalar::zero(g.field()); g.num_reflection_classes()];
        let r = RestrictedAlgebra::new(g.clone(), c).unwrap();
        assert_eq!(r.dim(), g.order().pow(3), "{id}");
    }
}

#[test]
fn hilbert_ideal_elements_vanish() {
    let r = b2_restricted();
    let alg = r.algebra();
    let g = alg.group();
    let f = alg.field().clone();
    for inv in &g.coinvariants(Side::X).invariants {
        let mut p = MultiPoly::zero(&f, 4);
        for (m, v) in inv.terms() {
            p.add_term(vec![m[0], m[1], 0, 0], v.embed(&f).unwrap());
        }
        let e = PbwElement::from_poly(p, 0);
        assert!(r.reduce(&e).is_zero());
        assert!(r.product(&e, &alg.y(0)).is_zero());
        assert!(r.product(&alg.y(1), &e).is_zero());
    }
}

#[test]
fn relation_three_survives() {
    let r = b2_restricted();
    let alg = r.algebra();
    let g = alg.group();
    let f = alg.field().clone();
    for i in 0..2 {
        for j in 0..2 {
            let lhs = r.product(&alg.y(i), &alg.x(j)).sub(&r.product(&alg.x(j), &alg.y(i)));
            let mut rhs = alg.zero();
            for s in g.reflections() {
                let coef = &s.pairing[i][j].embed(&f).unwrap() * &alg.parameter().c()[s.class];
                rhs = rhs.add(&alg.g(s.element).scale(&coef));
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn restricted_product_is_associative_and_reduced() {
    let r = b2_restricted();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_reduced(&r, &mut rng);
        let b = random_reduced(&r, &mut rng);
        let c = random_reduced(&r, &mut rng);
        let ab = r.product(&a, &b);
        assert!(r.is_reduced(&ab));
        assert_eq!(r.product(&ab, &c), r.product(&a, &r.product(&b, &c)));
        // agrees with reducing the unrestricted product
        assert_eq!(ab, r.reduce(&r.algebra().product(&a, &b)));
    }
}

#[test]
fn bad_primes_make_constants_integral() {
    for id in ["C2", "S3", "B2", "G4"] {
        let g = group(id);
        let bad = bad_primes(&g);
        let p = (5u64..).find(|&p| crate::exactalg::is_prime(p) && !bad.contains(&p) && p % 3 == 1).unwrap();
        let root = crate::exactalg::modulus_roots_mod_p(g.field(), p).first().copied();
        let spec = Specialization { p, root, point: Default::default() };
        for side in [Side::X, Side::Y] {
            let co = g.coinvariants(side);
            for m in &co.mult {
                for (_, _, v) in m.entries() {
                    reduce_mod_prime(v, &spec).unwrap();
                }
            }
            for m in &co.action {
                for (_, _, v) in m.entries() {
                    reduce_mod_prime(v, &spec).unwrap();
                }
            }
        }
        if id == "G4" {
            // the Q(z3) realisation has 1/3 in its generators
            assert!(bad.contains(&3));
        }
    }
}

#[test]
fn potential_integrality() {
    let g = group("B2");
    let one = vec![Scalar::one(g.field()); 2];
    assert!(!is_potentially_integral(&g, &one, 2).unwrap());
    assert!(is_potentially_integral(&g, &one, 3).unwrap());
    let zero = vec![Scalar::zero(g.field()); 2];
    assert!(is_potentially_integral(&g, &zero, 2).unwrap());
    let two = vec![Scalar::from_int(g.field(), 2); 2];
    assert!(is_potentially_integral(&g, &two, 2).unwrap());
    let c2 = group("C2");
    assert!(is_potentially_integral(&c2, &[Scalar::one(c2.field())], 2).unwrap());
    let generic = FieldSpec::poly_ring(g.field(), &["A"]);
    let a = vec![Scalar::variable(&generic, "A").unwrap(); 2];
    assert!(is_potentially_integral(&g, &a, 2).is_err());
}
