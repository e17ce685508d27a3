use super::*;
use crate::exactalg::{FieldSpec, Scalar};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn p(t: &str) -> MultiPoly {
    MultiPoly::parse(&q(), &["x", "y"], t).unwrap()
}

#[test]
fn b2_invariant_quotient() {
    let g = groebner_basis(&[p("x^2+y^2"), p("x^2*y^2")], MonomialOrder::Lex).unwrap();
    assert_eq!(g, vec![p("y^4"), p("x^2+y^2")]);
    let sm = standard_monomials(&g, 2, MonomialOrder::Lex).unwrap();
    let names: Vec<String> = sm.iter().map(|m| MultiPoly::monomial(&q(), m.clone(), Scalar::one(&q())).render(&["x", "y"])).collect();
    assert_eq!(names, ["1", "x", "y", "x*y", "y^2", "x*y^2", "y^3", "x*y^3"]);
    let mut series = vec![0; 5];
    for m in &sm {
        series[degree(m) as usize] += 1;
    }
    assert_eq!(series, [1, 2, 2, 2, 1]);
}

#[test]
fn infinite_quotient_is_rejected() {
    let g = groebner_basis(&[p("x*y")], MonomialOrder::Lex).unwrap();
    assert_eq!(standard_monomials(&g, 2, MonomialOrder::Lex), Err(GroebnerError::InfiniteQuotient));
}

#[test]
fn grevlex_basis_agrees_on_quotient_size() {
    let gens = [p("x^2+y^2"), p("x^2*y^2")];
    let g = groebner_basis(&gens, MonomialOrder::GrevLex).unwrap();
    assert_eq!(standard_monomials(&g, 2, MonomialOrder::GrevLex).unwrap().len(), 8);
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((0u32..4, 0u32..4, -3i64..4), 1..5).prop_map(|ts| {
        let mut f = MultiPoly::zero(&q(), 2);
        for (a, b, c) in ts {
            f.add_term(vec![a, b], Scalar::from_int(&q(), c));
        }
        f
    })
}

proptest! {
    #[test]
    fn normal_form_is_a_projection(f in small_poly(), g1 in small_poly(), g2 in small_poly()) {
        let gens = vec![p("x^2+y^2"), p("x^2*y^2")];
        let g = groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        let nf = normal_form(&f, &g, MonomialOrder::Lex);
        prop_assert_eq!(normal_form(&nf, &g, MonomialOrder::Lex), nf.clone());
        let in_ideal = g1.mul(&gens[0]).add(&g2.mul(&gens[1]));
        prop_assert!(normal_form(&in_ideal, &g, MonomialOrder::Lex).is_zero());
        let shifted = f.add(&in_ideal);
        prop_assert_eq!(normal_form(&shifted, &g, MonomialOrder::Lex), nf);
    }

    #[test]
    fn reduced_basis_is_canonical(a in small_poly(), b in small_poly()) {
        let g1 = groebner_basis(&[a.clone(), b.clone()], MonomialOrder::Lex).unwrap();
        let g2 = groebner_basis(&[b.clone(), a.add(&b)], MonomialOrder::Lex).unwrap();
        prop_assert_eq!(g1, g2);
    }
}
