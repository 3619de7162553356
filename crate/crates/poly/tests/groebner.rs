use homassoc_exact::Rational;
use homassoc_poly::{buchberger, is_groebner_basis, normal_form, MonomialOrder, MultiPoly, PolyError, PolyRing, DEFAULT_BUDGET};
use proptest::prelude::*;

fn ring(order: MonomialOrder) -> PolyRing {
    PolyRing::new(vec!["x".into(), "y".into(), "z".into()], order)
}

fn polys(r: &PolyRing, src: &[&str]) -> Vec<MultiPoly> {
    src.iter().map(|s| r.parse(s).unwrap()).collect()
}

#[test]
fn textbook_example_degrevlex() {
    // x^3 - 2xy, x^2 y - 2y^2 + x
    let r = ring(MonomialOrder::DegRevLex);
    let gb = buchberger(&polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]), DEFAULT_BUDGET).unwrap();
    let got: Vec<String> = gb.polys().iter().map(|p| r.format(p)).collect();
    assert_eq!(got, vec!["x^2", "x*y", "y^2 - 1/2*x"]);
    assert!(is_groebner_basis(gb.polys()));
}

#[test]
fn textbook_example_lex() {
    let r = ring(MonomialOrder::Lex);
    let gb = buchberger(&polys(&r, &["x^2 + y^2 + z^2 - 1", "x - y", "y - z"]), DEFAULT_BUDGET).unwrap();
    let got: Vec<String> = gb.polys().iter().map(|p| r.format(p)).collect();
    assert_eq!(got, vec!["x - z", "y - z", "z^2 - 1/3"]);
}

#[test]
fn inconsistent_system_gives_unit_ideal() {
    let r = ring(MonomialOrder::DegRevLex);
    let gb = buchberger(&polys(&r, &["x*y - 1", "x", "y + z"]), DEFAULT_BUDGET).unwrap();
    assert!(gb.is_unit_ideal());
}

#[test]
fn division_by_a_single_binomial() {
    let r = PolyRing::new(vec!["x".into(), "y".into()], MonomialOrder::Lex);
    let nf = normal_form(&r.parse("x^2*y").unwrap(), &[r.parse("x^2 - y").unwrap()]);
    assert_eq!(r.format(&nf), "y^2");
}

#[test]
fn zero_budget_is_reported() {
    let r = ring(MonomialOrder::DegRevLex);
    let err = buchberger(&polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]), 0).unwrap_err();
    assert!(matches!(err, PolyError::BudgetExceeded { .. }));
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    let term = ((0u16..=2, 0u16..=2, 0u16..=1), -3i64..=3);
    prop::collection::vec(term, 1..4).prop_map(|ts| {
        let terms = ts
            .into_iter()
            .map(|((a, b, c), k)| {
                (homassoc_poly::Monomial::from_exponents(vec![a, b, c]), Rational::from_integer(k))
            })
            .collect();
        MultiPoly::from_terms(3, MonomialOrder::DegRevLex, terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_is_reduced_and_contains_generators(gens in prop::collection::vec(small_poly(), 1..4)) {
        let Ok(gb) = buchberger(&gens, 200_000) else { return Ok(()); };
        prop_assert!(is_groebner_basis(gb.polys()));
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        for p in gb.polys() {
            prop_assert!(p.leading_coefficient().unwrap().is_one());
        }
        let mut reversed = gens.clone();
        reversed.reverse();
        let again = buchberger(&reversed, 200_000).unwrap();
        prop_assert_eq!(again.polys(), gb.polys());
    }

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(small_poly(), 1..3), p in small_poly()) {
        let Ok(gb) = buchberger(&gens, 200_000) else { return Ok(()); };
        let nf = gb.normal_form(&p);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&p.sub(&nf)));
    }

    #[test]
    fn format_parse_round_trip(p in small_poly()) {
        let r = ring(MonomialOrder::DegRevLex);
        prop_assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
    }

    #[test]
    fn membership_does_not_depend_on_the_order(gens in prop::collection::vec(small_poly(), 1..3), p in small_poly(), q in small_poly()) {
        let Ok(grevlex) = buchberger(&gens, 200_000) else { return Ok(()); };
        let lex_gens: Vec<MultiPoly> = gens.iter().map(|g| g.with_order(MonomialOrder::Lex)).collect();
        let Ok(lex) = buchberger(&lex_gens, 200_000) else { return Ok(()); };
        let member = gens[0].mul(&p).add(&q.mul(gens.last().unwrap()));
        prop_assert!(grevlex.contains(&member));
        prop_assert!(lex.contains(&member.with_order(MonomialOrder::Lex)));
        prop_assert_eq!(grevlex.contains(&p), lex.contains(&p.with_order(MonomialOrder::Lex)));
        prop_assert_eq!(grevlex.is_unit_ideal(), lex.is_unit_ideal());
    }
}
