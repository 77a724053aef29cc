use proptest::prelude::*;
use uqsl2::exprio::{parse, NCExpr};
use uqsl2::ncore::*;
use uqsl2::qfield::{LaurentPoly, RatFunc, Rational};

fn chev(s: &str) -> AlgebraElement {
    normalize_chevalley(&parse(s, Presentation::Chevalley).unwrap()).unwrap()
}

fn equi(s: &str) -> AlgebraElement {
    from_equitable(&parse(s, Presentation::Equitable).unwrap()).unwrap()
}

/// `(q - q^-1)^-1` built by hand from numerator and denominator.
fn c_oracle() -> RatFunc {
    RatFunc::new(
        LaurentPoly::q_pow(1),
        LaurentPoly::from_terms([(2, Rational::from_integer(1.into())), (0, Rational::from_integer((-1).into()))]),
    )
    .unwrap()
}

#[test]
fn k_times_inverse_is_one() {
    assert_eq!(chev("k*k^-1"), AlgebraElement::one());
    assert_eq!(chev("k^-1*k"), AlgebraElement::one());
    assert_eq!(equi("x*x^-1"), AlgebraElement::one());
}

#[test]
fn ef_rewrites_to_fe_plus_cartan_part() {
    let c = c_oracle();
    let expected = AlgebraElement::from_terms([
        (PbwMonomial::new(1, 0, 1), RatFunc::one()),
        (PbwMonomial::new(0, 1, 0), c.clone()),
        (PbwMonomial::new(0, -1, 0), -c),
    ]);
    assert_eq!(chev("e*f"), expected);
}

#[test]
fn ek_rewrites_with_q_minus_two() {
    assert_eq!(chev("e*k"), AlgebraElement::monomial(PbwMonomial::new(0, 1, 1), RatFunc::q_pow(-2)));
    assert_eq!(chev("e*k^-1"), AlgebraElement::monomial(PbwMonomial::new(0, -1, 1), RatFunc::q_pow(2)));
    assert_eq!(chev("k*f"), AlgebraElement::monomial(PbwMonomial::new(1, 1, 0), RatFunc::q_pow(-2)));
    assert_eq!(chev("k^-1*f"), AlgebraElement::monomial(PbwMonomial::new(1, -1, 0), RatFunc::q_pow(2)));
}

#[test]
fn scalars_land_on_the_empty_monomial() {
    assert_eq!(chev("q^2 - 1"), AlgebraElement::scalar(RatFunc::q_pow(2) - RatFunc::one()));
    assert_eq!(chev("0*e"), AlgebraElement::zero());
}

#[test]
fn y_maps_to_k_inverse_plus_f() {
    let expected = AlgebraElement::from_terms([
        (PbwMonomial::new(0, -1, 0), RatFunc::one()),
        (PbwMonomial::new(1, 0, 0), RatFunc::q() - RatFunc::q_pow(-1)),
    ]);
    assert_eq!(equi("y"), expected);
}

#[test]
fn equitable_relations_hold() {
    assert_eq!(equi("(q*x*y - q^-1*y*x)/(q - q^-1)"), AlgebraElement::one());
    assert_eq!(equi("(q*y*z - q^-1*z*y)/(q - q^-1)"), AlgebraElement::one());
    assert_eq!(equi("(q*z*x - q^-1*x*z)/(q - q^-1)"), AlgebraElement::one());
}

#[test]
fn inverse_map_images() {
    assert_eq!(to_equitable_generators(GenSymbol::K), NCExpr::Gen(GenSymbol::X));
    let f = parse("(y - x^-1)*(q - q^-1)^-1", Presentation::Equitable).unwrap();
    assert_eq!(to_equitable_generators(GenSymbol::F), f);
    let e = parse("(1 - x*z)*q^-1*(q - q^-1)^-1", Presentation::Equitable).unwrap();
    assert_eq!(to_equitable_generators(GenSymbol::E).fold_scalars(), e);
    assert_eq!(from_equitable(&to_equitable_generators(GenSymbol::F)).unwrap(), AlgebraElement::f());
}

#[test]
fn presentation_iso_report() {
    let r = verify_presentation_iso();
    assert_eq!(r.len(), 8);
    assert!(r.all_passed(), "{r:?}");
}

#[test]
fn wrong_presentation_is_rejected() {
    let e = parse("x", Presentation::Equitable).unwrap();
    assert!(matches!(normalize_chevalley(&e), Err(NcoreError::WrongPresentation { .. })));
    let e = parse("k", Presentation::Chevalley).unwrap();
    assert!(from_equitable(&e).is_err());
}

#[test]
fn n_elements() {
    assert_eq!(n_element(Axis::Y).unwrap(), AlgebraElement::e());
    let nz = n_element(Axis::Z).unwrap();
    assert_eq!(nz, AlgebraElement::monomial(PbwMonomial::new(1, 1, 0), -RatFunc::q_pow(-1)));
    assert_eq!(nz, chev("-q*k*f"));
    let (l, r) = n_element_expressions(Axis::X);
    assert_eq!(from_equitable(&l).unwrap(), from_equitable(&r).unwrap());
    assert_eq!(n_element(Axis::X).unwrap(), equi("q*(1 - y*z)/(q - q^-1)"));
}

#[test]
fn n_commutation_report() {
    let r = verify_n_commutation();
    assert_eq!(r.len(), 6);
    assert!(r.all_passed(), "{r:?}");
    // with n_y = e the first identity is k e = q^2 e k
    assert_eq!(chev("k*e"), chev("q^2*e*k"));
}

#[test]
fn automorphism_examples() {
    let id = apply_automorphism(&chev("e*f + q*k^-2*e^2"), 0, &RatFunc::one()).unwrap();
    assert_eq!(id, chev("e*f + q*k^-2*e^2"));
    let img = apply_automorphism(&AlgebraElement::e(), 1, &RatFunc::q()).unwrap();
    assert_eq!(img, AlgebraElement::monomial(PbwMonomial::new(0, 1, 1), RatFunc::q_pow(-1)));
    assert!(matches!(
        apply_automorphism(&AlgebraElement::e(), 1, &RatFunc::zero()),
        Err(NcoreError::ZeroAlpha)
    ));
    let comm = chev("e*f - f*e");
    for (i, alpha) in [(1, RatFunc::q()), (-2, RatFunc::from_int(3)), (3, RatFunc::q() + RatFunc::one())] {
        assert_eq!(apply_automorphism(&comm, i, &alpha).unwrap(), chev("(k - k^-1)/(q - q^-1)"));
        assert!(Automorphism::new(i, alpha).unwrap().verify().all_passed());
    }
}

#[test]
fn normal_form_rendering() {
    assert_eq!(n_element(Axis::Z).unwrap().to_string(), "-q^-1*f*k");
    assert_eq!(chev("e*f").to_string(), "-((q)/(q^2 - 1))*k^-1 + ((q)/(q^2 - 1))*k + f*e");
    // rendering is parseable and round-trips
    let x = equi("y*z*x + x^-1*y");
    assert_eq!(chev(&x.to_string()), x);
}

#[test]
fn degree_bound_for_powers_of_ef() {
    for m in 0..=6u32 {
        let p = chev("e*f").pow(m);
        if let Some((lo, hi)) = p.k_range() {
            assert!(-(m as i64) <= lo && hi <= m as i64, "m={m}: {lo}..{hi}");
        }
        for (mono, _) in p.terms() {
            assert!(mono.a <= m && mono.c <= m && mono.a == mono.c);
        }
    }
}

fn gen_expr(p: Presentation) -> impl Strategy<Value = NCExpr> {
    let gens: Vec<NCExpr> = p.generators().into_iter().map(NCExpr::Gen).collect();
    let leaf = prop_oneof![
        proptest::sample::select(gens),
        (-2i64..=2, -2i64..=2).prop_map(|(c, e)| NCExpr::Scalar(&RatFunc::from_int(c) * &RatFunc::q_pow(e))),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(NCExpr::Sum),
            prop::collection::vec(inner, 1..3).prop_map(NCExpr::Product),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_multiplicative(a in gen_expr(Presentation::Equitable), b in gen_expr(Presentation::Equitable)) {
        let ab = NCExpr::Product(vec![a.clone(), b.clone()]);
        let lhs = from_equitable(&ab).unwrap();
        let rhs = &from_equitable(&a).unwrap() * &from_equitable(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative(
        a in gen_expr(Presentation::Chevalley),
        b in gen_expr(Presentation::Chevalley),
        c in gen_expr(Presentation::Chevalley),
    ) {
        let (a, b, c) = (normalize_chevalley(&a).unwrap(), normalize_chevalley(&b).unwrap(), normalize_chevalley(&c).unwrap());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn automorphism_is_multiplicative(
        a in gen_expr(Presentation::Chevalley),
        b in gen_expr(Presentation::Chevalley),
        i in -2i64..=2,
        alpha in 1i64..=3,
    ) {
        let (a, b) = (normalize_chevalley(&a).unwrap(), normalize_chevalley(&b).unwrap());
        let alpha = &RatFunc::from_int(alpha) * &RatFunc::q();
        let phi = Automorphism::new(i, alpha).unwrap();
        prop_assert_eq!(phi.apply(&(&a * &b)), &phi.apply(&a) * &phi.apply(&b));
    }

    #[test]
    fn rendering_round_trips(a in gen_expr(Presentation::Chevalley)) {
        let x = normalize_chevalley(&a).unwrap();
        prop_assert_eq!(chev(&x.to_string()), x);
    }
}

#[test]
fn confluence_report_covers_all_pairs() {
    let r = uqsl2::ncore::rewrite::verify_confluence(&[-2, -1, 1, 2]);
    assert_eq!(r.len(), 100);
    assert!(r.all_passed());
    assert!(r.entries().iter().any(|e| e.check_id == "rewrite.critical-pair.e*k^-1*f"));
}

#[test]
fn n_element_report() {
    let r = verify_n_elements();
    assert_eq!(r.len(), 5);
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
}
