use std::collections::BTreeMap;

use proptest::prelude::*;
use uqsl2::gammamod::*;
use uqsl2::ncore::GenSymbol;
use uqsl2::qfield::{parse_rational, RatFunc, Rational};

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

/// The actions written out at a numeric `q0`, kept separate from the library.
fn oracle(flavor: GammaFlavor, gen: GenSymbol, i: i64, j: i64, q0: &Rational) -> BTreeMap<(i64, i64), Rational> {
    let p = |e: i64| -> Rational {
        if e >= 0 {
            num_traits::pow(q0.clone(), e as usize)
        } else {
            num_traits::pow(q0.recip(), (-e) as usize)
        }
    };
    let d = |k: i64| p(k) - p(-k);
    let mut terms: Vec<((i64, i64), Rational)> = Vec::new();
    match (flavor, gen) {
        (_, GenSymbol::X) => terms.push(((i + 1, j), p(0))),
        (_, GenSymbol::XInv) => terms.push(((i - 1, j), p(0))),
        (GammaFlavor::Y, GenSymbol::Y) => {
            terms.push(((i, j - 1), p(2 * i - j) * d(j)));
            terms.push(((i - 1, j), -(p(i) * d(i))));
        }
        (GammaFlavor::Y, GenSymbol::Z) => {
            terms.push(((i, j + 1), p(-2 * i)));
            terms.push(((i - 1, j), p(-i) * d(i)));
        }
        (GammaFlavor::Z, GenSymbol::Y) => {
            terms.push(((i, j + 1), p(2 * i)));
            terms.push(((i - 1, j), -(p(i) * d(i))));
        }
        (GammaFlavor::Z, GenSymbol::Z) => {
            terms.push(((i - 1, j), p(-i) * d(i)));
            terms.push(((i, j - 1), -(p(j - 2 * i) * d(j))));
        }
        _ => unreachable!(),
    }
    terms
        .into_iter()
        .filter(|((_, j), c)| *j >= 0 && *c != Rational::from_integer(0.into()))
        .collect()
}

fn specialize(v: &WindowVector, q0: &Rational) -> BTreeMap<(i64, i64), Rational> {
    v.terms()
        .map(|(k, c)| (k, c.specialize(q0).unwrap()))
        .filter(|(_, c)| *c != Rational::from_integer(0.into()))
        .collect()
}

#[test]
fn null_vectors() {
    let u = WindowVector::basis(0, 0);
    assert!(act(GammaFlavor::Y, GenSymbol::Y, &u).unwrap().is_zero());
    assert!(act(GammaFlavor::Z, GenSymbol::Z, &u).unwrap().is_zero());
    for f in GammaFlavor::ALL {
        assert!(non_invertibility_witness(f).passed());
    }
}

#[test]
fn z_raises_u00() {
    let u = WindowVector::basis(0, 0);
    assert_eq!(act(GammaFlavor::Y, GenSymbol::Z, &u).unwrap(), WindowVector::basis(0, 1));
}

#[test]
fn x_shifts_are_inverse() {
    for f in GammaFlavor::ALL {
        for (i, j) in [(0, 0), (-3, 2), (5, 7)] {
            let b = WindowVector::basis(i, j);
            let shifted = act(f, GenSymbol::X, &b).unwrap();
            assert_eq!(shifted, WindowVector::basis(i + 1, j));
            assert_eq!(act(f, GenSymbol::XInv, &shifted).unwrap(), b);
        }
    }
}

#[test]
fn y_on_gamma_y_at_one_one() {
    // y u_11 = q (q - q^-1) u_10 - q (q - q^-1) u_01
    let got = act(GammaFlavor::Y, GenSymbol::Y, &WindowVector::basis(1, 1)).unwrap();
    let c = q(1) * (q(1) - q(-1));
    assert_eq!(got.coeff(1, 0), c);
    assert_eq!(got.coeff(0, 1), -c);
    assert_eq!(got.len(), 2);
}

#[test]
fn chevalley_generators_rejected() {
    let u = WindowVector::basis(0, 0);
    assert_eq!(act(GammaFlavor::Y, GenSymbol::E, &u), Err(GammaError::NotEquitable(GenSymbol::E)));
}

#[test]
fn monomial_vector_examples() {
    assert_eq!(monomial_vector(GammaFlavor::Y, 0, 0).unwrap(), WindowVector::basis(0, 0));
    assert_eq!(monomial_vector(GammaFlavor::Y, 2, 1).unwrap(), WindowVector::basis(2, 1));
    assert_eq!(monomial_vector(GammaFlavor::Z, -1, 2).unwrap(), WindowVector::basis(-1, 2));
    for f in GammaFlavor::ALL {
        let r = verify_monomial_vectors(f, 4, 4);
        assert_eq!(r.len(), 45);
        assert!(r.all_passed());
    }
}

#[test]
fn relations_on_window_4_4() {
    let r = verify_gamma_relations(GammaFlavor::Y, 4, 4);
    assert_eq!(r.len(), 45 * 4);
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(verify_gamma_relations(GammaFlavor::Z, 3, 3).all_passed());
}

#[test]
fn relations_on_window_6_6() {
    for f in GammaFlavor::ALL {
        let r = verify_gamma_relations(f, 6, 6);
        assert!(r.all_passed(), "{f}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn suite_counts() {
    let r = verify_gamma_suite(2, 2);
    // per flavor: 15 vectors x 4 relations + 15 monomials + 1 witness
    assert_eq!(r.len(), 2 * (60 + 15 + 1));
    assert!(r.all_passed());
}

#[test]
fn actions_agree_with_numeric_oracle() {
    let q0 = parse_rational("3/2").unwrap();
    for f in GammaFlavor::ALL {
        for g in [GenSymbol::X, GenSymbol::XInv, GenSymbol::Y, GenSymbol::Z] {
            for i in -3..=3 {
                for j in 0..=3u32 {
                    let got = act(f, g, &WindowVector::basis(i, j)).unwrap();
                    assert_eq!(specialize(&got, &q0), oracle(f, g, i, i64::from(j), &q0), "{f} {g} ({i},{j})");
                }
            }
        }
    }
}

fn window_vector() -> impl Strategy<Value = WindowVector> {
    prop::collection::vec((-4i64..=4, 0u32..=4, -3i64..=3, -2i64..=2), 1..5).prop_map(|ts| {
        let mut v = WindowVector::zero();
        for (i, j, c, e) in ts {
            v.add_term(i, i64::from(j), &(RatFunc::from_int(c) * q(e)));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_linear(a in window_vector(), b in window_vector(), flavor in prop::sample::select(GammaFlavor::ALL.to_vec()),
                        g in prop::sample::select(vec![GenSymbol::X, GenSymbol::XInv, GenSymbol::Y, GenSymbol::Z])) {
        let lhs = act(flavor, g, &a.add(&b)).unwrap();
        let rhs = act(flavor, g, &a).unwrap().add(&act(flavor, g, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn support_moves_by_at_most_one(v in window_vector(), flavor in prop::sample::select(GammaFlavor::ALL.to_vec()),
                                    g in prop::sample::select(vec![GenSymbol::Y, GenSymbol::Z])) {
        let out = act(flavor, g, &v).unwrap();
        for ((i, j), _) in out.terms() {
            prop_assert!(v.terms().any(|((a, b), _)| (a - i).abs() <= 1 && (b - j).abs() <= 1));
        }
    }
}
