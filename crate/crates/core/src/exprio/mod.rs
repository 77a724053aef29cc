//! Text front end: expression trees, the parser and the canonical printer.

mod ast;
mod parser;
mod printer;

pub use ast::{ExprAlgebra, NCExpr, PowError};
pub use parser::{parse, ParseError, ParseErrorKind};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncore::{GenSymbol, Presentation};
    use crate::qfield::{RatFunc, Rational};

    use proptest::prelude::*;

    fn s(c: RatFunc) -> NCExpr {
        NCExpr::Scalar(c)
    }
    fn g(x: GenSymbol) -> NCExpr {
        NCExpr::Gen(x)
    }

    #[test]
    fn parses_q_commutator() {
        let e = parse("q*x*y - q^-1*y*x", Presentation::Equitable).unwrap();
        let expected = NCExpr::Sum(vec![
            NCExpr::Product(vec![s(RatFunc::q()), g(GenSymbol::X), g(GenSymbol::Y)]),
            NCExpr::Neg(Box::new(NCExpr::Product(vec![
                s(RatFunc::q_pow(-1)),
                g(GenSymbol::Y),
                g(GenSymbol::X),
            ]))),
        ]);
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "q*x*y - q^-1*y*x");
    }

    #[test]
    fn parses_preimage_of_e() {
        let e = parse("(1 - x*z)*q^-1", Presentation::Equitable).unwrap();
        let expected = NCExpr::Product(vec![
            NCExpr::Sum(vec![
                s(RatFunc::one()),
                NCExpr::Neg(Box::new(NCExpr::Product(vec![g(GenSymbol::X), g(GenSymbol::Z)]))),
            ]),
            s(RatFunc::q_pow(-1)),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn rejects_negative_power_of_y() {
        let err = parse("y^-1", Presentation::Equitable).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NegativePower);
        assert_eq!(err.position, 2);
        assert_eq!(parse("x^-1", Presentation::Equitable).unwrap(), g(GenSymbol::XInv));
        assert_eq!(parse("k^-2", Presentation::Chevalley).unwrap(), NCExpr::Pow(Box::new(g(GenSymbol::K)), -2));
        assert!(parse("(e*f)^-1", Presentation::Chevalley).is_err());
    }

    #[test]
    fn presentation_hygiene() {
        let err = parse("k", Presentation::Equitable).unwrap_err();
        assert_eq!(err.position, 1);
        assert!(matches!(err.kind, ParseErrorKind::UnknownSymbol { .. }));
        let err = parse("2*x", Presentation::Chevalley).unwrap_err();
        assert_eq!(err.position, 3);
        assert!(parse("q", Presentation::Chevalley).is_ok());
        assert!(parse("q", Presentation::Equitable).is_ok());
    }

    #[test]
    fn syntax_error_positions() {
        let cases: &[(&str, usize)] = &[
            ("x*", 3),
            ("x + * y", 5),
            ("q^-1y", 5),
            ("x y", 3),
            ("xy", 1),
            ("(x + y", 7),
            ("x)", 2),
            ("x # y", 3),
            ("x/y", 2),
            ("x/0", 2),
            ("x^q", 3),
            ("x^2^-1", 3),
            ("", 1),
        ];
        for (text, pos) in cases {
            let err = parse(text, Presentation::Equitable).unwrap_err();
            assert_eq!(err.position, *pos, "{text:?}: {err}");
        }
    }

    #[test]
    fn scalar_subexpressions_fold() {
        let e = parse("(q - q^-1)^-1", Presentation::Chevalley).unwrap();
        let expected = RatFunc::q_minus_q_inverse().inverse().unwrap();
        assert_eq!(e, s(expected.clone()));
        assert_eq!(e.to_string(), "((q)/(q^2 - 1))");
        assert_eq!(parse("1/2", Presentation::Chevalley).unwrap(), s(Rational::new(1.into(), 2.into()).into()));
        assert_eq!(parse("x^2^3", Presentation::Equitable).unwrap(), NCExpr::Pow(Box::new(g(GenSymbol::X)), 8));
        // division folds into a scalar factor in place
        let d = parse("q*(1 - z*x)/(q - q^-1)", Presentation::Equitable).unwrap();
        match d {
            NCExpr::Product(fs) => {
                assert_eq!(fs.len(), 3);
                assert_eq!(fs[2], s(expected));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn prints_products() {
        let e = NCExpr::Product(vec![s(RatFunc::q()), g(GenSymbol::X), g(GenSymbol::Y)]);
        assert_eq!(e.to_string(), "q*x*y");
    }

    fn leaf(p: Presentation) -> impl Strategy<Value = NCExpr> {
        let gens: Vec<NCExpr> = p.generators().into_iter().map(NCExpr::Gen).collect();
        prop_oneof![
            (-3i64..=3, -3i64..=3).prop_map(|(c, e)| NCExpr::Scalar(
                RatFunc::from_int(c) * RatFunc::q_pow(e)
            )),
            (1i64..=4, 1i64..=5).prop_map(|(a, b)| NCExpr::Scalar(
                RatFunc::from_rational(Rational::new(a.into(), b.into())) + RatFunc::q()
            )),
            proptest::sample::select(gens),
        ]
    }

    fn tree(p: Presentation) -> impl Strategy<Value = NCExpr> {
        let invertible = match p {
            Presentation::Chevalley => GenSymbol::K,
            Presentation::Equitable => GenSymbol::X,
        };
        leaf(p).prop_recursive(6, 64, 4, move |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 1..4).prop_map(NCExpr::Sum),
                prop::collection::vec(inner.clone(), 1..4).prop_map(NCExpr::Product),
                inner.clone().prop_map(|x| NCExpr::Neg(Box::new(x))),
                (inner, 0i64..4).prop_map(|(b, e)| NCExpr::Pow(Box::new(b), e)),
                (-3i64..0).prop_map(move |e| NCExpr::Pow(Box::new(NCExpr::Gen(invertible)), e)),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn round_trip_equitable(e in tree(Presentation::Equitable)) {
            let text = e.to_string();
            let back = parse(&text, Presentation::Equitable).unwrap();
            prop_assert_eq!(back, e.fold_scalars(), "printed as {}", text);
        }

        #[test]
        fn round_trip_chevalley(e in tree(Presentation::Chevalley)) {
            let text = e.to_string();
            let back = parse(&text, Presentation::Chevalley).unwrap();
            prop_assert_eq!(&back, &e.fold_scalars(), "printed as {}", text);
            prop_assert_eq!(back.to_string(), e.fold_scalars().to_string());
        }
    }
}
