use std::fmt;

use thiserror::Error;

use super::pbw::{AlgebraElement, PbwMonomial};
use super::{GenSymbol, Presentation};
use crate::exprio::{ExprAlgebra, NCExpr};
use crate::qfield::RatFunc;
use crate::report::{Entry, Subject, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NcoreError {
    #[error("symbol '{symbol}' does not belong to the {expected} presentation")]
    WrongPresentation { symbol: GenSymbol, expected: Presentation },
    #[error("negative power of a non-invertible expression")]
    NonInvertible,
    #[error("automorphism parameter alpha must be nonzero")]
    ZeroAlpha,
    #[error("the two defining expressions of n_{axis} normalize differently: {left} vs {right}")]
    NElementMismatch { axis: Axis, left: String, right: String },
}

/// One of the three equitable generators `x`, `y`, `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// The cyclic successor `x -> y -> z -> x`.
    pub fn next(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::Z,
            Axis::Z => Axis::X,
        }
    }

    pub fn prev(self) -> Axis {
        self.next().next()
    }

    pub fn symbol(self) -> GenSymbol {
        match self {
            Axis::X => GenSymbol::X,
            Axis::Y => GenSymbol::Y,
            Axis::Z => GenSymbol::Z,
        }
    }

    pub fn parse(s: &str) -> Option<Axis> {
        match s {
            "x" => Some(Axis::X),
            "y" => Some(Axis::Y),
            "z" => Some(Axis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol().name())
    }
}

/// Image of an equitable generator under the map into the Chevalley form.
pub fn equitable_image(g: GenSymbol) -> Option<AlgebraElement> {
    let c = RatFunc::q_minus_q_inverse();
    Some(match g {
        GenSymbol::X => AlgebraElement::k_pow(1),
        GenSymbol::XInv => AlgebraElement::k_pow(-1),
        GenSymbol::Y => &AlgebraElement::k_pow(-1) + &AlgebraElement::f().scale(&c),
        GenSymbol::Z => {
            let ke = AlgebraElement::basis(PbwMonomial::new(0, -1, 1));
            &AlgebraElement::k_pow(-1) - &ke.scale(&(&RatFunc::q() * &c))
        }
        _ => return None,
    })
}

/// Interprets expressions in PBW form, accepting symbols of the given
/// presentations.
struct Normalizer {
    accept: &'static [Presentation],
}

impl ExprAlgebra for Normalizer {
    type Value = AlgebraElement;
    type Error = NcoreError;

    fn scalar(&self, c: &RatFunc) -> AlgebraElement {
        AlgebraElement::scalar(c.clone())
    }

    fn generator(&self, g: GenSymbol) -> Result<AlgebraElement, NcoreError> {
        if !self.accept.contains(&g.presentation()) {
            return Err(NcoreError::WrongPresentation {
                symbol: g,
                expected: self.accept[0],
            });
        }
        Ok(AlgebraElement::chevalley_generator(g)
            .or_else(|| equitable_image(g))
            .expect("every symbol has an image"))
    }

    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a + b
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a * b
    }

    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        -a
    }

    fn non_invertible(&self) -> NcoreError {
        NcoreError::NonInvertible
    }
}

/// PBW normal form of an expression in the Chevalley generators.
pub fn normalize_chevalley(expr: &NCExpr) -> Result<AlgebraElement, NcoreError> {
    expr.eval(&Normalizer {
        accept: &[Presentation::Chevalley],
    })
}

/// PBW normal form of an expression in the equitable generators.
pub fn from_equitable(expr: &NCExpr) -> Result<AlgebraElement, NcoreError> {
    expr.eval(&Normalizer {
        accept: &[Presentation::Equitable],
    })
}

/// Normal form of an expression in either presentation.
pub fn normalize(expr: &NCExpr, presentation: Presentation) -> Result<AlgebraElement, NcoreError> {
    match presentation {
        Presentation::Chevalley => normalize_chevalley(expr),
        Presentation::Equitable => from_equitable(expr),
    }
}

/// Preimage of a Chevalley generator in the equitable generators.
///
/// Equitable symbols are returned unchanged.
pub fn to_equitable_generators(g: GenSymbol) -> NCExpr {
    let c = NCExpr::Scalar(RatFunc::c_factor());
    let gen = NCExpr::Gen;
    match g {
        GenSymbol::K => gen(GenSymbol::X),
        GenSymbol::KInv => gen(GenSymbol::XInv),
        GenSymbol::F => NCExpr::Product(vec![
            NCExpr::Sum(vec![gen(GenSymbol::Y), NCExpr::Neg(Box::new(gen(GenSymbol::XInv)))]),
            c,
        ]),
        GenSymbol::E => NCExpr::Product(vec![
            NCExpr::Sum(vec![
                NCExpr::Scalar(RatFunc::one()),
                NCExpr::Neg(Box::new(NCExpr::Product(vec![gen(GenSymbol::X), gen(GenSymbol::Z)]))),
            ]),
            NCExpr::Scalar(RatFunc::q_pow(-1)),
            c,
        ]),
        other => gen(other),
    }
}

fn eq_gen(g: GenSymbol) -> AlgebraElement {
    equitable_image(g).expect("equitable symbol")
}

/// `(q a b - q^-1 b a) / (q - q^-1)`.
fn q_bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let lhs = &(a * b).scale(&RatFunc::q()) - &(b * a).scale(&RatFunc::q_pow(-1));
    lhs.scale(&RatFunc::c_factor())
}

/// The map into the Chevalley form respects the equitable relations, and the
/// two maps compose to the identity on each Chevalley generator.
pub fn verify_presentation_iso() -> VerificationReport {
    let mut report = VerificationReport::new();
    let one = AlgebraElement::one();
    let (x, xi) = (eq_gen(GenSymbol::X), eq_gen(GenSymbol::XInv));
    let xx = (&x * &xi, &xi * &x);
    report.push(Entry::check("iso.relation.x*x^-1=x^-1*x=1", Subject::Algebra, xx.0 == one && xx.1 == one, || {
        format!("x*x^-1 = {}, x^-1*x = {}", xx.0, xx.1)
    }));
    for (a, b) in [(Axis::X, Axis::Y), (Axis::Y, Axis::Z), (Axis::Z, Axis::X)] {
        let v = q_bracket(&eq_gen(a.symbol()), &eq_gen(b.symbol()));
        report.push(Entry::check(
            format!("iso.relation.(q*{a}*{b} - q^-1*{b}*{a})/(q - q^-1)=1"),
            Subject::Algebra,
            v == one,
            || format!("normalizes to {v}"),
        ));
    }
    for g in [GenSymbol::K, GenSymbol::KInv, GenSymbol::E, GenSymbol::F] {
        let back = from_equitable(&to_equitable_generators(g));
        let want = AlgebraElement::chevalley_generator(g).unwrap();
        let ok = back.as_ref() == Ok(&want);
        report.push(Entry::check(format!("iso.composite.{g}"), Subject::Algebra, ok, || match &back {
            Ok(v) => format!("round trip gives {v}"),
            Err(e) => e.to_string(),
        }));
    }
    report
}

/// The automorphism `k -> k`, `e -> alpha e k^i`, `f -> alpha^-1 k^-i f`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    i: i64,
    alpha: RatFunc,
    alpha_inv: RatFunc,
}

impl Automorphism {
    pub fn new(i: i64, alpha: RatFunc) -> Result<Self, NcoreError> {
        let alpha_inv = alpha.inverse().map_err(|_| NcoreError::ZeroAlpha)?;
        Ok(Automorphism { i, alpha, alpha_inv })
    }

    pub fn image_e(&self) -> AlgebraElement {
        let e = AlgebraElement::e();
        (&e * &AlgebraElement::k_pow(self.i)).scale(&self.alpha)
    }

    pub fn image_f(&self) -> AlgebraElement {
        let f = AlgebraElement::f();
        (&AlgebraElement::k_pow(-self.i) * &f).scale(&self.alpha_inv)
    }

    pub fn apply(&self, elem: &AlgebraElement) -> AlgebraElement {
        let (ie, if_) = (self.image_e(), self.image_f());
        let mut out = AlgebraElement::zero();
        for (m, c) in elem.terms() {
            let img = &(&if_.pow(m.a) * &AlgebraElement::k_pow(m.b)) * &ie.pow(m.c);
            out = &out + &img.scale(c);
        }
        out
    }

    /// The generator images satisfy the defining relations.
    pub fn verify(&self) -> VerificationReport {
        let k = AlgebraElement::k_pow(1);
        let ki = AlgebraElement::k_pow(-1);
        let (e, f) = (self.image_e(), self.image_f());
        let q2 = RatFunc::q_pow(2);
        let qm2 = RatFunc::q_pow(-2);
        let checks: [(&str, AlgebraElement, AlgebraElement); 4] = [
            ("k*k^-1=1", &k * &ki, AlgebraElement::one()),
            ("k*e=q^2*e*k", &k * &e, (&e * &k).scale(&q2)),
            ("k*f=q^-2*f*k", &k * &f, (&f * &k).scale(&qm2)),
            (
                "e*f-f*e=(k-k^-1)/(q-q^-1)",
                &(&e * &f) - &(&f * &e),
                (&k - &ki).scale(&RatFunc::c_factor()),
            ),
        ];
        checks
            .into_iter()
            .map(|(name, l, r)| {
                Entry::check(
                    format!("automorphism(i={}, alpha={}).{name}", self.i, self.alpha),
                    Subject::Algebra,
                    l == r,
                    || format!("{l} vs {r}"),
                )
            })
            .collect()
    }
}

/// Applies the automorphism with parameters `(i, alpha)`.
pub fn apply_automorphism(elem: &AlgebraElement, i: i64, alpha: &RatFunc) -> Result<AlgebraElement, NcoreError> {
    Ok(Automorphism::new(i, alpha.clone())?.apply(elem))
}

/// The two defining expressions of `n_axis`: with `(a, b)` the cyclic
/// successors of `axis`, `q(1 - ab)/(q - q^-1)` and `q^-1(1 - ba)/(q - q^-1)`.
pub fn n_element_expressions(axis: Axis) -> (NCExpr, NCExpr) {
    let (a, b) = (NCExpr::Gen(axis.next().symbol()), NCExpr::Gen(axis.prev().symbol()));
    let build = |scale: RatFunc, l: &NCExpr, r: &NCExpr| {
        NCExpr::Product(vec![
            NCExpr::Scalar(&scale * &RatFunc::c_factor()),
            NCExpr::Sum(vec![
                NCExpr::Scalar(RatFunc::one()),
                NCExpr::Neg(Box::new(NCExpr::Product(vec![l.clone(), r.clone()]))),
            ]),
        ])
    };
    (build(RatFunc::q(), &a, &b), build(RatFunc::q_pow(-1), &b, &a))
}

/// `n_axis` in PBW form, after checking that both defining expressions agree.
pub fn n_element(axis: Axis) -> Result<AlgebraElement, NcoreError> {
    let (l, r) = n_element_expressions(axis);
    let (l, r) = (from_equitable(&l)?, from_equitable(&r)?);
    if l != r {
        return Err(NcoreError::NElementMismatch {
            axis,
            left: l.to_string(),
            right: r.to_string(),
        });
    }
    Ok(l)
}

/// Both defining expressions of each `n` element agree, and the preimages of
/// `n_y`, `n_z` are `e` and `-q k f`.
pub fn verify_n_elements() -> VerificationReport {
    let mut report = VerificationReport::new();
    for a in Axis::ALL {
        let id = format!("n-element.n_{a}.expressions-agree");
        report.push(match n_element(a) {
            Ok(_) => Entry::pass(id, Subject::Algebra),
            Err(e) => Entry::fail(id, Subject::Algebra, e.to_string()),
        });
    }
    let minus_qkf = (&AlgebraElement::k_pow(1) * &AlgebraElement::f()).scale(&-RatFunc::q());
    for (axis, want, name) in [(Axis::Y, AlgebraElement::e(), "e"), (Axis::Z, minus_qkf, "-q*k*f")] {
        let id = format!("n-element.n_{axis}={name}");
        report.push(match n_element(axis) {
            Ok(n) => Entry::check(id, Subject::Algebra, n == want, || format!("n_{axis} = {n}, expected {want}")),
            Err(e) => Entry::fail(id, Subject::Algebra, e.to_string()),
        });
    }
    report
}

/// `a n_b = q^2 n_b a` for `b` the successor of `a`, and `a n_b = q^-2 n_b a`
/// for `b` the predecessor.
pub fn verify_n_commutation() -> VerificationReport {
    let mut report = VerificationReport::new();
    for a in Axis::ALL {
        let g = eq_gen(a.symbol());
        for (b, exp) in [(a.next(), 2), (a.prev(), -2)] {
            let id = format!("n-commutation.{a}*n_{b}=q^{exp}*n_{b}*{a}");
            match n_element(b) {
                Ok(n) => {
                    let diff = &(&g * &n) - &(&n * &g).scale(&RatFunc::q_pow(exp));
                    report.push(Entry::check(id, Subject::Algebra, diff.is_zero(), || {
                        format!("difference {diff}")
                    }));
                }
                Err(e) => report.push(Entry::fail(id, Subject::Algebra, e.to_string())),
            }
        }
    }
    report
}
