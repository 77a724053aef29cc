use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::vector::WindowVector;
use crate::ncore::GenSymbol;
use crate::qfield::RatFunc;
use crate::report::{Entry, Subject, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("generator `{0}` does not act on the equitable modules")]
    NotEquitable(GenSymbol),
    #[error("x^{i} {gen}^{j} applied to the (0,0) vector gives {got}")]
    MonomialMismatch { i: i64, j: u32, gen: GenSymbol, got: String },
}

/// The two infinite-dimensional modules: on `Gamma_y` the generator `y` has a
/// null vector, on `Gamma_z` the generator `z` does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum GammaFlavor {
    #[serde(rename = "gammaY")]
    Y,
    #[serde(rename = "gammaZ")]
    Z,
}

impl GammaFlavor {
    pub const ALL: [GammaFlavor; 2] = [GammaFlavor::Y, GammaFlavor::Z];

    /// The generator that is not invertible on this module.
    pub fn null_generator(self) -> GenSymbol {
        match self {
            GammaFlavor::Y => GenSymbol::Y,
            GammaFlavor::Z => GenSymbol::Z,
        }
    }

    /// The generator raising `j`: `z` on `Gamma_y`, `y` on `Gamma_z`.
    pub fn raising_generator(self) -> GenSymbol {
        match self {
            GammaFlavor::Y => GenSymbol::Z,
            GammaFlavor::Z => GenSymbol::Y,
        }
    }

    fn tag(self) -> char {
        match self {
            GammaFlavor::Y => 'y',
            GammaFlavor::Z => 'z',
        }
    }

    fn basis_letter(self) -> char {
        match self {
            GammaFlavor::Y => 'u',
            GammaFlavor::Z => 'v',
        }
    }
}

impl fmt::Display for GammaFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gamma_{}", self.tag())
    }
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

/// `q^k - q^-k`
fn diff(k: i64) -> RatFunc {
    q(k) - q(-k)
}

fn act_basis(flavor: GammaFlavor, gen: GenSymbol, i: i64, j: i64, c: &RatFunc, out: &mut WindowVector) {
    match (flavor, gen) {
        (_, GenSymbol::X) => out.add_term(i + 1, j, c),
        (_, GenSymbol::XInv) => out.add_term(i - 1, j, c),
        (GammaFlavor::Y, GenSymbol::Y) => {
            out.add_term(i, j - 1, &(c * &(q(2 * i - j) * diff(j))));
            out.add_term(i - 1, j, &(c * &(-(q(i) * diff(i)))));
        }
        (GammaFlavor::Y, GenSymbol::Z) => {
            out.add_term(i, j + 1, &(c * &q(-2 * i)));
            out.add_term(i - 1, j, &(c * &(q(-i) * diff(i))));
        }
        (GammaFlavor::Z, GenSymbol::Y) => {
            out.add_term(i, j + 1, &(c * &q(2 * i)));
            out.add_term(i - 1, j, &(c * &(-(q(i) * diff(i)))));
        }
        (GammaFlavor::Z, GenSymbol::Z) => {
            out.add_term(i - 1, j, &(c * &(q(-i) * diff(i))));
            out.add_term(i, j - 1, &(c * &(-(q(j - 2 * i) * diff(j)))));
        }
        _ => unreachable!("checked by act"),
    }
}

/// The action of an equitable generator, extended linearly.
pub fn act(flavor: GammaFlavor, gen: GenSymbol, v: &WindowVector) -> Result<WindowVector, GammaError> {
    if !matches!(gen, GenSymbol::X | GenSymbol::XInv | GenSymbol::Y | GenSymbol::Z) {
        return Err(GammaError::NotEquitable(gen));
    }
    let mut out = WindowVector::zero();
    for ((i, j), c) in v.terms() {
        act_basis(flavor, gen, i, j, c, &mut out);
    }
    Ok(out)
}

/// Applies a word of generators right to left: `word = [g1, g2]` gives `g1 (g2 v)`.
pub fn act_word(flavor: GammaFlavor, word: &[GenSymbol], v: &WindowVector) -> Result<WindowVector, GammaError> {
    word.iter().rev().try_fold(v.clone(), |acc, &g| act(flavor, g, &acc))
}

fn q_bracket(flavor: GammaFlavor, a: GenSymbol, b: GenSymbol, v: &WindowVector) -> WindowVector {
    let ab = act_word(flavor, &[a, b], v).expect("equitable generators");
    let ba = act_word(flavor, &[b, a], v).expect("equitable generators");
    ab.scale(&q(1)).sub(&ba.scale(&q(-1))).scale(&RatFunc::c_factor())
}

/// The four defining relations applied to the basis vector `(i, j)`.
pub fn gamma_relations_at(flavor: GammaFlavor, i: i64, j: u32) -> Vec<Entry> {
    use GenSymbol::{XInv, X, Y, Z};
    let subject = Subject::Gamma { flavor: flavor.tag(), i, j: i64::from(j) };
    let b = WindowVector::basis(i, j);
    let mut out = Vec::with_capacity(4);
    let xxi = act_word(flavor, &[X, XInv], &b).expect("equitable generators");
    let xix = act_word(flavor, &[XInv, X], &b).expect("equitable generators");
    out.push(Entry::check("gamma.x*x^-1=x^-1*x=1", subject.clone(), xxi == b && xix == b, || {
        format!("x*x^-1 gives {xxi}, x^-1*x gives {xix}")
    }));
    for (name, l, r) in [("x*y", X, Y), ("y*z", Y, Z), ("z*x", Z, X)] {
        let got = q_bracket(flavor, l, r, &b);
        out.push(Entry::check(format!("gamma.q-bracket({name})=1"), subject.clone(), got == b, || {
            format!("gives {got}")
        }));
    }
    out
}

/// Every relation on every basis vector with `|i| <= i_max`, `0 <= j <= j_max`,
/// ordered by `(i, j, relation)`.
pub fn verify_gamma_relations(flavor: GammaFlavor, i_max: u32, j_max: u32) -> VerificationReport {
    let i_max = i64::from(i_max);
    (-i_max..=i_max)
        .flat_map(|i| (0..=j_max).flat_map(move |j| gamma_relations_at(flavor, i, j)))
        .collect()
}

/// `x^i g^j` applied to the `(0, 0)` vector, with `g` the raising generator;
/// the result must be the basis vector `(i, j)`.
pub fn monomial_vector(flavor: GammaFlavor, i: i64, j: u32) -> Result<WindowVector, GammaError> {
    let shift = if i >= 0 { GenSymbol::X } else { GenSymbol::XInv };
    let mut word = vec![shift; i.unsigned_abs() as usize];
    word.extend(std::iter::repeat_n(flavor.raising_generator(), j as usize));
    let got = act_word(flavor, &word, &WindowVector::basis(0, 0))?;
    if got != WindowVector::basis(i, j) {
        return Err(GammaError::MonomialMismatch {
            i,
            j,
            gen: flavor.raising_generator(),
            got: got.to_string(),
        });
    }
    Ok(got)
}

/// The monomial identity for every `|i| <= i_max`, `0 <= j <= j_max`.
pub fn verify_monomial_vectors(flavor: GammaFlavor, i_max: u32, j_max: u32) -> VerificationReport {
    let i_max = i64::from(i_max);
    let letter = flavor.basis_letter();
    let g = flavor.raising_generator();
    (-i_max..=i_max)
        .flat_map(|i| (0..=j_max).map(move |j| (i, j)))
        .map(|(i, j)| {
            let subject = Subject::Gamma { flavor: flavor.tag(), i, j: i64::from(j) };
            let id = format!("gamma.monomial.{letter}(i,j)=x^i*{g}^j*{letter}(0,0)");
            match monomial_vector(flavor, i, j) {
                Ok(_) => Entry::pass(id, subject),
                Err(e) => Entry::fail(id, subject, e.to_string()),
            }
        })
        .collect()
}

/// The null vector `(0, 0)` of `y` on `Gamma_y` (of `z` on `Gamma_z`).
pub fn non_invertibility_witness(flavor: GammaFlavor) -> Entry {
    let g = flavor.null_generator();
    let letter = flavor.basis_letter();
    let w = WindowVector::basis(0, 0);
    let image = act(flavor, g, &w).expect("equitable generator");
    Entry::check(
        format!("gamma.null-vector.{g}*{letter}(0,0)=0"),
        Subject::Gamma { flavor: flavor.tag(), i: 0, j: 0 },
        !w.is_zero() && image.is_zero(),
        || format!("{g} maps {letter}(0,0) to {image}"),
    )
}

/// Relations and monomial identities on the window, plus the null vector, for
/// both modules.
pub fn verify_gamma_suite(i_max: u32, j_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    for flavor in GammaFlavor::ALL {
        report.extend(verify_gamma_relations(flavor, i_max, j_max));
        report.extend(verify_monomial_vectors(flavor, i_max, j_max));
        report.push(non_invertibility_witness(flavor));
    }
    report
}
