//! Text renderings of generator matrices: JSON, CSV and LaTeX.

use serde::Serialize;

use super::matrix::Matrix;
use crate::ncore::{GenSymbol, Presentation};
use crate::qfield::{Field, LaurentPoly, RatFunc};

/// The JSON record for one generator matrix of `L(n, eps)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixRecord {
    pub n: u32,
    pub eps: i8,
    pub basis: Presentation,
    pub generator: String,
    pub entries: Vec<Vec<String>>,
}

impl MatrixRecord {
    pub fn new(n: u32, eps: i8, basis: Presentation, generator: GenSymbol, m: &Matrix<RatFunc>) -> Self {
        MatrixRecord {
            n,
            eps,
            basis,
            generator: generator.name().to_string(),
            entries: string_entries(m),
        }
    }
}

pub fn string_entries<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

/// Rows of canonical renderings, comma separated with CSV quoting.
pub fn to_csv<F: Field>(m: &Matrix<F>) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in string_entries(m) {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

fn latex_laurent(p: &LaurentPoly) -> String {
    use num_traits::{One, Signed};
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        let coeff = if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        let unit = a.is_one();
        match e {
            0 => out.push_str(&coeff),
            _ => {
                if !unit {
                    out.push_str(&coeff);
                }
                out.push('q');
                if e != 1 {
                    out.push_str(&format!("^{{{e}}}"));
                }
            }
        }
    }
    out
}

/// LaTeX rendering of a scalar; non-polynomial values become `\frac`.
pub fn latex_scalar(c: &RatFunc) -> String {
    match c.as_laurent() {
        Some(p) => latex_laurent(p),
        None => format!("\\frac{{{}}}{{{}}}", latex_laurent(c.numerator()), latex_laurent(c.denominator())),
    }
}

/// A LaTeX `array` environment holding the matrix.
pub fn to_latex(m: &Matrix<RatFunc>) -> String {
    let mut out = format!("\\left(\\begin{{array}}{{{}}}\n", "c".repeat(m.cols()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(latex_scalar).collect();
        out.push_str(&row.join(" & "));
        if i + 1 < m.rows() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{array}\\right)\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::build_equitable;

    #[test]
    fn renderings_of_y_on_l1() {
        let y = build_equitable(1, 1).unwrap().matrix(GenSymbol::Y);
        assert_eq!(to_csv(&y), "q^-1,0\n-q + q^-1,q\n");
        assert_eq!(
            to_latex(&y),
            "\\left(\\begin{array}{cc}\nq^{-1} & 0 \\\\\n-q + q^{-1} & q\n\\end{array}\\right)\n"
        );
        let rec = MatrixRecord::new(1, 1, Presentation::Equitable, GenSymbol::Y, &y);
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"n":1,"eps":1,"basis":"equitable","generator":"y","entries":[["q^-1","0"],["-q + q^-1","q"]]}"#
        );
    }

    #[test]
    fn latex_fractions() {
        let c = RatFunc::c_factor();
        assert_eq!(latex_scalar(&c), "\\frac{q}{q^{2} - 1}");
        let h = RatFunc::from_rational(crate::qfield::Rational::new(1.into(), 2.into())) * RatFunc::q_pow(-3);
        assert_eq!(latex_scalar(&h), "\\frac{1}{2}q^{-3}");
    }
}
