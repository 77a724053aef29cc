use std::fmt;

use num_traits::{One, Signed};

use super::ast::NCExpr;
use crate::qfield::RatFunc;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Top,
    /// A summand, or the operand of a unary minus.
    Term,
    /// A factor of a product.
    Factor,
    /// The base of a power.
    Base,
}

/// A scalar that can be printed without parentheses: `c*q^e` with a positive
/// integer coefficient.
fn bare_scalar(c: &RatFunc) -> bool {
    c.as_laurent()
        .and_then(|p| p.as_monomial())
        .is_some_and(|(coeff, _)| coeff.is_positive() && coeff.denom().is_one())
}

fn needs_parens(e: &NCExpr, slot: Slot) -> bool {
    match (e, slot) {
        (_, Slot::Top) => false,
        (NCExpr::Scalar(c), Slot::Base) => bare_scalar(c),
        (NCExpr::Scalar(_), _) => false,
        (NCExpr::Sum(_) | NCExpr::Neg(_), _) => true,
        (NCExpr::Product(_), Slot::Factor | Slot::Base) => true,
        (NCExpr::Gen(g), Slot::Base) => g.is_inverse_symbol(),
        (NCExpr::Pow(..), Slot::Base) => true,
        _ => false,
    }
}

fn write_in(f: &mut fmt::Formatter<'_>, e: &NCExpr, slot: Slot) -> fmt::Result {
    if needs_parens(e, slot) {
        f.write_str("(")?;
        write_bare(f, e)?;
        f.write_str(")")
    } else {
        write_bare(f, e)
    }
}

fn write_bare(f: &mut fmt::Formatter<'_>, e: &NCExpr) -> fmt::Result {
    match e {
        NCExpr::Scalar(c) if bare_scalar(c) => write!(f, "{c}"),
        NCExpr::Scalar(c) => write!(f, "({c})"),
        NCExpr::Gen(g) => f.write_str(g.name()),
        NCExpr::Sum(ts) => {
            for (i, t) in ts.iter().enumerate() {
                match (i, t) {
                    (0, NCExpr::Neg(x)) => {
                        f.write_str("-")?;
                        write_in(f, x, Slot::Term)?;
                    }
                    (0, t) => write_in(f, t, Slot::Term)?,
                    (_, NCExpr::Neg(x)) => {
                        f.write_str(" - ")?;
                        write_in(f, x, Slot::Term)?;
                    }
                    (_, t) => {
                        f.write_str(" + ")?;
                        write_in(f, t, Slot::Term)?;
                    }
                }
            }
            Ok(())
        }
        NCExpr::Product(fs) => {
            for (i, x) in fs.iter().enumerate() {
                if i > 0 {
                    f.write_str("*")?;
                }
                write_in(f, x, Slot::Factor)?;
            }
            Ok(())
        }
        NCExpr::Pow(b, e) => {
            write_in(f, b, Slot::Base)?;
            write!(f, "^{e}")
        }
        NCExpr::Neg(x) => {
            f.write_str("-")?;
            write_in(f, x, Slot::Term)
        }
    }
}

impl fmt::Display for NCExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_in(f, self, Slot::Top)
    }
}
