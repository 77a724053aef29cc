//! Exact arithmetic in the field of rational functions in `q` over the rationals.
//!
//! Everything above this module works with [`RatFunc`] coefficients. The
//! randomized cross-checks additionally use plain [`Rational`] values obtained by
//! [`RatFunc::specialize`]; both implement [`Field`], so matrix code is written
//! once and runs over either.

mod laurent;
mod poly;
mod qcomb;
mod ratfunc;
mod rational;

pub use laurent::LaurentPoly;
pub use qcomb::{qbinom, qfact, qint};
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, Rational};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inadmissible specialization q = {0} (q must be nonzero with q^2 != 1)")]
    InadmissibleQ(Rational),
    #[error("pole at q = {0}")]
    Pole(Rational),
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("q-binomial [{n} choose {i}] requires n >= i >= 0")]
    BinomialRange { n: i64, i: i64 },
}

/// The scalar interface shared by `RatFunc` and `Rational`.
///
/// Method names avoid the `std::ops` names so that both can be in scope.
pub trait Field: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_ref(&self) -> Result<Self, FieldError>;

    fn is_one_elem(&self) -> bool {
        *self == Self::one_elem()
    }

    fn div_ref(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul_ref(&rhs.inv_ref()?))
    }

    /// Integer power; negative exponents invert.
    fn pow_i64(&self, exp: i64) -> Result<Self, FieldError> {
        let base = if exp < 0 { self.inv_ref()? } else { self.clone() };
        let mut acc = Self::one_elem();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

/// `q0` is an admissible specialization of the generic parameter.
pub fn check_admissible(q0: &Rational) -> Result<(), FieldError> {
    use num_traits::{One, Zero};
    if q0.is_zero() || q0.is_one() || (-q0).is_one() {
        return Err(FieldError::InadmissibleQ(q0.clone()));
    }
    Ok(())
}

/// A field into which generic `Q(q)` scalars can be mapped, given the image of
/// `q`: the identity on `RatFunc`, evaluation at `q0` on `Rational`.
pub trait QScalar: Field {
    fn lift(c: &RatFunc, q: &Self) -> Result<Self, FieldError>;

    /// `self / (d_1 d_2 ... d_k)`.
    fn div_laurent_chain(&self, divisors: &[LaurentPoly], q: &Self) -> Result<Self, FieldError> {
        let prod = divisors.iter().fold(LaurentPoly::one(), |acc, d| &acc * d);
        Ok(self.mul_ref(&Self::lift(&RatFunc::from(prod).inverse()?, q)?))
    }
}

impl QScalar for RatFunc {
    fn lift(c: &RatFunc, _q: &Self) -> Result<Self, FieldError> {
        Ok(c.clone())
    }

    fn div_laurent_chain(&self, divisors: &[LaurentPoly], _q: &Self) -> Result<Self, FieldError> {
        if let Some(mut p) = self.as_laurent().cloned() {
            let mut rest = divisors.iter();
            for d in rest.by_ref() {
                match p.exact_div(d) {
                    Some(next) => p = next,
                    None => {
                        let tail = rest.fold(d.clone(), |acc, d| &acc * d);
                        return RatFunc::new(p, tail);
                    }
                }
            }
            return Ok(p.into());
        }
        let prod = divisors.iter().fold(LaurentPoly::one(), |acc, d| &acc * d);
        self.checked_div(&prod.into())
    }
}

impl QScalar for Rational {
    fn lift(c: &RatFunc, q: &Self) -> Result<Self, FieldError> {
        c.specialize(q)
    }
}
