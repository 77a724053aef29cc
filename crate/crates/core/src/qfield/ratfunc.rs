use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{check_admissible, Field, FieldError, LaurentPoly, Rational};

/// An element of Q(q) in canonical form.
///
/// All powers of `q` live in the numerator, so the denominator is an ordinary
/// polynomial with nonzero constant term. Numerator and denominator are coprime
/// and the denominator is monic, which makes the representation unique and lets
/// equality be structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// The generic parameter `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(exp: i64) -> Self {
        LaurentPoly::q_pow(exp).into()
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inverse() -> Self {
        LaurentPoly::from_terms([(1, Rational::from_integer(1.into())), (-1, Rational::from_integer((-1).into()))]).into()
    }

    /// `(q - q^-1)^-1`.
    pub fn c_factor() -> Self {
        Self::q_minus_q_inverse().inverse().expect("q - q^-1 is nonzero")
    }

    pub fn from_int(v: i64) -> Self {
        LaurentPoly::from(v).into()
    }

    pub fn from_rational(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }

    /// `num / den`, canonicalized.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        if let Some(quot) = num.exact_div(&den) {
            return quot.into();
        }
        let (vn, pn) = num.split_valuation();
        let (vd, pd) = den.split_valuation();
        let shift = vn - vd;
        let (mut pn, mut pd) = (pn, pd);
        if !pd.is_constant() {
            let g = pn.gcd(&pd);
            if !g.is_constant() {
                pn = pn.div_rem(&g).0;
                pd = pd.div_rem(&g).0;
            }
        }
        let lc = pd.lead().expect("nonzero denominator").clone();
        let num = LaurentPoly::from_poly(&pn, shift);
        if pd.is_constant() {
            return RatFunc {
                num: num.scale(&lc.recip()),
                den: LaurentPoly::one(),
            };
        }
        let inv = lc.recip();
        RatFunc {
            num: num.scale(&inv),
            den: LaurentPoly::from_poly(&pd, 0).scale(&inv),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Monic, with nonzero constant term; `1` for Laurent polynomials.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in the Laurent ring Q[q, q^-1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, FieldError> {
        self.pow_i64(exp)
    }

    /// Exact value at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational, FieldError> {
        check_admissible(q0)?;
        let den = self.den.eval(q0);
        if den.is_zero() {
            return Err(FieldError::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / den)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        RatFunc {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num + &rhs.num).into();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Field for RatFunc {
    fn zero_elem() -> Self {
        RatFunc::zero()
    }
    fn one_elem() -> Self {
        RatFunc::one()
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_int(v)
    }
    fn is_zero_elem(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one_elem(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Result<Self, FieldError> {
        self.inverse()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn q_minus_qinv() -> RatFunc {
        &RatFunc::q() - &RatFunc::q_pow(-1)
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let inv = q_minus_qinv().inverse().unwrap();
        assert_eq!(inv.to_string(), "(q)/(q^2 - 1)");
        assert!((&inv * &q_minus_qinv()).is_one());
    }

    #[test]
    fn additive_inverse() {
        let f = q_minus_qinv().inverse().unwrap() + RatFunc::q_pow(3);
        assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn product_of_conjugates() {
        let a = &RatFunc::q() + &RatFunc::q_pow(-1);
        let p = &a * &q_minus_qinv();
        assert_eq!(p, &RatFunc::q_pow(2) - &RatFunc::q_pow(-2));
        assert_eq!(p.to_string(), "q^2 - q^-2");
    }

    #[test]
    fn cancels_common_factors() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = LaurentPoly::from_terms([(2, r(1, 1)), (0, r(-1, 1))]);
        let den = LaurentPoly::from_terms([(1, r(1, 1)), (0, r(-1, 1))]);
        let f = RatFunc::new(num, den).unwrap();
        assert!(f.is_laurent());
        assert_eq!(f.to_string(), "q + 1");
    }

    #[test]
    fn denominators_are_monic_without_q_factor() {
        // 1 / (2q^3 - 2q) = (1/2) q^-1 / (q^2 - 1)
        let den = LaurentPoly::from_terms([(3, r(2, 1)), (1, r(-2, 1))]);
        let f = RatFunc::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(f.to_string(), "(1/2*q^-1)/(q^2 - 1)");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::zero().inverse(), Err(FieldError::DivisionByZero));
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn specialization() {
        let two = r(2, 1);
        let f = &RatFunc::q() + &RatFunc::q_pow(-1);
        assert_eq!(f.specialize(&two).unwrap(), r(5, 2));
        assert_eq!(RatFunc::one().specialize(&r(7, 3)).unwrap(), r(1, 1));
        let g = q_minus_qinv().inverse().unwrap();
        for bad in [r(0, 1), r(1, 1), r(-1, 1)] {
            assert_eq!(g.specialize(&bad), Err(FieldError::InadmissibleQ(bad.clone())));
        }
    }

    #[test]
    fn pole_is_reported() {
        // 1/(q - 2) has a pole at 2
        let den = LaurentPoly::from_terms([(1, r(1, 1)), (0, r(-2, 1))]);
        let f = RatFunc::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(f.specialize(&r(2, 1)), Err(FieldError::Pole(r(2, 1))));
    }
}
