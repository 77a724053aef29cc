use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::Rational;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored as a finitely supported exponent -> coefficient map; zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single `(coefficient, exponent)` pair, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    fn add_term(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect(),
        }
    }

    /// Image under `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (-e, a.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q0: &Rational) -> Rational {
        assert!(!q0.is_zero(), "Laurent polynomial evaluated at q = 0");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rational(q0, *e);
        }
        acc
    }

    /// Splits a nonzero value as `q^v * p(q)` with `p(0) != 0`.
    pub(crate) fn split_valuation(&self) -> (i64, Poly) {
        let v = self.min_exp().unwrap_or(0);
        let top = self.max_exp().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); (top - v + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e - v) as usize] = c.clone();
        }
        (v, Poly::new(coeffs))
    }

    pub(crate) fn from_poly(p: &Poly, shift: i64) -> Self {
        LaurentPoly {
            terms: p
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + shift, c.clone()))
                .collect(),
        }
    }

    /// `self / divisor` when the division is exact in the Laurent ring.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (va, pa) = self.split_valuation();
        let (vb, pb) = divisor.split_valuation();
        let (quot, rem) = pa.div_rem(&pb);
        rem.is_zero().then(|| Self::from_poly(&quot, va - vb))
    }
}

pub(crate) fn pow_rational(base: &Rational, exp: i64) -> Rational {
    let b = if exp < 0 { base.recip() } else { base.clone() };
    num_traits::pow(b, exp.unsigned_abs() as usize)
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(c.into()))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (Some(lo_a), Some(hi_a), Some(lo_b), Some(hi_b)) =
            (self.min_exp(), self.max_exp(), rhs.min_exp(), rhs.max_exp())
        else {
            return LaurentPoly::zero();
        };
        let lo = lo_a + lo_b;
        let width = (hi_a - lo_a + hi_b - lo_b + 1) as usize;
        let integral = self.terms.values().chain(rhs.terms.values()).all(|c| c.is_integer());
        if integral {
            let mut acc = vec![num_bigint::BigInt::zero(); width];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    acc[(ea + eb - lo) as usize] += ca.numer() * cb.numer();
                }
            }
            return LaurentPoly {
                terms: acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (lo + i as i64, Rational::from_integer(c)))
                    .collect(),
            };
        }
        let mut acc = vec![Rational::zero(); width];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Canonical rendering: strictly decreasing exponents, `c*q^e` terms, unit
/// coefficients elided except for sign, `q^1` as `q`, `q^0` omitted.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let power = match *e {
                0 => None,
                1 => Some("q".to_string()),
                e => Some(format!("q^{e}")),
            };
            match power {
                None => write!(f, "{abs}")?,
                Some(p) if abs.is_one() => f.write_str(&p)?,
                Some(p) => write!(f, "{abs}*{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_integer(c.into()))))
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(lp(&[(2, 1), (0, -2), (-2, 1)]).to_string(), "q^2 - 2 + q^-2");
        assert_eq!(lp(&[(1, -1), (-1, 1)]).to_string(), "-q + q^-1");
        assert_eq!(lp(&[(3, 2), (1, 1)]).to_string(), "2*q^3 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let half = LaurentPoly::monomial(Rational::new(1.into(), 2.into()), -1);
        assert_eq!(half.to_string(), "1/2*q^-1");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = lp(&[(1, 1), (-1, 1)]);
        assert!((&a - &a).is_zero());
        assert_eq!(((&a + &a) - a.scale(&Rational::from_integer(2.into()))).len(), 0);
    }

    #[test]
    fn exact_division() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = lp(&[(2, 1), (-2, -1)]);
        let den = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(num.exact_div(&den), Some(lp(&[(1, 1), (-1, 1)])));
        assert_eq!(lp(&[(0, 1)]).exact_div(&den), None);
    }

    #[test]
    fn evaluation_at_rational() {
        let a = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(a.eval(&Rational::from_integer(2.into())), Rational::new(5.into(), 2.into()));
    }
}
