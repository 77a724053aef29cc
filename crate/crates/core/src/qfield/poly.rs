//! Dense univariate polynomials over the rationals, used only for gcd and
//! exact division behind `LaurentPoly` and `RatFunc`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly(pub(crate) Vec<Rational>);

impl Poly {
    pub(crate) fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub(crate) fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub(crate) fn monic(&self) -> Poly {
        match self.lead() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub(crate) fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (Poly(Vec::new()), Poly(Vec::new()));
        };
        if nd < dd {
            return (Poly(Vec::new()), self.clone());
        }
        let unit_lead = divisor.0[dd].is_integer() && divisor.0[dd].numer().magnitude().is_one();
        if unit_lead && self.0.iter().chain(&divisor.0).all(Rational::is_integer) {
            return self.div_rem_integral(divisor);
        }
        let lc_inv = divisor.0[dd].recip();
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.0.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division by a divisor with leading coefficient `+-1`, all coefficients
    /// integral, carried out in `BigInt`.
    fn div_rem_integral(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.0.len() - 1;
        let nd = self.0.len() - 1;
        let neg_lead = divisor.0[dd].numer().is_negative();
        let div: Vec<&BigInt> = divisor.0.iter().map(|c| c.numer()).collect();
        let mut rem: Vec<BigInt> = self.0.iter().map(|c| c.numer().clone()).collect();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = if neg_lead { -&rem[k + dd] } else { rem[k + dd].clone() };
            if c.is_zero() {
                continue;
            }
            for (i, d) in div.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * *d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        let lift = |v: Vec<BigInt>| Poly::new(v.into_iter().map(Rational::from_integer).collect());
        (lift(quot), lift(rem))
    }

    /// Monic greatest common divisor.
    pub(crate) fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q-1)(q+2) and (q-1)(q+3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn division_with_remainder() {
        let (quot, rem) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(quot, p(&[-1, 1]));
        assert_eq!(rem, p(&[2]));
    }

    #[test]
    fn integral_division_reconstructs_dividend() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        for d in [p(&[2, 0, -1]), p(&[1, 1]), p(&[-7, 3, 0, 1])] {
            let (quot, rem) = a.div_rem(&d);
            let back: Vec<Rational> = {
                let mut out = vec![Rational::zero(); a.0.len()];
                for (i, x) in quot.0.iter().enumerate() {
                    for (j, y) in d.0.iter().enumerate() {
                        out[i + j] += x * y;
                    }
                }
                for (i, r) in rem.0.iter().enumerate() {
                    out[i] += r;
                }
                out
            };
            assert_eq!(Poly::new(back), a);
            assert!(rem.degree().is_none_or(|r| r < d.degree().unwrap()));
        }
    }
}
