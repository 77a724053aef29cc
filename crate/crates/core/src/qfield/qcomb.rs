//! q-integers, q-factorials and q-binomial coefficients.

use super::{FieldError, LaurentPoly, Rational};

/// `[n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: i64) -> LaurentPoly {
    let m = n.abs();
    let one = Rational::from_integer(1.into());
    let sum = LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, one.clone())));
    if n < 0 {
        -sum
    } else {
        sum
    }
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn qfact(n: i64) -> Result<LaurentPoly, FieldError> {
    if n < 0 {
        return Err(FieldError::NegativeFactorial(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i)))
}

/// `[n choose i] = [n]! / ([i]! [n-i]!)`.
///
/// Computed as `[n-i+1]...[n]` divided by `[1]`, `[2]`, ..., `[i]` in turn; every
/// partial quotient is itself a q-binomial, so each division is exact.
pub fn qbinom(n: i64, i: i64) -> Result<LaurentPoly, FieldError> {
    if i < 0 || i > n {
        return Err(FieldError::BinomialRange { n, i });
    }
    let i = i.min(n - i);
    let mut acc = (n - i + 1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k));
    for k in 2..=i {
        acc = acc
            .exact_div(&qint(k))
            .expect("partial q-binomial quotient is a Laurent polynomial");
    }
    Ok(acc)
}
