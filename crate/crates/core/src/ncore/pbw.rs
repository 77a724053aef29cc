use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed};

use super::rewrite::{accumulate, normalize_words, Letter};
use super::GenSymbol;
use crate::qfield::{LaurentPoly, RatFunc};

/// The basis element `f^a k^b e^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub a: u32,
    pub b: i64,
    pub c: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: i64, c: u32) -> Self {
        PbwMonomial { a, b, c }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("f".into()),
            a => parts.push(format!("f^{a}")),
        }
        match self.b {
            0 => {}
            1 => parts.push("k".into()),
            b => parts.push(format!("k^{b}")),
        }
        match self.c {
            0 => {}
            1 => parts.push("e".into()),
            c => parts.push(format!("e^{c}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// An element of U_q(sl2) in PBW normal form. Zero coefficients are never
/// stored, so structural equality is equality in the algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, RatFunc>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::monomial(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    pub fn basis(m: PbwMonomial) -> Self {
        Self::monomial(m, RatFunc::one())
    }

    pub fn k_pow(b: i64) -> Self {
        Self::basis(PbwMonomial::new(0, b, 0))
    }

    pub fn e() -> Self {
        Self::basis(PbwMonomial::new(0, 0, 1))
    }

    pub fn f() -> Self {
        Self::basis(PbwMonomial::new(1, 0, 0))
    }

    /// A Chevalley generator as a basis element; `None` for equitable symbols.
    pub fn chevalley_generator(g: GenSymbol) -> Option<Self> {
        Some(match g {
            GenSymbol::K => Self::k_pow(1),
            GenSymbol::KInv => Self::k_pow(-1),
            GenSymbol::E => Self::e(),
            GenSymbol::F => Self::f(),
            _ => return None,
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, RatFunc)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map, m, c);
        }
        AlgebraElement { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The coefficient when the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&PbwMonomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Smallest and largest `k`-exponent among the terms.
    pub fn k_range(&self) -> Option<(i64, i64)> {
        let bs = self.terms.keys().map(|m| m.b);
        Some((bs.clone().min()?, bs.max()?))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Normalizes a linear combination of arbitrary Chevalley words.
    pub fn from_words(words: impl IntoIterator<Item = (Vec<Letter>, RatFunc)>) -> Self {
        AlgebraElement {
            terms: normalize_words(words),
        }
    }
}

type Expansion = Arc<Vec<(PbwMonomial, RatFunc)>>;

/// Normal form of `e^c f^a`, computed once by the rewriting system.
fn e_pow_times_f_pow(c: u32, a: u32) -> Expansion {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Expansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(c, a)) {
        return hit.clone();
    }
    let mut word = vec![Letter::E; c as usize];
    word.extend(std::iter::repeat_n(Letter::F, a as usize));
    let nf: Expansion = Arc::new(normalize_words([(word, RatFunc::one())]).into_iter().collect());
    cache.lock().unwrap().insert((c, a), nf.clone());
    nf
}

/// `(f^a1 k^b1 e^c1)(f^a2 k^b2 e^c2)`: the middle `e^c1 f^a2` is expanded, and
/// the outer `k`-powers commute past the result with the `q^{-2b}` rules.
fn mul_monomials(x: &PbwMonomial, y: &PbwMonomial, out: &mut BTreeMap<PbwMonomial, RatFunc>, scale: &RatFunc) {
    for (m, c) in e_pow_times_f_pow(x.c, y.a).iter() {
        let shift = -2 * x.b * i64::from(m.a) - 2 * y.b * i64::from(m.c);
        let target = PbwMonomial::new(x.a + m.a, x.b + m.b + y.b, m.c + y.c);
        let coeff = if shift == 0 { scale * c } else { &(scale * c) * &RatFunc::q_pow(shift) };
        accumulate(out, target, coeff);
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = BTreeMap::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &rhs.terms {
                mul_monomials(mx, my, &mut out, &(cx * cy));
            }
        }
        AlgebraElement { terms: out }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        AlgebraElement { terms }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// Splits a coefficient into a sign and the text printed in front of the
/// monomial. `None` means the unit coefficient is elided.
fn coeff_text(c: &RatFunc) -> (bool, Option<String>) {
    if let Some((v, e)) = c.as_laurent().and_then(LaurentPoly::as_monomial) {
        let negative = v.is_negative();
        let abs = v.abs();
        if abs.is_one() && e == 0 {
            return (negative, None);
        }
        return (negative, Some(LaurentPoly::monomial(abs, e).to_string()));
    }
    let negative = c.numerator().terms().next_back().is_some_and(|(_, v)| v.is_negative());
    let abs = if negative { -c.clone() } else { c.clone() };
    (negative, Some(format!("({abs})")))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (negative, text) = coeff_text(c);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (text, m.is_one()) {
                (None, _) => write!(f, "{m}")?,
                (Some(t), true) => f.write_str(&t)?,
                (Some(t), false) => write!(f, "{t}*{m}")?,
            }
        }
        Ok(())
    }
}
