//! The rewriting system that sorts Chevalley words into PBW order.
//!
//! Letters are `F < K(b) < E`, with every power of `k` carried as a single
//! letter `K(b)`, `b != 0`. The rules are
//!
//! ```text
//! K(a) K(b) -> K(a+b)                 (dropped when a + b = 0)
//! K(b) F    -> q^{-2b} F K(b)
//! E K(b)    -> q^{-2b} K(b) E
//! E F       -> F E + c K(1) - c K(-1),   c = (q - q^-1)^-1
//! ```
//!
//! A word is normal when no rule applies, i.e. it has the shape `F^a K(b)? E^c`.

use std::collections::BTreeMap;
use std::fmt;

use super::pbw::PbwMonomial;
use crate::qfield::RatFunc;
use crate::report::{Entry, Subject, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    F,
    K(i64),
    E,
}

pub type Word = Vec<Letter>;

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::F => f.write_str("f"),
            Letter::E => f.write_str("e"),
            Letter::K(1) => f.write_str("k"),
            Letter::K(b) => write!(f, "k^{b}"),
        }
    }
}

/// Renders a word as `*`-separated letters.
pub fn word_to_string(word: &[Letter]) -> String {
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}

/// Left-hand sides of the four rule families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    KK,
    KF,
    EK,
    EF,
}

impl Rule {
    fn matching(a: Letter, b: Letter) -> Option<Rule> {
        match (a, b) {
            (Letter::K(_), Letter::K(_)) => Some(Rule::KK),
            (Letter::K(_), Letter::F) => Some(Rule::KF),
            (Letter::E, Letter::K(_)) => Some(Rule::EK),
            (Letter::E, Letter::F) => Some(Rule::EF),
            _ => None,
        }
    }
}

/// Position of the leftmost redex, if any.
pub fn leftmost_redex(word: &[Letter]) -> Option<usize> {
    word.windows(2).position(|w| Rule::matching(w[0], w[1]).is_some())
}

/// Applies the rule whose left side starts at `pos`. Returns the weighted
/// words replacing `word`; panics if no rule matches there.
pub fn rewrite_at(word: &[Letter], pos: usize) -> Vec<(Word, RatFunc)> {
    let (a, b) = (word[pos], word[pos + 1]);
    let splice = |mid: &[Letter]| -> Word {
        let mut w = Vec::with_capacity(word.len() + 1);
        w.extend_from_slice(&word[..pos]);
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[pos + 2..]);
        w
    };
    match (a, b) {
        (Letter::K(x), Letter::K(y)) => {
            let mid: &[Letter] = if x + y == 0 { &[] } else { &[Letter::K(x + y)] };
            vec![(splice(mid), RatFunc::one())]
        }
        (Letter::K(x), Letter::F) => vec![(splice(&[Letter::F, Letter::K(x)]), RatFunc::q_pow(-2 * x))],
        (Letter::E, Letter::K(x)) => vec![(splice(&[Letter::K(x), Letter::E]), RatFunc::q_pow(-2 * x))],
        (Letter::E, Letter::F) => {
            let c = RatFunc::c_factor();
            vec![
                (splice(&[Letter::F, Letter::E]), RatFunc::one()),
                (splice(&[Letter::K(1)]), c.clone()),
                (splice(&[Letter::K(-1)]), -c),
            ]
        }
        _ => panic!("no rule applies at position {pos}"),
    }
}

/// Reads a normal word as a PBW monomial.
pub fn word_to_monomial(word: &[Letter]) -> PbwMonomial {
    let mut m = PbwMonomial::ONE;
    for l in word {
        match *l {
            Letter::F => m.a += 1,
            Letter::K(b) => m.b += b,
            Letter::E => m.c += 1,
        }
    }
    m
}

pub fn monomial_to_word(m: &PbwMonomial) -> Word {
    let mut w = vec![Letter::F; m.a as usize];
    if m.b != 0 {
        w.push(Letter::K(m.b));
    }
    w.extend(std::iter::repeat_n(Letter::E, m.c as usize));
    w
}

/// Normalizes a linear combination of words by repeatedly rewriting the
/// leftmost redex of the smallest pending word.
pub fn normalize_words(input: impl IntoIterator<Item = (Word, RatFunc)>) -> BTreeMap<PbwMonomial, RatFunc> {
    let mut pending: BTreeMap<Word, RatFunc> = BTreeMap::new();
    for (w, c) in input {
        accumulate(&mut pending, w, c);
    }
    let mut out: BTreeMap<PbwMonomial, RatFunc> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        match leftmost_redex(&w) {
            None => accumulate(&mut out, word_to_monomial(&w), c),
            Some(pos) => {
                for (nw, k) in rewrite_at(&w, pos) {
                    accumulate(&mut pending, nw, &c * &k);
                }
            }
        }
    }
    out
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, RatFunc>, key: K, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// One overlap of two left-hand sides, reduced both ways.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub left: BTreeMap<PbwMonomial, RatFunc>,
    pub right: BTreeMap<PbwMonomial, RatFunc>,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.left == self.right
    }
}

/// All overlaps `KKK`, `KKF`, `EKK`, `EKF` with `k`-exponents drawn from
/// `exponents`, each reduced first at position 0 and then at position 1.
pub fn critical_pairs(exponents: &[i64]) -> Vec<CriticalPair> {
    let mut words = Vec::new();
    for &a in exponents {
        for &b in exponents {
            words.push(vec![Letter::K(a), Letter::K(b), Letter::F]);
            words.push(vec![Letter::E, Letter::K(a), Letter::K(b)]);
            for &c in exponents {
                words.push(vec![Letter::K(a), Letter::K(b), Letter::K(c)]);
            }
        }
        words.push(vec![Letter::E, Letter::K(a), Letter::F]);
    }
    words
        .into_iter()
        .map(|word| {
            let left = normalize_words(rewrite_at(&word, 0));
            let right = normalize_words(rewrite_at(&word, 1));
            CriticalPair { word, left, right }
        })
        .collect()
}

/// One entry per critical pair over `exponents`, passing when both
/// reductions reach the same normal form.
pub fn verify_confluence(exponents: &[i64]) -> VerificationReport {
    critical_pairs(exponents)
        .into_iter()
        .map(|p| {
            let id = format!("rewrite.critical-pair.{}", word_to_string(&p.word));
            Entry::check(id, Subject::Algebra, p.resolves(), || {
                format!("left {:?} vs right {:?}", p.left, p.right)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_words_have_no_redex() {
        let w = monomial_to_word(&PbwMonomial::new(2, -3, 1));
        assert_eq!(leftmost_redex(&w), None);
        assert_eq!(word_to_monomial(&w), PbwMonomial::new(2, -3, 1));
        assert_eq!(leftmost_redex(&[Letter::F, Letter::E, Letter::F]), Some(1));
    }

    #[test]
    fn e_past_k() {
        let nf = normalize_words([(vec![Letter::E, Letter::K(1)], RatFunc::one())]);
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[&PbwMonomial::new(0, 1, 1)], RatFunc::q_pow(-2));
    }

    #[test]
    fn k_cancels_inverse() {
        let nf = normalize_words([(vec![Letter::K(1), Letter::K(-1)], RatFunc::one())]);
        assert_eq!(nf.len(), 1);
        assert!(nf[&PbwMonomial::ONE].is_one());
    }

    #[test]
    fn all_critical_pairs_resolve() {
        let exps = [-2, -1, 1, 2];
        let pairs = critical_pairs(&exps);
        assert_eq!(pairs.len(), 4 * 4 * 4 + 2 * 4 * 4 + 4);
        for p in &pairs {
            assert!(p.resolves(), "{:?}", p.word);
        }
    }
}
