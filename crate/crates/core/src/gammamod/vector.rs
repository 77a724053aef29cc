use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::qfield::RatFunc;

/// A finitely supported vector in one of the modules with basis indexed by
/// `(i, j)`, `i` any integer and `j >= 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowVector {
    terms: BTreeMap<(i64, i64), RatFunc>,
}

impl WindowVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: i64, j: u32) -> Self {
        let mut v = Self::zero();
        v.add_term(i, i64::from(j), &RatFunc::one());
        v
    }

    /// Adds `c` at `(i, j)`; terms with `j < 0` are dropped.
    pub fn add_term(&mut self, i: i64, j: i64, c: &RatFunc) {
        if j < 0 || c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(RatFunc::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i64, j: i64) -> RatFunc {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Terms in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &RatFunc)> {
        self.terms.iter().map(|(k, c)| (*k, c))
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for ((i, j), v) in self.terms() {
            out.add_term(i, j, &(v * c));
        }
        out
    }
}

impl fmt::Display for WindowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|((i, j), c)| {
                if c.is_one() {
                    format!("[{i},{j}]")
                } else {
                    format!("({c})*[{i},{j}]")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for WindowVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            i: i64,
            j: i64,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for ((i, j), c) in self.terms() {
            seq.serialize_element(&Term { i, j, coeff: c.to_string() })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_j_is_dropped() {
        let mut v = WindowVector::zero();
        v.add_term(3, -1, &RatFunc::q());
        assert!(v.is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let v = WindowVector::basis(1, 2);
        assert!(v.sub(&v).is_zero());
        assert_eq!(v.add(&v).coeff(1, 2), RatFunc::from_int(2));
    }

    #[test]
    fn json_sorted_by_index() {
        let mut v = WindowVector::basis(2, 0);
        v.add_term(-1, 3, &(RatFunc::q() - RatFunc::q_pow(-1)));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"[{"i":-1,"j":3,"coeff":"q - q^-1"},{"i":2,"j":0,"coeff":"1"}]"#
        );
        assert_eq!(v.to_string(), "(q - q^-1)*[-1,3] + [2,0]");
    }
}
