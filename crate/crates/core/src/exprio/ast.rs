use crate::ncore::GenSymbol;
use crate::qfield::{Field, FieldError, RatFunc};

/// A noncommutative expression over one of the two generator sets.
///
/// Trees built through the constructor functions below are kept in
/// scalar-folded form: every subtree made only of scalars is a single
/// `Scalar`, adjacent scalar factors of a product are merged, and `g^-1` on an
/// invertible generator is the inverse symbol itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NCExpr {
    Scalar(RatFunc),
    Gen(GenSymbol),
    Sum(Vec<NCExpr>),
    /// Order-significant.
    Product(Vec<NCExpr>),
    Pow(Box<NCExpr>, i64),
    Neg(Box<NCExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowError {
    NonInvertible,
    Field(FieldError),
}

impl NCExpr {
    pub fn scalar(c: impl Into<RatFunc>) -> Self {
        NCExpr::Scalar(c.into())
    }

    pub fn gen(g: GenSymbol) -> Self {
        NCExpr::Gen(g)
    }

    pub fn as_scalar(&self) -> Option<&RatFunc> {
        match self {
            NCExpr::Scalar(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, NCExpr::Scalar(_))
    }

    pub fn sum(terms: Vec<NCExpr>) -> Self {
        if terms.iter().all(NCExpr::is_scalar) {
            let total = terms
                .iter()
                .filter_map(NCExpr::as_scalar)
                .fold(RatFunc::zero(), |acc, c| &acc + c);
            return NCExpr::Scalar(total);
        }
        if terms.len() == 1 {
            return terms.into_iter().next().unwrap();
        }
        NCExpr::Sum(terms)
    }

    pub fn product(factors: Vec<NCExpr>) -> Self {
        let mut merged: Vec<NCExpr> = Vec::with_capacity(factors.len());
        for f in factors {
            match (merged.last_mut(), f) {
                (Some(NCExpr::Scalar(prev)), NCExpr::Scalar(c)) => *prev = &*prev * &c,
                (_, f) => merged.push(f),
            }
        }
        match merged.len() {
            0 => NCExpr::Scalar(RatFunc::one()),
            1 => merged.pop().unwrap(),
            _ => NCExpr::Product(merged),
        }
    }

    pub fn negated(inner: NCExpr) -> Self {
        match inner {
            NCExpr::Scalar(c) => NCExpr::Scalar(-c),
            other => NCExpr::Neg(Box::new(other)),
        }
    }

    /// Integer power. Negative exponents are accepted only on scalars and on
    /// the invertible generators `k^{±1}`, `x^{±1}`.
    pub fn pow(base: NCExpr, exp: i64) -> Result<Self, PowError> {
        match base {
            NCExpr::Scalar(c) => c.pow_i64(exp).map(NCExpr::Scalar).map_err(PowError::Field),
            NCExpr::Gen(g) if exp == -1 && g.is_invertible() => Ok(NCExpr::Gen(g.inverse().unwrap())),
            NCExpr::Gen(g) if exp < 0 && !g.is_invertible() => Err(PowError::NonInvertible),
            NCExpr::Gen(g) => Ok(NCExpr::Pow(Box::new(NCExpr::Gen(g)), exp)),
            _ if exp < 0 => Err(PowError::NonInvertible),
            other => Ok(NCExpr::Pow(Box::new(other), exp)),
        }
    }

    /// Rebuilds the tree through the folding constructors.
    pub fn fold_scalars(&self) -> NCExpr {
        match self {
            NCExpr::Scalar(_) | NCExpr::Gen(_) => self.clone(),
            NCExpr::Sum(ts) => NCExpr::sum(ts.iter().map(NCExpr::fold_scalars).collect()),
            NCExpr::Product(fs) => NCExpr::product(fs.iter().map(NCExpr::fold_scalars).collect()),
            NCExpr::Neg(x) => NCExpr::negated(x.fold_scalars()),
            NCExpr::Pow(b, e) => {
                let b = b.fold_scalars();
                NCExpr::pow(b.clone(), *e).unwrap_or_else(|_| NCExpr::Pow(Box::new(b), *e))
            }
        }
    }

    /// All generator symbols occurring in the tree.
    pub fn generators(&self) -> Vec<GenSymbol> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_generators(&self, out: &mut Vec<GenSymbol>) {
        match self {
            NCExpr::Scalar(_) => {}
            NCExpr::Gen(g) => out.push(*g),
            NCExpr::Sum(xs) | NCExpr::Product(xs) => xs.iter().for_each(|x| x.collect_generators(out)),
            NCExpr::Pow(b, _) | NCExpr::Neg(b) => b.collect_generators(out),
        }
    }

    /// Evaluates the tree in any target that can interpret its nodes.
    pub fn eval<A: ExprAlgebra>(&self, alg: &A) -> Result<A::Value, A::Error> {
        match self {
            NCExpr::Scalar(c) => Ok(alg.scalar(c)),
            NCExpr::Gen(g) => alg.generator(*g),
            NCExpr::Sum(ts) => {
                let mut it = ts.iter();
                let mut acc = match it.next() {
                    Some(t) => t.eval(alg)?,
                    None => return Ok(alg.scalar(&RatFunc::zero())),
                };
                for t in it {
                    acc = alg.add(&acc, &t.eval(alg)?);
                }
                Ok(acc)
            }
            NCExpr::Product(fs) => {
                let mut it = fs.iter();
                let mut acc = match it.next() {
                    Some(t) => t.eval(alg)?,
                    None => return Ok(alg.scalar(&RatFunc::one())),
                };
                for f in it {
                    acc = alg.mul(&acc, &f.eval(alg)?);
                }
                Ok(acc)
            }
            NCExpr::Neg(x) => Ok(alg.neg(&x.eval(alg)?)),
            NCExpr::Pow(b, e) => {
                if *e < 0 {
                    if let NCExpr::Gen(g) = **b {
                        if let Some(inv) = g.inverse() {
                            let base = alg.generator(inv)?;
                            return Ok(repeat_mul(alg, &base, e.unsigned_abs()));
                        }
                    }
                    return Err(alg.non_invertible());
                }
                let base = b.eval(alg)?;
                Ok(repeat_mul(alg, &base, e.unsigned_abs()))
            }
        }
    }
}

fn repeat_mul<A: ExprAlgebra>(alg: &A, base: &A::Value, exp: u64) -> A::Value {
    let mut acc = alg.scalar(&RatFunc::one());
    for _ in 0..exp {
        acc = alg.mul(&acc, base);
    }
    acc
}

/// An interpretation of expression trees: algebra elements, matrices, ...
pub trait ExprAlgebra {
    type Value;
    type Error;
    fn scalar(&self, c: &RatFunc) -> Self::Value;
    fn generator(&self, g: GenSymbol) -> Result<Self::Value, Self::Error>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn non_invertible(&self) -> Self::Error;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folding_constructors() {
        let q = NCExpr::scalar(RatFunc::q());
        assert_eq!(
            NCExpr::product(vec![q.clone(), q.clone(), NCExpr::gen(GenSymbol::X)]),
            NCExpr::Product(vec![NCExpr::scalar(RatFunc::q_pow(2)), NCExpr::gen(GenSymbol::X)])
        );
        assert_eq!(NCExpr::sum(vec![q.clone(), NCExpr::negated(q)]), NCExpr::scalar(RatFunc::zero()));
        assert_eq!(NCExpr::pow(NCExpr::gen(GenSymbol::K), -1), Ok(NCExpr::gen(GenSymbol::KInv)));
        assert_eq!(NCExpr::pow(NCExpr::gen(GenSymbol::Y), -1), Err(PowError::NonInvertible));
    }
}
