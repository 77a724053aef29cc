use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::matrix::{Matrix, MatrixError};
use crate::exprio::{ExprAlgebra, NCExpr};
use crate::ncore::{AlgebraElement, GenSymbol, Presentation};
use crate::qfield::{qint, FieldError, QScalar, RatFunc, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("eps must be +1 or -1, got {0}")]
    InvalidEps(i64),
    #[error("a module needs at least one summand")]
    Empty,
    #[error("cannot sum modules given in different bases")]
    MixedBasis,
    #[error("x does not act diagonally in this basis")]
    NotDiagonal,
    #[error("diagonal entry {0} is not of the form +-q^l")]
    NotAWeight(String),
    #[error("negative power of a non-invertible generator")]
    NonInvertible,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A list of simple summands `L(n, eps)` in block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModuleSpec {
    summands: Vec<(u32, i8)>,
}

impl ModuleSpec {
    pub fn new(summands: Vec<(u32, i8)>) -> Result<Self, RepError> {
        if summands.is_empty() {
            return Err(RepError::Empty);
        }
        if let Some(&(_, e)) = summands.iter().find(|(_, e)| e.abs() != 1) {
            return Err(RepError::InvalidEps(e.into()));
        }
        Ok(ModuleSpec { summands })
    }

    /// `L(n, eps)`.
    pub fn simple(n: u32, eps: i8) -> Result<Self, RepError> {
        Self::new(vec![(n, eps)])
    }

    pub fn summands(&self) -> &[(u32, i8)] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|(n, _)| *n as usize + 1).sum()
    }

    pub fn as_simple(&self) -> Option<(u32, i8)> {
        match self.summands.as_slice() {
            [one] => Some(*one),
            _ => None,
        }
    }

    /// Index of the first basis vector of each summand.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.summands
            .iter()
            .map(|(n, _)| {
                let o = acc;
                acc += *n as usize + 1;
                o
            })
            .collect()
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|(n, e)| format!("L({n},{e:+})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A finite-dimensional module given by the matrices of one generator set.
///
/// `q` is the image of the parameter in the scalar field, so the same checks
/// run over `Q(q)` and over a rational specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<F = RatFunc> {
    spec: ModuleSpec,
    basis: Presentation,
    q: F,
    action: BTreeMap<GenSymbol, Matrix<F>>,
}

fn rf_q_pow(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

fn signed(eps: i8, c: RatFunc) -> RatFunc {
    if eps < 0 {
        -c
    } else {
        c
    }
}

fn chevalley_simple(n: u32, eps: i8) -> BTreeMap<GenSymbol, Matrix<RatFunc>> {
    let d = n as usize + 1;
    let n = i64::from(n);
    let k = Matrix::diag((0..=n).map(|i| signed(eps, rf_q_pow(n - 2 * i))).collect());
    let kinv = Matrix::diag((0..=n).map(|i| signed(eps, rf_q_pow(2 * i - n))).collect());
    let mut f = Matrix::zeros(d, d);
    let mut e = Matrix::zeros(d, d);
    for i in 0..d {
        let ii = i as i64;
        if i + 1 < d {
            f.set(i + 1, i, qint(ii + 1).into());
        }
        if i > 0 {
            e.set(i - 1, i, signed(eps, qint(n - ii + 1).into()));
        }
    }
    BTreeMap::from([(GenSymbol::K, k), (GenSymbol::KInv, kinv), (GenSymbol::E, e), (GenSymbol::F, f)])
}

fn equitable_simple(n: u32, eps: i8) -> BTreeMap<GenSymbol, Matrix<RatFunc>> {
    let d = n as usize + 1;
    let n = i64::from(n);
    let x = Matrix::diag((0..=n).map(|i| signed(eps, rf_q_pow(n - 2 * i))).collect());
    let xinv = Matrix::diag((0..=n).map(|i| signed(eps, rf_q_pow(2 * i - n))).collect());
    let mut y = Matrix::zeros(d, d);
    let mut z = Matrix::zeros(d, d);
    for i in 0..d {
        let ii = i as i64;
        y.set(i, i, signed(eps, rf_q_pow(2 * ii - n)));
        z.set(i, i, signed(eps, rf_q_pow(2 * ii - n)));
        if i + 1 < d {
            y.set(i + 1, i, signed(eps, rf_q_pow(-n) - rf_q_pow(2 * ii + 2 - n)));
        }
        if i > 0 {
            z.set(i - 1, i, signed(eps, rf_q_pow(n) - rf_q_pow(2 * ii - 2 - n)));
        }
    }
    BTreeMap::from([(GenSymbol::X, x), (GenSymbol::XInv, xinv), (GenSymbol::Y, y), (GenSymbol::Z, z)])
}

/// `L(n, eps)` in the basis `v_0..v_n` of the Chevalley action.
pub fn build_chevalley(n: u32, eps: i8) -> Result<Rep, RepError> {
    Rep::build(&ModuleSpec::simple(n, eps)?, Presentation::Chevalley)
}

/// `L(n, eps)` in the basis `u_0..u_n` where `x` is diagonal.
pub fn build_equitable(n: u32, eps: i8) -> Result<Rep, RepError> {
    Rep::build(&ModuleSpec::simple(n, eps)?, Presentation::Equitable)
}

/// The diagonal matrix of `gamma_i` with `u_i = gamma_i v_i`, blockwise.
pub fn change_of_basis(spec: &ModuleSpec) -> Matrix<RatFunc> {
    let blocks: Vec<Matrix<RatFunc>> = spec
        .summands()
        .iter()
        .map(|&(n, eps)| {
            let mut g = vec![RatFunc::one()];
            for i in 1..=i64::from(n) {
                let prev = g.last().unwrap();
                g.push(signed(-eps, prev * &rf_q_pow(i64::from(n) - i)));
            }
            Matrix::diag(g)
        })
        .collect();
    Matrix::block_diag(&blocks)
}

/// Block-diagonal sum of modules given in the same basis.
pub fn direct_sum<F: QScalar>(reps: &[Rep<F>]) -> Result<Rep<F>, RepError> {
    let first = reps.first().ok_or(RepError::Empty)?;
    if reps.iter().any(|r| r.basis != first.basis || r.q != first.q) {
        return Err(RepError::MixedBasis);
    }
    let spec = ModuleSpec::new(reps.iter().flat_map(|r| r.spec.summands.iter().copied()).collect())?;
    let action = first
        .action
        .keys()
        .map(|g| {
            let blocks: Vec<Matrix<F>> = reps.iter().map(|r| r.action[g].clone()).collect();
            (*g, Matrix::block_diag(&blocks))
        })
        .collect();
    Ok(Rep {
        spec,
        basis: first.basis,
        q: first.q.clone(),
        action,
    })
}

impl Rep<RatFunc> {
    /// The module `spec` over `Q(q)` in the requested basis.
    pub fn build(spec: &ModuleSpec, basis: Presentation) -> Result<Self, RepError> {
        let blocks: Vec<BTreeMap<GenSymbol, Matrix<RatFunc>>> = spec
            .summands()
            .iter()
            .map(|&(n, eps)| match basis {
                Presentation::Chevalley => chevalley_simple(n, eps),
                Presentation::Equitable => equitable_simple(n, eps),
            })
            .collect();
        let action = basis
            .generators()
            .into_iter()
            .map(|g| {
                let ms: Vec<Matrix<RatFunc>> = blocks.iter().map(|b| b[&g].clone()).collect();
                (g, Matrix::block_diag(&ms))
            })
            .collect();
        Ok(Rep {
            spec: spec.clone(),
            basis,
            q: RatFunc::q(),
            action,
        })
    }

    /// Evaluates every matrix entry at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rep<Rational>, FieldError> {
        crate::qfield::check_admissible(q0)?;
        let action = self
            .action
            .iter()
            .map(|(g, m)| Ok((*g, m.try_map(|c| c.specialize(q0))?)))
            .collect::<Result<_, FieldError>>()?;
        Ok(Rep {
            spec: self.spec.clone(),
            basis: self.basis,
            q: q0.clone(),
            action,
        })
    }
}

impl<F: QScalar> Rep<F> {
    pub fn spec(&self) -> &ModuleSpec {
        &self.spec
    }

    pub fn basis(&self) -> Presentation {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    /// The image of `q` in the scalar field.
    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn q_pow(&self, e: i64) -> F {
        self.q.pow_i64(e).expect("q is nonzero")
    }

    /// Maps a generic scalar into this module's field.
    pub fn lift(&self, c: &RatFunc) -> Result<F, FieldError> {
        F::lift(c, &self.q)
    }

    /// `(q - q^-1)^-1` in this module's field.
    pub fn c_factor(&self) -> F {
        self.q.sub_ref(&self.q_pow(-1)).inv_ref().expect("q^2 != 1")
    }

    pub fn identity(&self) -> Matrix<F> {
        Matrix::identity(self.dim())
    }

    /// Matrix of any generator of either presentation; generators of the other
    /// presentation are obtained through the isomorphism or its inverse.
    pub fn matrix(&self, g: GenSymbol) -> Matrix<F> {
        if let Some(m) = self.action.get(&g) {
            return m.clone();
        }
        let c = self.c_factor();
        let q = self.q.clone();
        let m = |s: GenSymbol| self.action[&s].clone();
        match (self.basis, g) {
            (Presentation::Equitable, GenSymbol::K) => m(GenSymbol::X),
            (Presentation::Equitable, GenSymbol::KInv) => m(GenSymbol::XInv),
            (Presentation::Equitable, GenSymbol::F) => m(GenSymbol::Y).sub(&m(GenSymbol::XInv)).scale(&c),
            (Presentation::Equitable, GenSymbol::E) => {
                let xz = m(GenSymbol::X).mul(&m(GenSymbol::Z));
                self.identity().sub(&xz).scale(&c.mul_ref(&self.q_pow(-1)))
            }
            (Presentation::Chevalley, GenSymbol::X) => m(GenSymbol::K),
            (Presentation::Chevalley, GenSymbol::XInv) => m(GenSymbol::KInv),
            (Presentation::Chevalley, GenSymbol::Y) => {
                let qq = q.sub_ref(&self.q_pow(-1));
                m(GenSymbol::KInv).add(&m(GenSymbol::F).scale(&qq))
            }
            (Presentation::Chevalley, GenSymbol::Z) => {
                let qq = q.mul_ref(&q.sub_ref(&self.q_pow(-1)));
                let ke = m(GenSymbol::KInv).mul(&m(GenSymbol::E));
                m(GenSymbol::KInv).sub(&ke.scale(&qq))
            }
            _ => unreachable!("every generator is covered"),
        }
    }

    /// The stored generator matrices, in generator order.
    pub fn action(&self) -> impl Iterator<Item = (GenSymbol, &Matrix<F>)> {
        self.action.iter().map(|(g, m)| (*g, m))
    }

    /// Matrix of an algebra element in PBW form.
    pub fn evaluate(&self, elem: &AlgebraElement) -> Result<Matrix<F>, RepError> {
        let (k, ki, e, f) = (
            self.matrix(GenSymbol::K),
            self.matrix(GenSymbol::KInv),
            self.matrix(GenSymbol::E),
            self.matrix(GenSymbol::F),
        );
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (m, c) in elem.terms() {
            let kb = if m.b >= 0 { k.pow(m.b as u32) } else { ki.pow(m.b.unsigned_abs() as u32) };
            let term = f.pow(m.a).mul(&kb).mul(&e.pow(m.c));
            out = out.add(&term.scale(&self.lift(c)?));
        }
        Ok(out)
    }

    /// Matrix of an expression in either generator set.
    pub fn evaluate_expr(&self, expr: &NCExpr) -> Result<Matrix<F>, RepError> {
        expr.eval(self)
    }
}

impl<F: QScalar> ExprAlgebra for Rep<F> {
    type Value = Matrix<F>;
    type Error = RepError;

    fn scalar(&self, c: &RatFunc) -> Matrix<F> {
        let v = self.lift(c).expect("scalar has no pole at this q");
        self.identity().scale(&v)
    }

    fn generator(&self, g: GenSymbol) -> Result<Matrix<F>, RepError> {
        Ok(self.matrix(g))
    }

    fn add(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        a.add(b)
    }

    fn mul(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        a.mul(b)
    }

    fn neg(&self, a: &Matrix<F>) -> Matrix<F> {
        a.neg()
    }

    fn non_invertible(&self) -> RepError {
        RepError::NonInvertible
    }
}

/// One weight space of `x`: eigenvalue `eps q^lambda` and the basis vectors
/// spanning it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSpace {
    pub eps: i8,
    pub lambda: i64,
    pub columns: Vec<usize>,
}

/// Groups basis vectors by their `x`-eigenvalue, `eps = +1` first and `lambda`
/// descending within each sign.
pub fn weight_spaces(rep: &Rep) -> Result<Vec<WeightSpace>, RepError> {
    let x = rep.matrix(GenSymbol::X);
    if !x.is_diagonal() {
        return Err(RepError::NotDiagonal);
    }
    let mut groups: BTreeMap<(std::cmp::Reverse<i8>, std::cmp::Reverse<i64>), Vec<usize>> = BTreeMap::new();
    for (col, v) in x.diagonal().iter().enumerate() {
        let (eps, lambda) = weight_of(v).ok_or_else(|| RepError::NotAWeight(v.to_string()))?;
        groups
            .entry((std::cmp::Reverse(eps), std::cmp::Reverse(lambda)))
            .or_default()
            .push(col);
    }
    Ok(groups
        .into_iter()
        .map(|((e, l), columns)| WeightSpace {
            eps: e.0,
            lambda: l.0,
            columns,
        })
        .collect())
}

/// Reads `eps q^lambda` off a scalar.
pub fn weight_of(v: &RatFunc) -> Option<(i8, i64)> {
    use num_traits::{One, Signed};
    let (c, e) = v.as_laurent()?.as_monomial()?;
    if !c.abs().is_one() {
        return None;
    }
    Some((if c.is_negative() { -1 } else { 1 }, e))
}
