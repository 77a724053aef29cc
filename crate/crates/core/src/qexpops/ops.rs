use serde::Serialize;
use thiserror::Error;

use crate::ncore::{n_element, Axis, NcoreError};
use crate::qfield::{qbinom, qfact, qint, FieldError, QScalar, RatFunc};
use crate::repmod::{weight_spaces, Matrix, MatrixError, ModuleSpec, Rep, RepError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("exp_q(T) times its claimed inverse is not the identity")]
    InverseMismatch,
    #[error("operator requires the equitable basis")]
    NeedsEquitable,
    #[error(transparent)]
    Ncore(#[from] NcoreError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A nilpotent matrix with its index: the least `r` with `T^r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentOperator<F> {
    matrix: Matrix<F>,
    nil_index: u32,
}

impl<F: QScalar> NilpotentOperator<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self, OpError> {
        let dim = matrix.rows() as u32;
        let mut power = Matrix::identity(matrix.rows());
        for r in 0..=dim {
            if power.is_zero() {
                return Ok(NilpotentOperator { matrix, nil_index: r.max(1) });
            }
            power = power.mul(&matrix);
        }
        Err(OpError::NotNilpotent)
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn nil_index(&self) -> u32 {
        self.nil_index
    }

    /// `T^0, T^1, ..., T^(nil_index - 1)`.
    fn powers(&self) -> Vec<Matrix<F>> {
        let mut out = vec![Matrix::identity(self.matrix.rows())];
        for _ in 1..self.nil_index {
            let next = out.last().unwrap().mul(&self.matrix);
            out.push(next);
        }
        out
    }
}

/// `n_axis` acting on a module.
pub fn n_matrix<F: QScalar>(axis: Axis, rep: &Rep<F>) -> Result<NilpotentOperator<F>, OpError> {
    NilpotentOperator::new(rep.evaluate(&n_element(axis)?)?)
}

/// `n_y` on the equitable basis of `L(n, eps)` from the closed form
/// `n_y u_i = -q^(n-i) [n-i+1] u_(i-1)`.
pub fn n_y_closed_form(n: u32) -> Matrix<RatFunc> {
    let d = n as usize + 1;
    let n = i64::from(n);
    let mut m = Matrix::zeros(d, d);
    for i in 1..=n {
        let v = RatFunc::q_pow(n - i) * RatFunc::from(qint(n - i + 1));
        m.set(i as usize - 1, i as usize, -v);
    }
    m
}

/// `n_z u_i = q^-i [i+1] u_(i+1)`.
pub fn n_z_closed_form(n: u32) -> Matrix<RatFunc> {
    let d = n as usize + 1;
    let mut m = Matrix::zeros(d, d);
    for i in 0..i64::from(n) {
        let v = RatFunc::q_pow(-i) * RatFunc::from(qint(i + 1));
        m.set(i as usize + 1, i as usize, v);
    }
    m
}

fn series<F: QScalar>(t: &NilpotentOperator<F>, q: &F, coeff: impl Fn(i64) -> RatFunc) -> Result<Matrix<F>, OpError> {
    // Scale by [top]! so every coefficient is Laurent, then divide by [top], [top-1], ..., [2].
    let top = i64::from(t.nil_index) - 1;
    let top_fact = qfact(top)?;
    let mut acc = Matrix::zeros(t.matrix.rows(), t.matrix.cols());
    for (i, p) in t.powers().iter().enumerate() {
        let i = i as i64;
        let ratio = top_fact.exact_div(&qfact(i)?).expect("[i]! divides [top]!");
        let c = coeff(i) * RatFunc::from(ratio);
        acc = acc.add(&p.scale(&F::lift(&c, q)?));
    }
    let divisors: Vec<_> = (2..=top).rev().map(qint).collect();
    Ok(acc.try_map(|v| v.div_laurent_chain(&divisors, q))?)
}

/// `sum_i q^(i(i-1)/2) / [i]! T^i`, truncated at the nilpotency index.
pub fn exp_q<F: QScalar>(t: &NilpotentOperator<F>, q: &F) -> Result<Matrix<F>, OpError> {
    series(t, q, |i| RatFunc::q_pow(i * (i - 1) / 2))
}

fn exp_q_inverse_series<F: QScalar>(t: &NilpotentOperator<F>, q: &F) -> Result<Matrix<F>, OpError> {
    series(t, q, |i| {
        let v = RatFunc::q_pow(-i * (i - 1) / 2);
        if i % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

/// `sum_i (-1)^i q^(-i(i-1)/2) / [i]! T^i`, checked against [`exp_q`].
pub fn exp_q_inverse<F: QScalar>(t: &NilpotentOperator<F>, q: &F) -> Result<Matrix<F>, OpError> {
    exp_pair(t, q).map(|(_, inv)| inv)
}

/// `exp_q(T)` and its inverse series, with the product checked.
pub fn exp_pair<F: QScalar>(t: &NilpotentOperator<F>, q: &F) -> Result<(Matrix<F>, Matrix<F>), OpError> {
    let e = exp_q(t, q)?;
    let inv = exp_q_inverse_series(t, q)?;
    if !e.mul(&inv).is_identity() {
        return Err(OpError::InverseMismatch);
    }
    Ok((e, inv))
}

/// The `Psi` exponent on the weight space of `lambda`: `(s - lambda^2) / 2`
/// with `s = lambda mod 2`.
pub fn psi_exponent(lambda: i64) -> i64 {
    let s = lambda.rem_euclid(2);
    (s - lambda * lambda) / 2
}

/// The diagonal operator `Psi`, acting on each `x`-weight space.
pub fn psi(rep: &Rep) -> Result<Matrix<RatFunc>, OpError> {
    let mut diag = vec![RatFunc::zero(); rep.dim()];
    for ws in weight_spaces(rep)? {
        for c in ws.columns {
            diag[c] = RatFunc::q_pow(psi_exponent(ws.lambda));
        }
    }
    Ok(Matrix::diag(diag))
}

/// `Psi` on `L(n, eps)` via `q^(2i(n-i) + (s - n^2)/2)`.
pub fn psi_closed_form(n: u32) -> Matrix<RatFunc> {
    let n = i64::from(n);
    let s = n % 2;
    Matrix::diag((0..=n).map(|i| RatFunc::q_pow(2 * i * (n - i) + (s - n * n) / 2)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Provenance {
    Compositional,
    ClosedForm,
}

/// `Omega` on one module together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOperator<F = RatFunc> {
    pub matrix: Matrix<F>,
    pub inverse: Matrix<F>,
    pub provenance: Provenance,
}

/// `Omega = exp_q(n_z) Psi exp_q(n_y)`, with the inverse assembled from the
/// factor inverses.
pub fn omega(rep: &Rep) -> Result<OmegaOperator, OpError> {
    let ops = OperatorFamily::build(rep)?;
    Ok(OmegaOperator {
        matrix: ops.omega,
        inverse: ops.omega_inv,
        provenance: Provenance::Compositional,
    })
}

/// `Omega` on `L(n, eps)` from the q-binomial closed forms; both are
/// independent of `eps`.
pub fn omega_closed_form(n: u32) -> Result<OmegaOperator, OpError> {
    let d = n as usize + 1;
    let n = i64::from(n);
    let s = n % 2;
    let sign = |e: i64| if e % 2 == 0 { RatFunc::one() } else { RatFunc::from_int(-1) };
    let mut m = Matrix::zeros(d, d);
    let mut inv = Matrix::zeros(d, d);
    for j in 0..=n {
        for i in 0..=n - j {
            let v = sign(j) * RatFunc::q_pow((n - i - 1) * j + (s - n * n) / 2) * RatFunc::from(qbinom(n - i, j)?);
            m.set(i as usize, j as usize, v);
        }
        for i in n - j..=n {
            let v = sign(n - j)
                * RatFunc::q_pow((1 - i) * (n - j) + (n * n - s) / 2)
                * RatFunc::from(qbinom(i, n - j)?);
            inv.set(i as usize, j as usize, v);
        }
    }
    Ok(OmegaOperator {
        matrix: m,
        inverse: inv,
        provenance: Provenance::ClosedForm,
    })
}

/// Closed-form `Omega` on a direct sum, blockwise.
pub fn omega_closed_form_sum(spec: &ModuleSpec) -> Result<OmegaOperator, OpError> {
    let blocks = spec
        .summands()
        .iter()
        .map(|&(n, _)| omega_closed_form(n))
        .collect::<Result<Vec<_>, _>>()?;
    let ms: Vec<_> = blocks.iter().map(|b| b.matrix.clone()).collect();
    let is: Vec<_> = blocks.iter().map(|b| b.inverse.clone()).collect();
    Ok(OmegaOperator {
        matrix: Matrix::block_diag(&ms),
        inverse: Matrix::block_diag(&is),
        provenance: Provenance::ClosedForm,
    })
}

/// The scalar by which `Omega^3` acts on `L(n, eps)`:
/// `q^(-n(n+2)/2)` for even `n`, `-q^((1-n)(n+3)/2)` for odd `n`.
pub fn omega_cubed_scalar(n: u32) -> RatFunc {
    let n = i64::from(n);
    if n % 2 == 0 {
        RatFunc::q_pow(-n * (n + 2) / 2)
    } else {
        -RatFunc::q_pow((1 - n) * (n + 3) / 2)
    }
}

/// Every operator the conjugation battery needs, on one module in the
/// equitable basis. The same family can be specialized at a rational `q0`.
#[derive(Clone, Debug)]
pub struct OperatorFamily<F = RatFunc> {
    pub spec: ModuleSpec,
    pub q: F,
    /// `x, y, z` in axis order.
    pub gens: [Matrix<F>; 3],
    pub gens_inv: [Matrix<F>; 3],
    /// `n_x, n_y, n_z`.
    pub n: [NilpotentOperator<F>; 3],
    pub exp: [Matrix<F>; 3],
    pub exp_inv: [Matrix<F>; 3],
    pub psi: Matrix<F>,
    pub psi_inv: Matrix<F>,
    pub omega: Matrix<F>,
    pub omega_inv: Matrix<F>,
}

pub(crate) fn axis_index(a: Axis) -> usize {
    match a {
        Axis::X => 0,
        Axis::Y => 1,
        Axis::Z => 2,
    }
}

impl OperatorFamily<RatFunc> {
    pub fn build(rep: &Rep) -> Result<Self, OpError> {
        if rep.basis() != crate::ncore::Presentation::Equitable {
            return Err(OpError::NeedsEquitable);
        }
        let q = rep.q().clone();
        let gens = Axis::ALL.map(|a| rep.matrix(a.symbol()));
        let gens_inv = [
            rep.matrix(crate::ncore::GenSymbol::XInv),
            gens[1].inverse()?,
            gens[2].inverse()?,
        ];
        let n = [
            n_matrix(Axis::X, rep)?,
            n_matrix(Axis::Y, rep)?,
            n_matrix(Axis::Z, rep)?,
        ];
        let pairs = [exp_pair(&n[0], &q)?, exp_pair(&n[1], &q)?, exp_pair(&n[2], &q)?];
        let [(e0, i0), (e1, i1), (e2, i2)] = pairs;
        let (exp, exp_inv) = ([e0, e1, e2], [i0, i1, i2]);
        let psi = psi(rep)?;
        let psi_inv = Matrix::diag(
            psi.diagonal()
                .iter()
                .map(|c| c.inverse())
                .collect::<Result<_, _>>()?,
        );
        let omega = exp[2].mul(&psi).mul(&exp[1]);
        let omega_inv = exp_inv[1].mul(&psi_inv).mul(&exp_inv[2]);
        Ok(OperatorFamily {
            spec: rep.spec().clone(),
            q,
            gens,
            gens_inv,
            n,
            exp,
            exp_inv,
            psi,
            psi_inv,
            omega,
            omega_inv,
        })
    }

    /// Evaluates every operator at `q = q0`. Inverses of `y` and `z` are
    /// recomputed in the specialized field and nilpotency indices re-derived.
    pub fn specialize(&self, q0: &crate::qfield::Rational) -> Result<OperatorFamily<crate::qfield::Rational>, OpError> {
        crate::qfield::check_admissible(q0)?;
        let sp = |m: &Matrix<RatFunc>| m.try_map(|c| c.specialize(q0));
        let gens = [sp(&self.gens[0])?, sp(&self.gens[1])?, sp(&self.gens[2])?];
        let gens_inv = [sp(&self.gens_inv[0])?, gens[1].inverse()?, gens[2].inverse()?];
        let n = [
            NilpotentOperator::new(sp(self.n[0].matrix())?)?,
            NilpotentOperator::new(sp(self.n[1].matrix())?)?,
            NilpotentOperator::new(sp(self.n[2].matrix())?)?,
        ];
        Ok(OperatorFamily {
            spec: self.spec.clone(),
            q: q0.clone(),
            gens,
            gens_inv,
            n,
            exp: [sp(&self.exp[0])?, sp(&self.exp[1])?, sp(&self.exp[2])?],
            exp_inv: [sp(&self.exp_inv[0])?, sp(&self.exp_inv[1])?, sp(&self.exp_inv[2])?],
            psi: sp(&self.psi)?,
            psi_inv: sp(&self.psi_inv)?,
            omega: sp(&self.omega)?,
            omega_inv: sp(&self.omega_inv)?,
        })
    }
}

impl<F: QScalar> OperatorFamily<F> {
    pub fn gen(&self, a: Axis) -> &Matrix<F> {
        &self.gens[axis_index(a)]
    }

    pub fn gen_inv(&self, a: Axis) -> &Matrix<F> {
        &self.gens_inv[axis_index(a)]
    }

    pub fn n_of(&self, a: Axis) -> &NilpotentOperator<F> {
        &self.n[axis_index(a)]
    }

    pub fn exp_of(&self, a: Axis) -> &Matrix<F> {
        &self.exp[axis_index(a)]
    }

    pub fn exp_inv_of(&self, a: Axis) -> &Matrix<F> {
        &self.exp_inv[axis_index(a)]
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn q_pow(&self, e: i64) -> F {
        self.q.pow_i64(e).expect("q is nonzero")
    }

    pub fn lift(&self, c: &RatFunc) -> Result<F, FieldError> {
        F::lift(c, &self.q)
    }
}
