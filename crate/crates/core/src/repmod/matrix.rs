use std::fmt;

use thiserror::Error;

use crate::qfield::Field;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have unequal lengths")]
    Ragged,
}

/// A dense matrix, stored row-major. Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero_elem(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag((0..n).map(|_| F::one_elem()).collect())
    }

    pub fn diag(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<F> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero_elem)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    fn all_off(&self, skip: impl Fn(usize, usize) -> bool) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| skip(i, j) || self.get(i, j).is_zero_elem()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.all_off(|i, j| i == j)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.all_off(|i, j| j <= i)
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.all_off(|i, j| i <= j)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(F::neg_ref)
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero_elem() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero_elem(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Block-diagonal sum, blocks in the given order.
    pub fn block_diag(blocks: &[Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Inverse by fraction-free (Bareiss) elimination on `[A | I]` followed by
    /// back-substitution.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one_elem() } else { F::zero_elem() }));
                r
            })
            .collect();
        let mut prev = F::one_elem();
        for k in 0..n {
            let p = (k..n).find(|&i| !m[i][k].is_zero_elem()).ok_or(MatrixError::Singular)?;
            m.swap(k, p);
            for i in k + 1..n {
                for j in k + 1..w {
                    let v = m[k][k].mul_ref(&m[i][j]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = v.div_ref(&prev).map_err(|_| MatrixError::Singular)?;
                }
                m[i][k] = F::zero_elem();
            }
            prev = m[k][k].clone();
        }
        let mut inv = Self::zeros(n, n);
        for col in 0..n {
            for i in (0..n).rev() {
                let mut acc = m[i][n + col].clone();
                for (j, mij) in m[i].iter().enumerate().take(n).skip(i + 1) {
                    acc = acc.sub_ref(&mij.mul_ref(inv.get(j, col)));
                }
                inv.set(i, col, acc.div_ref(&m[i][i]).map_err(|_| MatrixError::Singular)?);
            }
        }
        Ok(inv)
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{RatFunc, Rational};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn rational_inverse() {
        let a = Matrix::from_rows(vec![vec![r(0), r(2), r(1)], vec![r(1), r(1), r(0)], vec![r(3), r(0), r(1)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        let sing = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)]]).unwrap();
        assert_eq!(sing.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn ratfunc_inverse() {
        let q = RatFunc::q();
        let a = Matrix::from_rows(vec![
            vec![q.clone(), RatFunc::one()],
            vec![RatFunc::q_pow(-1) - RatFunc::q(), RatFunc::q_pow(2)],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
    }

    #[test]
    fn shape_predicates_and_display() {
        let d = Matrix::diag(vec![r(1), r(-2)]);
        assert!(d.is_diagonal() && d.is_lower_triangular() && d.is_upper_triangular());
        let l = Matrix::from_rows(vec![vec![r(1), r(0)], vec![r(5), r(1)]]).unwrap();
        assert!(l.is_lower_triangular() && !l.is_upper_triangular());
        assert_eq!(l.to_string(), "[[1, 0], [5, 1]]");
        let b = Matrix::block_diag(&[d, Matrix::identity(1)]);
        assert_eq!(b.to_string(), "[[1, 0, 0], [0, -2, 0], [0, 0, 1]]");
    }
}
