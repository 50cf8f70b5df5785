use std::fmt;

use super::{GaussianRational, Scalar};
use crate::error::{Error, Result};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

pub type ExactMatrix = Matrix<GaussianRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Transpose,
    EntrywiseConj,
    Negate,
}

/// Outcome of testing `A = λB`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixRelation {
    Equal,
    Negatives,
    ScalarMultiple(GaussianRational),
    Unrelated,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Matrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.dim.max(1))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    /// Exact product; zero entries of either factor are skipped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with block layout `A[i][j]·B`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a.clone() * b.clone());
                        }
                    }
                }
            }
        }
        out
    }

    pub fn unary(&self, op: UnaryOp) -> Self {
        match op {
            UnaryOp::Transpose => self.transpose(),
            UnaryOp::EntrywiseConj => self.conj(),
            UnaryOp::Negate => self.neg(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| if x.is_zero() { T::zero() } else { s.clone() * x.clone() })
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Matrix { dim: self.dim, data })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `Some(s)` when the matrix equals `s·I`.
    pub fn as_scalar_identity(&self) -> Option<T> {
        let s = self.get(0, 0).clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let v = self.get(r, c);
                let ok = if r == c { *v == s } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }
}

impl ExactMatrix {
    /// `Some(±1)` when the matrix is `±I`.
    pub fn identity_sign(&self) -> Option<i8> {
        self.as_scalar_identity().and_then(|s| s.as_sign())
    }

    /// Exactly one nonzero per row and column, each in {±1, ±i}.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.dim;
        let mut col_used = vec![false; n];
        for r in 0..n {
            let mut found = false;
            for c in 0..n {
                let v = self.get(r, c);
                if v.is_zero() {
                    continue;
                }
                let unit = v.norm_sqr() == num_rational::BigRational::from_integer(1.into()) && (v.is_real() || v.is_imaginary());
                if found || col_used[c] || !unit {
                    return false;
                }
                found = true;
                col_used[c] = true;
            }
            if !found {
                return false;
            }
        }
        true
    }

    pub fn compare(&self, other: &Self) -> Result<MatrixRelation> {
        mat_compare(self, other)
    }
}

/// Detects `A = λB`. The first position where either matrix is nonzero proposes λ.
pub fn mat_compare(a: &ExactMatrix, b: &ExactMatrix) -> Result<MatrixRelation> {
    a.check_dim(b)?;
    let pivot = a.data.iter().zip(&b.data).position(|(x, y)| !x.is_zero() || !y.is_zero());
    let Some(p) = pivot else {
        return Ok(MatrixRelation::Equal);
    };
    if b.data[p].is_zero() {
        return Ok(MatrixRelation::Unrelated);
    }
    let lambda = a.data[p].checked_div(&b.data[p])?;
    let consistent = a.data.iter().zip(&b.data).all(|(x, y)| *x == &lambda * y);
    if !consistent {
        return Ok(MatrixRelation::Unrelated);
    }
    Ok(match lambda.as_sign() {
        Some(1) => MatrixRelation::Equal,
        Some(_) => MatrixRelation::Negatives,
        None => MatrixRelation::ScalarMultiple(lambda),
    })
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn m2(a: [(i64, i64); 4]) -> ExactMatrix {
        ExactMatrix::from_rows(vec![
            vec![g(a[0].0, a[0].1), g(a[1].0, a[1].1)],
            vec![g(a[2].0, a[2].1), g(a[3].0, a[3].1)],
        ])
        .unwrap()
    }

    fn s1() -> ExactMatrix {
        m2([(0, 0), (1, 0), (1, 0), (0, 0)])
    }
    fn s2() -> ExactMatrix {
        m2([(0, 0), (0, -1), (0, 1), (0, 0)])
    }
    fn s3() -> ExactMatrix {
        m2([(0, 1), (0, 0), (0, 0), (0, -1)])
    }

    #[test]
    fn identity_products() {
        let i4 = ExactMatrix::identity(4);
        assert_eq!(i4.mul(&i4).unwrap(), i4);
        assert_eq!(s1().mul(&s1()).unwrap(), ExactMatrix::identity(2));
        assert_eq!(s3().mul(&s3()).unwrap(), ExactMatrix::identity(2).neg());
    }

    #[test]
    fn mul_dimension_mismatch() {
        let e = ExactMatrix::identity(2).mul(&ExactMatrix::identity(4));
        assert_eq!(e, Err(Error::DimensionMismatch { left: 2, right: 4 }));
    }

    #[test]
    fn kron_layout() {
        let e1 = s1().kron(&ExactMatrix::identity(2));
        assert_eq!(*e1.get(0, 2), g(1, 0));
        assert_eq!(*e1.get(1, 3), g(1, 0));
        assert_eq!(e1.nonzero_count(), 4);
        // σ3⊗σ1 = blockdiag(iσ1, -iσ1)
        let e2 = s3().kron(&s1());
        assert_eq!(*e2.get(0, 1), g(0, 1));
        assert_eq!(*e2.get(1, 0), g(0, 1));
        assert_eq!(*e2.get(2, 3), g(0, -1));
        assert_eq!(*e2.get(3, 2), g(0, -1));
        assert_eq!(e2.nonzero_count(), 4);
        let i2 = ExactMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ExactMatrix::identity(4));
    }

    #[test]
    fn unary_ops() {
        let e3 = s2().kron(&ExactMatrix::identity(2));
        assert_eq!(e3.unary(UnaryOp::Transpose), e3.neg());
        let e2 = s3().kron(&s1());
        assert_eq!(e2.unary(UnaryOp::EntrywiseConj), e2.neg());
        assert_eq!(ExactMatrix::identity(3).transpose(), ExactMatrix::identity(3));
    }

    #[test]
    fn compare_cases() {
        let e3 = s2().kron(&ExactMatrix::identity(2));
        assert_eq!(mat_compare(&e3, &e3).unwrap(), MatrixRelation::Equal);
        assert_eq!(mat_compare(&e3.transpose(), &e3).unwrap(), MatrixRelation::Negatives);
        let i2 = ExactMatrix::identity(2);
        assert_eq!(
            mat_compare(&i2.scale(&g(0, 1)), &i2).unwrap(),
            MatrixRelation::ScalarMultiple(g(0, 1))
        );
        assert_eq!(mat_compare(&s1(), &s3()).unwrap(), MatrixRelation::Unrelated);
        assert_eq!(
            mat_compare(&ExactMatrix::zeros(2), &s1()).unwrap(),
            MatrixRelation::ScalarMultiple(g(0, 0))
        );
        assert_eq!(mat_compare(&s1(), &ExactMatrix::zeros(2)).unwrap(), MatrixRelation::Unrelated);
    }

    #[test]
    fn signed_permutation_closed_under_mul() {
        let p = s1().kron(&s2()).mul(&s3().kron(&s1())).unwrap();
        assert!(p.is_signed_permutation());
        assert!(!ExactMatrix::zeros(2).is_signed_permutation());
    }

    #[test]
    fn commutators() {
        assert!(s1().anticommutator(&s2()).unwrap().is_zero());
        assert!(!s1().commutator(&s2()).unwrap().is_zero());
    }
}
