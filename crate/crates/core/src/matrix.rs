//! Square matrices over a [`Scalar`] field.

use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// An `n x n` matrix, `n >= 1`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            entries.extend(r);
        }
        Ok(Matrix { n, entries })
    }

    /// Builds a matrix entry by entry. Panics if `n == 0`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n > 0, "matrix dimension must be at least 1");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::from_fn(n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn diagonal(diag: Vec<T>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                T::zero()
            }
        }))
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(blocks: &[Self]) -> Result<Self> {
        let n: usize = blocks.iter().map(Self::dim).sum();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut out = Self::zero(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out.entries[(offset + i) * n + offset + j] = b[(i, j)].clone();
                }
            }
            offset += b.n;
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.clone() * c.clone()).collect(),
        }
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries[i * self.n + i] = out.entries[i * self.n + i].clone() + c.clone();
        }
        out
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let n = self.n;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = entries[i * n + j].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(Matrix { n, entries })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.n == other.n && self * other == other * self
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact inverse by Gauss-Jordan elimination with nonzero pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p_inv = T::one() / a[(col, col)].clone();
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for j in 0..self.n {
            self.entries.swap(r1 * self.n + j, r2 * self.n + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.n {
            let e = &mut self.entries[r * self.n + j];
            *e = e.clone() * c.clone();
        }
    }

    /// `row[target] -= factor * row[source]`.
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for j in 0..self.n {
            let s = self.entries[source * self.n + j].clone();
            if s.is_zero() {
                continue;
            }
            let e = &mut self.entries[target * self.n + j];
            *e = e.clone() - factor.clone() * s;
        }
    }

    /// Characteristic polynomial `det(xI - self)` by the Faddeev-LeVerrier
    /// recurrence. Only divides by the integers `1..=n`.
    pub fn char_poly(&self) -> Poly<T> {
        let n = self.n;
        // coeffs[k] is the coefficient of x^k.
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
            m = (self * &m).add_scalar(&coeffs[n - k + 1]);
            let am = self * &m;
            coeffs[n - k] = -am.trace() / T::from_count(k);
        }
        Poly::new(coeffs)
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<T>) -> Self {
        let mut acc = Self::zero(self.n);
        for c in p.coefficients().iter().rev() {
            acc = (&acc * self).add_scalar(c);
        }
        acc
    }

    /// Smallest `k >= 1` with `self^k == 0`, if any. The zero matrix has index 1.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut power = self.clone();
        for k in 1..=self.n {
            if power.is_zero() {
                return Some(k);
            }
            power = &power * self;
        }
        None
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.n + j]
    }
}

// The operator forms panic on dimension mismatch; use the `checked_*`
// methods for fallible arithmetic.
impl<'a, T: Scalar> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix dimensions differ")
    }
}

impl<'a, T: Scalar> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix dimensions differ")
    }
}

impl<'a, T: Scalar> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix dimensions differ")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }
}
