//! Matrix powers and exponentials through the decomposition.
//!
//! Since `D` and `N` commute, `A^m = sum_j C(m, j) D^{m-j} N^j` and
//! `e^{tA} = e^{tD} e^{tN}`, where both sums stop once `N^j` vanishes. Only the
//! nilpotent factor `e^{tN}` is produced here: it is a polynomial in `t` with
//! exact coefficients. `e^{tD}` needs the eigenvalues of `D` and is left to
//! the caller.

use std::ops::{Index, Mul};

use crate::decomp::jordan_chevalley;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `u^m` via the binomial expansion over `u = D + N`.
pub fn matrix_power<T: Scalar>(u: &Matrix<T>, m: u64) -> Result<Matrix<T>> {
    if m == 0 {
        return Ok(Matrix::identity(u.dim()));
    }
    let dec = jordan_chevalley(u, None)?;
    let index = dec
        .n
        .nilpotency_index()
        .expect("nilpotent part of a decomposition is nilpotent");
    let top = m.min(index as u64 - 1);

    let mut n_powers = vec![Matrix::identity(u.dim())];
    for j in 1..=top as usize {
        let next = &n_powers[j - 1] * &dec.n;
        n_powers.push(next);
    }

    let binomials = binomials(m, top);
    let mut d_power = dec.d.pow(m - top);
    let mut acc = Matrix::zero(u.dim());
    for j in (0..=top as usize).rev() {
        let term = (&d_power * &n_powers[j]).scale(&binomials[j]);
        acc = &acc + &term;
        if j > 0 {
            d_power = &d_power * &dec.d;
        }
    }
    Ok(acc)
}

/// `C(m, 0), ..., C(m, top)` via `C(m, j) = C(m, j-1) (m - j + 1) / j`.
fn binomials<T: Scalar>(m: u64, top: u64) -> Vec<T> {
    let mut out = vec![T::one()];
    for j in 1..=top {
        let num = T::from_u64(m - j + 1).expect("scalar type cannot represent exponent");
        let prev = out[j as usize - 1].clone();
        out.push(prev * num / T::from_u64(j).expect("scalar type cannot represent index"));
    }
    out
}

/// A square matrix whose entries are polynomials in a formal parameter `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix<T> {
    n: usize,
    entries: Vec<Poly<T>>,
}

impl<T: Scalar> PolyMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Poly<T>) -> Self {
        assert!(n > 0, "matrix dimension must be at least 1");
        PolyMatrix {
            n,
            entries: (0..n * n).map(|k| f(k / n, k % n)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    /// The constant polynomial matrix `m`.
    pub fn constant(m: &Matrix<T>) -> Self {
        Self::from_fn(m.dim(), |i, j| Poly::constant(m[(i, j)].clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly<T>]> {
        self.entries.chunks(self.n)
    }

    /// Substitutes a value for `t`.
    pub fn eval(&self, t: &T) -> Matrix<T> {
        Matrix::from_fn(self.n, |i, j| self[(i, j)].eval(t))
    }

    /// Entrywise derivative in `t`.
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(i, j)].derivative())
    }

    /// Largest entry degree.
    pub fn degree(&self) -> crate::poly::Degree {
        self.entries
            .iter()
            .map(Poly::degree)
            .max()
            .unwrap_or(crate::poly::Degree::NegInfinity)
    }
}

impl<T> Index<(usize, usize)> for PolyMatrix<T> {
    type Output = Poly<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Poly<T> {
        &self.entries[i * self.n + j]
    }
}

impl<'a, T: Scalar> Mul<&'a PolyMatrix<T>> for &'a PolyMatrix<T> {
    type Output = PolyMatrix<T>;

    fn mul(self, rhs: &'a PolyMatrix<T>) -> PolyMatrix<T> {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        PolyMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(Poly::zero(), |acc, k| &acc + &(&self[(i, k)] * &rhs[(k, j)]))
        })
    }
}

/// `e^{tN} = sum_{j=0}^{k} t^j / j! N^j`, where `N^{k+1} = 0`.
pub fn exp_nilpotent_factor<T: Scalar>(n: &Matrix<T>) -> Result<PolyMatrix<T>> {
    let index = n.nilpotency_index().ok_or(Error::NotNilpotent)?;
    let dim = n.dim();
    // coefficient matrices N^j / j!
    let mut terms = vec![Matrix::identity(dim)];
    for j in 1..index {
        let next = (&terms[j - 1] * n).scale(&(T::one() / T::from_count(j)));
        terms.push(next);
    }
    Ok(PolyMatrix::from_fn(dim, |r, c| {
        Poly::new(terms.iter().map(|m| m[(r, c)].clone()).collect())
    }))
}
