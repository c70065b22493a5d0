//! Jordan-Chevalley decomposition `U = D + N` by Chevalley's Newton iteration.
//!
//! The default engine, [`jordan_chevalley`], runs Newton's method on
//! polynomials in `k[x] / (p)` for an annihilator `p` of `U`, producing a
//! certificate polynomial `h` with `D = h(U)`. [`newton_matrix`] runs the same
//! iteration directly on matrices and serves as an independent cross-check.
//! Neither path ever computes an eigenvalue.

mod crt;
mod newton;
mod verify;

pub use crt::{crt_solve, CrtSystem};
pub use newton::{iteration_bound, newton_quotient, QuotientNewton};
pub use verify::{verify_decomposition, VerificationReport};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `U = d + n` with `d` semisimple, `n` nilpotent and `d n = n d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<T> {
    pub d: Matrix<T>,
    pub n: Matrix<T>,
    /// Certificate with `d = h(U)`, reduced modulo the annihilator.
    /// The matrix-iteration path does not produce one.
    pub h: Option<Poly<T>>,
    pub iterations: u32,
    /// Monic annihilating polynomial of `U` the iteration ran with.
    pub annihilator: Poly<T>,
    pub p_tilde: Poly<T>,
    pub p_bar: Poly<T>,
    /// Largest root multiplicity of the annihilator; `n^multiplicity == 0`.
    pub multiplicity: u32,
}

fn checked_annihilator<T: Scalar>(u: &Matrix<T>, annihilator: &Poly<T>) -> Result<Poly<T>> {
    if annihilator.is_constant() || !u.eval_poly(annihilator).is_zero() {
        return Err(Error::InvalidAnnihilator);
    }
    Ok(annihilator.monic())
}

/// Decomposes `u` using the quotient-ring Newton iteration.
///
/// With no annihilator the characteristic polynomial is used. A supplied
/// annihilator is checked against `u` before use.
pub fn jordan_chevalley<T: Scalar>(
    u: &Matrix<T>,
    annihilator: Option<&Poly<T>>,
) -> Result<Decomposition<T>> {
    let p = match annihilator {
        Some(a) => checked_annihilator(u, a)?,
        None => u.char_poly(),
    };
    let run = newton_quotient(&p)?;
    Ok(from_quotient_run(u, run))
}

/// Builds the decomposition of `u` from a finished quotient-ring run whose
/// annihilator kills `u`.
pub fn from_quotient_run<T: Scalar>(u: &Matrix<T>, run: QuotientNewton<T>) -> Decomposition<T> {
    let d = u.eval_poly(&run.h);
    let n = u - &d;
    Decomposition {
        d,
        n,
        h: Some(run.h),
        iterations: run.iterations,
        annihilator: run.annihilator,
        p_tilde: run.separable.p_tilde,
        p_bar: run.separable.p_bar,
        multiplicity: run.separable.multiplicity,
    }
}

/// Decomposes `u` by iterating `D_{n+1} = D_n - p~(D_n) q(D_n)` on matrices.
pub fn newton_matrix<T: Scalar>(u: &Matrix<T>, annihilator: &Poly<T>) -> Result<Decomposition<T>> {
    let p = checked_annihilator(u, annihilator)?;
    let separable = p.separable_part()?;
    let mut d = u.clone();
    let mut iterations = 0;

    if separable.multiplicity > 1 {
        let p_tilde = &separable.p_tilde;
        let q = p_tilde.derivative().mod_inverse(&separable.p_bar)?;
        let bound = iteration_bound(separable.multiplicity)?;
        loop {
            let residual = d.eval_poly(p_tilde);
            if residual.is_zero() {
                break;
            }
            if iterations == bound {
                return Err(Error::NoConvergence { bound });
            }
            d = &d - &(&residual * &d.eval_poly(&q));
            iterations += 1;
            debug_assert!(d.eval_poly(&p).is_zero(), "iterate left the annihilator's zero set");
        }
    }

    let n = u - &d;
    Ok(Decomposition {
        d,
        n,
        h: None,
        iterations,
        annihilator: p,
        p_tilde: separable.p_tilde,
        p_bar: separable.p_bar,
        multiplicity: separable.multiplicity,
    })
}

/// `U = D V` with `V = I + D^{-1} N` unipotent and commuting with `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplicative<T> {
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

pub fn multiplicative<T: Scalar>(u: &Matrix<T>) -> Result<Multiplicative<T>> {
    let dec = jordan_chevalley(u, None)?;
    // D and U share a characteristic polynomial, so D is invertible iff U is.
    let d_inv = dec.d.inverse()?;
    let v = (&d_inv * &dec.n).add_scalar(&T::one());
    Ok(Multiplicative { d: dec.d, v })
}
