use crate::error::{Error, Result};
use crate::poly::{Poly, SeparablePart};
use crate::scalar::Scalar;

/// Smallest `N >= 0` with `2^N >= m`: the number of Newton steps that
/// guarantees convergence when the largest root multiplicity is `m`.
pub fn iteration_bound(m: u32) -> Result<u32> {
    if m < 1 {
        return Err(Error::InvalidMultiplicity);
    }
    Ok(u32::BITS - (m - 1).leading_zeros())
}

/// A full run of Newton's iteration in `k[x] / (p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientNewton<T> {
    /// The final iterate: `h(u)` is the semisimple part of any `u` annihilated by `p`.
    pub h: Poly<T>,
    /// Number of update steps executed.
    pub iterations: u32,
    /// The monic modulus the iteration ran in.
    pub annihilator: Poly<T>,
    pub separable: SeparablePart<T>,
    /// Inverse of `p_tilde'` modulo `p_bar`; absent when `p` is squarefree.
    pub q: Option<Poly<T>>,
    /// `h_0 = x mod p, h_1, ..., h_N`.
    pub iterates: Vec<Poly<T>>,
}

/// Runs `h_{n+1} = (h_n - p~(h_n) q(h_n)) mod p` from `h_0 = x` until
/// `p~(h_n) == 0 mod p`.
///
/// `p` is made monic first. The iteration never needs the roots of `p`.
pub fn newton_quotient<T: Scalar>(p: &Poly<T>) -> Result<QuotientNewton<T>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let p = p.monic();
    let separable = p.separable_part()?;
    let h0 = Poly::x().rem(&p)?;

    if separable.multiplicity == 1 {
        return Ok(QuotientNewton {
            h: h0.clone(),
            iterations: 0,
            annihilator: p,
            separable,
            q: None,
            iterates: vec![h0],
        });
    }

    let p_tilde = &separable.p_tilde;
    // Coprime by construction in characteristic zero; failure here means the
    // scalar type is not behaving like a field of characteristic zero.
    let q = p_tilde.derivative().mod_inverse(&separable.p_bar)?;
    let bound = iteration_bound(separable.multiplicity)?;

    let mut h = h0;
    let mut iterates = vec![h.clone()];
    let mut iterations = 0;
    loop {
        let residual = p_tilde.compose_mod(&h, &p)?;
        if residual.is_zero() {
            break;
        }
        if iterations == bound {
            return Err(Error::NoConvergence { bound });
        }
        let correction = (&residual * &q.compose_mod(&h, &p)?).rem(&p)?;
        h = &h - &correction;
        iterations += 1;
        iterates.push(h.clone());
    }

    Ok(QuotientNewton {
        h,
        iterations,
        annihilator: p,
        separable,
        q: Some(q),
        iterates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;
    type P = Poly<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    #[test]
    fn bound_examples() {
        assert_eq!(iteration_bound(1), Ok(0));
        assert_eq!(iteration_bound(2), Ok(1));
        assert_eq!(iteration_bound(3), Ok(2));
        assert_eq!(iteration_bound(4), Ok(2));
        assert_eq!(iteration_bound(5), Ok(3));
        assert_eq!(iteration_bound(8), Ok(3));
        assert_eq!(iteration_bound(0), Err(Error::InvalidMultiplicity));
    }

    #[test]
    fn squarefree_input_is_already_semisimple() {
        let p = P::new(vec![q(-2), q(0), q(1)]);
        let run = newton_quotient(&p).unwrap();
        assert_eq!((run.h, run.iterations, run.q), (P::x(), 0, None));
    }

    #[test]
    fn double_root_at_zero() {
        let run = newton_quotient(&P::monomial(q(1), 2)).unwrap();
        assert_eq!(run.h, P::zero());
        assert_eq!(run.iterations, 1);
        assert_eq!(run.q, Some(P::one()));
        assert_eq!(run.iterates, vec![P::x(), P::zero()]);
    }

    #[test]
    fn linear_annihilator_gives_the_root() {
        let run = newton_quotient(&P::new(vec![q(-10), q(2)])).unwrap();
        assert_eq!(run.h, P::constant(q(5)));
    }

    #[test]
    fn non_monic_input_is_normalized() {
        let p = P::linear(q(3)).pow(2).scale(&q(-4));
        let run = newton_quotient(&p).unwrap();
        assert_eq!(run.annihilator, P::linear(q(3)).pow(2));
        assert_eq!(run.h, P::constant(q(3)));
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(newton_quotient(&P::constant(q(2))), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn iterations_respect_the_bound() {
        for m in 1..=9u32 {
            let p = &P::linear(q(1)).pow(m) * &P::linear(q(-2));
            let run = newton_quotient(&p).unwrap();
            assert!(run.iterations <= iteration_bound(m).unwrap());
            assert_eq!(run.h.eval(&q(1)), q(1));
            assert_eq!(run.h.eval(&q(-2)), q(-2));
        }
    }
}
