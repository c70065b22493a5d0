use std::fmt;

use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

use super::Decomposition;

/// Independent checks of a claimed decomposition `u = d + n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// `d + n == u`.
    pub sum: bool,
    /// `d n == n d`.
    pub commutation: bool,
    /// `n^m == 0` for the recorded multiplicity `m`.
    pub nilpotency: bool,
    pub nilpotency_index: Option<usize>,
    /// `p~` is separable and annihilates `d`.
    pub separability: bool,
    /// `h(u) == d`; `None` when the decomposition carries no certificate.
    pub certificate: Option<bool>,
    /// The annihilator kills `u` and has `p~` as its radical.
    pub annihilator: bool,
}

impl VerificationReport {
    fn failed() -> Self {
        VerificationReport {
            sum: false,
            commutation: false,
            nilpotency: false,
            nilpotency_index: None,
            separability: false,
            certificate: Some(false),
            annihilator: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.sum
            && self.commutation
            && self.nilpotency
            && self.separability
            && self.certificate != Some(false)
            && self.annihilator
    }

    /// `(name, verdict)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, &'static str)> {
        let verdict = |ok: bool| if ok { "pass" } else { "fail" };
        vec![
            ("sum", verdict(self.sum)),
            ("commutation", verdict(self.commutation)),
            ("nilpotency", verdict(self.nilpotency)),
            ("separability", verdict(self.separability)),
            (
                "certificate",
                match self.certificate {
                    Some(ok) => verdict(ok),
                    None => "skipped",
                },
            ),
            ("annihilator", verdict(self.annihilator)),
            ("overall", verdict(self.passed())),
        ]
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, verdict) in self.entries() {
            write!(f, "{name}: {verdict}")?;
            if name == "nilpotency" {
                if let Some(k) = self.nilpotency_index {
                    write!(f, " (index {k})")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks every defining property of the decomposition against `u`.
/// Failures are recorded in the report, never raised.
pub fn verify_decomposition<T: Scalar>(u: &Matrix<T>, dec: &Decomposition<T>) -> VerificationReport {
    let dim = u.dim();
    if dec.d.dim() != dim || dec.n.dim() != dim {
        return VerificationReport::failed();
    }

    let sum = &dec.d + &dec.n == *u;
    let commutation = dec.d.commutes_with(&dec.n);

    let nilpotency_index = dec.n.nilpotency_index();
    let nilpotency = nilpotency_index.is_some_and(|k| k <= dec.multiplicity as usize);

    let p_tilde = &dec.p_tilde;
    let separability = !p_tilde.is_constant()
        && Poly::gcd(p_tilde, &p_tilde.derivative()).is_ok_and(|g| g.is_one())
        && dec.d.eval_poly(p_tilde).is_zero();

    let certificate = dec.h.as_ref().map(|h| u.eval_poly(h) == dec.d);

    let annihilator = !dec.annihilator.is_constant()
        && !p_tilde.is_zero()
        && u.eval_poly(&dec.annihilator).is_zero()
        && p_tilde.divides(&dec.annihilator).unwrap_or(false)
        && dec
            .annihilator
            .divides(&p_tilde.pow(dec.multiplicity))
            .unwrap_or(false);

    VerificationReport {
        sum,
        commutation,
        nilpotency,
        nilpotency_index,
        separability,
        certificate,
        annihilator,
    }
}
