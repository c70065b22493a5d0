use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Congruences `h = root (mod (x - root)^multiplicity)` over distinct roots.
#[derive(Debug, Clone, PartialEq)]
pub struct CrtSystem<T> {
    pairs: Vec<(T, u32)>,
}

impl<T: Scalar> CrtSystem<T> {
    pub fn new(pairs: Vec<(T, u32)>) -> Result<Self> {
        for (i, (root, mult)) in pairs.iter().enumerate() {
            if *mult < 1 {
                return Err(Error::InvalidMultiplicity);
            }
            if pairs[..i].iter().any(|(r, _)| r == root) {
                return Err(Error::DuplicateRoot);
            }
        }
        Ok(CrtSystem { pairs })
    }

    pub fn pairs(&self) -> &[(T, u32)] {
        &self.pairs
    }

    /// `prod (x - root)^multiplicity`.
    pub fn modulus(&self) -> Poly<T> {
        self.pairs
            .iter()
            .fold(Poly::one(), |acc, (r, m)| &acc * &Poly::linear(r.clone()).pow(*m))
    }
}

/// The unique `h` with `deg h < sum(multiplicities)` solving the system.
///
/// Solved incrementally: each new congruence is merged with the running
/// solution through a Bezout identity between the two moduli.
pub fn crt_solve<T: Scalar>(system: &CrtSystem<T>) -> Result<Poly<T>> {
    let mut pairs = system.pairs.iter();
    let Some((root, mult)) = pairs.next() else {
        return Ok(Poly::zero());
    };
    let mut h = Poly::constant(root.clone());
    let mut modulus = Poly::linear(root.clone()).pow(*mult);
    for (root, mult) in pairs {
        let local = Poly::linear(root.clone()).pow(*mult);
        // u * modulus + v * local == 1
        let eg = Poly::extended_gcd(&modulus, &local)?;
        if !eg.gcd.is_one() {
            return Err(Error::DuplicateRoot);
        }
        let keep_old = &eg.v * &local;
        let take_new = (&eg.u * &modulus).scale(root);
        let combined = &modulus * &local;
        h = (&(&h * &keep_old) + &take_new).rem(&combined)?;
        modulus = combined;
    }
    Ok(h)
}
