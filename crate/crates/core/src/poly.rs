//! Dense univariate polynomials over a [`Scalar`] field.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Degree of a polynomial. The zero polynomial sits below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// A polynomial stored as its coefficient list, lowest degree first.
///
/// The list never ends in a zero coefficient; the zero polynomial is the
/// empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Output of [`Poly::extended_gcd`]: `u * a + v * b == gcd`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedGcd<T> {
    pub gcd: Poly<T>,
    pub u: Poly<T>,
    pub v: Poly<T>,
}

/// The radical of a polynomial and the data Newton's iteration needs from it.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparablePart<T> {
    /// Monic squarefree polynomial with the same roots as the input.
    pub p_tilde: Poly<T>,
    /// The cofactor `p / p_tilde`.
    pub p_bar: Poly<T>,
    /// Smallest `m` such that `p` divides `p_tilde^m`.
    pub multiplicity: u32,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::from_count(i) * c.clone())
                .collect(),
        )
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Euclidean division: `self == q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lc = divisor
            .leading_coefficient()
            .ok_or(Error::DivisionByZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = T::one() / lc.clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top * lc_inv.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = rem[k + j].clone() - factor.clone() * d.clone();
                rem[k + j] = t;
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
        }
        Ok(r0.monic())
    }

    /// Bezout cofactors with `u * a + v * b == gcd(a, b)`, `gcd` monic.
    ///
    /// The cofactors are the minimal-degree pair produced by the Euclidean
    /// remainder sequence.
    pub fn extended_gcd(a: &Self, b: &Self) -> Result<ExtendedGcd<T>> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = T::one() / r0.leading_coefficient().expect("nonzero gcd").clone();
        Ok(ExtendedGcd {
            gcd: r0.scale(&inv),
            u: s0.scale(&inv),
            v: t0.scale(&inv),
        })
    }

    /// The inverse of `self` in `k[x] / (modulus)`, of degree below the modulus.
    pub fn mod_inverse(&self, modulus: &Self) -> Result<Self> {
        match modulus.degree() {
            Degree::NegInfinity => return Err(Error::DivisionByZeroPolynomial),
            Degree::Finite(0) => return Err(Error::ConstantModulus),
            Degree::Finite(_) => {}
        }
        let eg = Self::extended_gcd(self, modulus)?;
        if !eg.gcd.is_one() {
            return Err(Error::NotCoprime);
        }
        eg.u.rem(modulus)
    }

    /// `self(g) mod modulus`, by Horner's rule with a reduction after every step.
    pub fn compose_mod(&self, g: &Self, modulus: &Self) -> Result<Self> {
        if modulus.is_constant() {
            return Err(if modulus.is_zero() {
                Error::DivisionByZeroPolynomial
            } else {
                Error::ConstantModulus
            });
        }
        let g = g.rem(modulus)?;
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * &g) + &Self::constant(c.clone())).rem(modulus)?;
        }
        Ok(acc)
    }

    /// `p~ = p / gcd(p, p')`, `p_bar = p / p~`, and the largest root multiplicity.
    ///
    /// Valid in characteristic zero, where `p / gcd(p, p')` is the radical.
    pub fn separable_part(&self) -> Result<SeparablePart<T>> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let g = Self::gcd(self, &self.derivative())?;
        let p_tilde = self.div_rem(&g)?.0.monic();
        let (p_bar, r) = self.div_rem(&p_tilde)?;
        debug_assert!(r.is_zero());
        let multiplicity = if p_bar.is_constant() {
            1
        } else {
            let mut k = 1;
            let mut power = p_tilde.clone();
            while !power.is_zero() {
                power = (&power * &p_tilde).rem(self)?;
                k += 1;
            }
            k
        };
        Ok(SeparablePart {
            p_tilde,
            p_bar,
            multiplicity,
        })
    }

    /// Compares by degree only.
    pub fn cmp_degree(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree())
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl<T: Scalar> $imp for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}
