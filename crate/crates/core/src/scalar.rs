//! The scalar field the algebra runs over.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field element with exact equality.
///
/// Every algorithm in this crate decides things by comparing values to zero
/// (polynomial remainders, nilpotency, stopping rules), so implementors are
/// expected to be exact fields of characteristic zero such as
/// [`BigRational`](num_rational::BigRational). Floating-point types satisfy
/// the bounds but give meaningless answers beyond toy inputs.
pub trait Scalar:
    Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// Embeds a small non-negative integer. Panics if the type cannot hold it.
    fn from_count(k: usize) -> Self {
        Self::from_usize(k).expect("scalar type cannot represent a small integer")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}
