//! The scalar field every structure is defined over.
//!
//! All algorithms only use field operations and exact equality, so any type
//! satisfying [`Scalar`] works. The crate-root aliases fix the rationals.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub trait Scalar:
    Num
    + Neg<Output = Self>
    + Clone
    + PartialEq
    + Debug
    + Display
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar type")
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }
}

impl<T> Scalar for T where
    T: Num
        + Neg<Output = T>
        + Clone
        + PartialEq
        + Debug
        + Display
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}
