//! Exact-rational computer algebra for monoidal Hom-structures: objects with
//! a distinguished automorphism, their twisted associativity constraints,
//! and the (co/bi)algebras, Lie algebras and modules living over them.
//!
//! Everything is generic over a [`Scalar`] field; the crate-root aliases fix
//! it to arbitrary-precision rationals, which is what the CLI and the checks
//! use.

pub mod catalog;
pub mod cli;
pub mod coherence;
pub mod error;
pub mod homalgebra;
pub mod homgroup;
pub mod homlie;
pub mod hommodules;
pub mod homspace;
pub mod kernel;
pub mod report;
pub mod scalar;
pub mod tensoralg;

pub use error::{Error, Result};
pub use report::{AxiomResult, Report, Witness};
pub use scalar::Scalar;

/// Exact rational numbers.
pub type Q = num_rational::BigRational;
pub type QMatrix = kernel::Matrix<Q>;
pub type QSubspace = kernel::Subspace<Q>;
pub type QTensor3 = kernel::Tensor3<Q>;
