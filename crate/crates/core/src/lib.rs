//! Exact computations around Harish-Chandra's discrete-series criterion.
//!
//! The crate models a real reductive Lie algebra by the root system of its
//! complexification together with the Cartan involution acting on a
//! maximally split Cartan subalgebra. On top of that it decides whether the
//! involution is realised by a Weyl group element (equivalently whether a
//! compact Cartan subalgebra exists), tests strong regularity in the
//! extended Weyl group, implements the formal exponent calculus of the
//! square-integrability condition and the translation-principle search for
//! strongly regular infinitesimal characters.
//!
//! All arithmetic is exact. Core types are generic over [`Scalar`]; the
//! aliases below fix the usual instantiations.

pub mod criterion;
pub mod error;
pub mod exponents;
pub mod linalg;
pub mod realform;
pub mod rootdata;
pub mod scalar;
pub mod translation;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals; the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; faster, panics on overflow in debug builds.
pub type Rational64 = num_rational::Rational64;

pub type RootSystem64 = rootdata::RootSystem<Rational64>;
pub type Weight64 = rootdata::Weight<Rational64>;
