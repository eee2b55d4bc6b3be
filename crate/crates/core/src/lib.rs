//! Exact computations for equal-rank pairs and characteristic classes.
//!
//! Everything here is carried out in arbitrary-precision rational
//! arithmetic; no floating point is used anywhere.
//!
//! - [`rootkit`]: root systems from Cartan matrices, weights, ρ, reflections.
//! - [`pairs`]: compact/noncompact gradings of a root system.
//! - [`dseries`]: Weyl dimensions, formal degrees and the trace factor
//!   relating `τ_G ∘ DInd` to `τ_K`.
//! - [`genera`]: truncated power series, multiplicative genera and
//!   characteristic numbers of complex projective spaces.

pub mod dseries;
pub mod error;
pub mod genera;
mod linalg;
pub mod pairs;
pub mod rootkit;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
