//! Exact construction and verification of weighted sum formulas for
//! Bernoulli numbers, products of even zeta values, and multiple zeta and
//! zeta-star values with even arguments.
//!
//! Every identity is produced symbolically (coefficient polynomials in `k`)
//! and can be checked against an independent brute-force evaluation using
//! exact rational arithmetic. Even zeta values are handled exactly as
//! rational multiples of powers of `pi^2`.

pub mod bernoulli_sums;
pub mod combinatorics;
pub mod error;
pub mod mzv;
pub mod polynomials;
pub mod quasi_shuffle;
pub mod rationals;
pub mod tables;
pub mod zeta;

pub use error::{Error, Result};
pub use polynomials::{parse_poly, MultiPoly, UniPoly};
pub use rationals::Rational;
