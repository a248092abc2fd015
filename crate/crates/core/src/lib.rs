//! Exact-arithmetic toolkit for integer-sequence experiments around the
//! Rueppel and Catalan families: truncated formal power series over exact
//! rings, Hankel determinant transforms, Stieltjes and Jacobi continued
//! fractions, Riordan arrays, a catalog of named sequences, and a harness
//! that checks a registry of identities and conjectured patterns to a
//! configurable depth.
//!
//! Everything is exact: big integers, big rationals, integer polynomials in
//! two parameters `b` and `c`, and their fraction field. There is no
//! floating point anywhere.

pub mod catalog;
pub mod cfrac;
pub mod exact;
pub mod hankel;
pub mod riordan;
pub mod series;
pub mod verify;

pub use exact::{ArithError, FieldRing, Integer, Poly2, RatFunc, Rational, Ring, ToField};
pub use series::{Sequence, Series};
