//! Exact coefficient rings: arbitrary-precision integers and rationals,
//! integer polynomials in `b` and `c`, and their fraction field.

mod integer;
mod poly2;
mod ratfunc;
mod rational;
mod ring;

pub use integer::Integer;
pub use poly2::{degree_bound, set_degree_bound, Exponents, Poly2, DEFAULT_DEGREE_BOUND};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use ring::{ArithError, FieldRing, Ring, ToField};
