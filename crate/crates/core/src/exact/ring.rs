//! Ring and field abstractions shared by every exact coefficient type.
//!
//! All four coefficient types ([`Integer`], [`Rational`], [`Poly2`],
//! [`RatFunc`]) implement [`Ring`]; the two fraction fields additionally
//! implement [`FieldRing`]. Generic code (power series, determinants,
//! continued fractions) is written against these traits only.
//!
//! [`Integer`]: crate::exact::Integer
//! [`Rational`]: crate::exact::Rational
//! [`Poly2`]: crate::exact::Poly2
//! [`RatFunc`]: crate::exact::RatFunc

use std::fmt;

use thiserror::Error;

/// Errors raised by exact coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomial degree {0} exceeds the configured bound {1}")]
    DegreeOverflow(u32, u32),
    #[error("polynomial contains the variable {0}, which is not allowed here")]
    UnexpectedVariable(char),
}

/// A commutative ring with exact arithmetic and decidable exact division.
///
/// `exact_div` must succeed precisely when the divisor is nonzero and divides
/// the dividend in the ring; for fields this is ordinary division.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Sized + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn is_unit(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError>;

    /// Multiplicative inverse of a unit, `None` for non-units.
    fn unit_inv(&self) -> Option<Self>;

    /// A common divisor of `self` and `rhs` suitable for content stripping.
    ///
    /// The default (the constant one) makes stripping a no-op; rings where
    /// shared factors accumulate (integers, polynomials) override this.
    fn content_gcd(&self, rhs: &Self) -> Self {
        let _ = rhs;
        Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// A ring in which every nonzero element is a unit.
pub trait FieldRing: Ring {
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Associates a ring with its fraction field and provides the embedding.
///
/// Continued-fraction expansion of a series over `R` yields parameters in
/// `R::Field`.
pub trait ToField: Ring {
    type Field: FieldRing;

    fn to_field(&self) -> Self::Field;

    /// The field element `num / den`.
    fn field_ratio(num: &Self, den: &Self) -> Result<Self::Field, ArithError>;
}
