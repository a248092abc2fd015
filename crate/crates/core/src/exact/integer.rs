//! Arbitrary-precision integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::ring::{ArithError, Ring, ToField};
use super::Rational;

/// An arbitrary-precision integer. Sign and magnitude are those of the
/// wrapped [`BigInt`]; the zero value has sign 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Integer(BigInt);

impl Integer {
    pub fn new(n: i64) -> Self {
        Integer(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Integer(n)
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.0.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Integer(self.0.abs())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Integer(self.0.gcd(&other.0))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Integer(self.0.lcm(&other.0))
    }

    /// Nonnegative residue of `self` modulo `m` (`m > 0`).
    pub fn rem_euclid(&self, m: &Self) -> Self {
        Integer(self.0.mod_floor(&m.0))
    }

    pub fn to_i64(&self) -> Option<i64> {
        i64::try_from(&self.0).ok()
    }

    /// Exact integer square root, if `self` is a perfect square.
    pub fn perfect_sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        let root = self.0.sqrt();
        if &root * &root == self.0 {
            Some(Integer(root))
        } else {
            None
        }
    }
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer(BigInt::zero())
    }

    fn one() -> Self {
        Integer(BigInt::one())
    }

    fn from_i64(n: i64) -> Self {
        Integer::new(n)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.abs().is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Integer(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Integer(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Integer(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Integer(-&self.0)
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.0.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        if r.is_zero() {
            Ok(Integer(q))
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    fn unit_inv(&self) -> Option<Self> {
        if self.is_unit() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn content_gcd(&self, rhs: &Self) -> Self {
        self.gcd(rhs)
    }
}

impl ToField for Integer {
    type Field = Rational;

    fn to_field(&self) -> Rational {
        Rational::from_integer(self.clone())
    }

    fn field_ratio(num: &Self, den: &Self) -> Result<Rational, ArithError> {
        Rational::new(num.clone(), den.clone())
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Integer {
    fn from(n: i64) -> Self {
        Integer::new(n)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Integer(BigInt::from_str(s)?))
    }
}





#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_div_basics() {
        let six = Integer::new(6);
        let three = Integer::new(3);
        assert_eq!(six.exact_div(&three).unwrap(), Integer::new(2));
        assert_eq!(
            Integer::new(7).exact_div(&three),
            Err(ArithError::InexactDivision)
        );
        assert_eq!(
            six.exact_div(&Integer::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn sign_is_zero_iff_magnitude_is_zero() {
        assert_eq!(Integer::zero().signum(), 0);
        assert_eq!(Integer::new(-3).signum(), -1);
        assert_eq!(Integer::new(3).signum(), 1);
    }

    #[test]
    fn no_fixed_width_overflow() {
        let big = Integer::new(i64::MAX);
        let sq = big.mul(&big);
        assert_eq!(sq.exact_div(&big).unwrap(), big);
    }

    #[test]
    fn perfect_sqrt() {
        assert_eq!(Integer::new(49).perfect_sqrt(), Some(Integer::new(7)));
        assert_eq!(Integer::new(50).perfect_sqrt(), None);
        assert_eq!(Integer::new(-4).perfect_sqrt(), None);
        assert_eq!(Integer::zero().perfect_sqrt(), Some(Integer::zero()));
    }
}
