//! Arbitrary-precision rationals in canonical reduced form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{ArithError, FieldRing, Ring, ToField};
use super::Integer;

/// A rational number, always reduced, with positive denominator.
/// The canonical zero is 0/1. Both invariants are maintained by the
/// wrapped [`BigRational`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`; errors when `den` is zero.
    pub fn new(num: Integer, den: Integer) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(
            num.into_bigint(),
            den.into_bigint(),
        )))
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational(BigRational::from_integer(n.into_bigint()))
    }

    pub fn from_i64s(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numerator(&self) -> Integer {
        Integer::from_bigint(self.0.numer().clone())
    }

    pub fn denominator(&self) -> Integer {
        Integer::from_bigint(self.0.denom().clone())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The wrapped value as an [`Integer`], if the denominator is one.
    pub fn to_integer(&self) -> Option<Integer> {
        if self.is_integer() {
            Some(self.numerator())
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        !self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    fn unit_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

impl FieldRing for Rational {
    fn inv(&self) -> Result<Self, ArithError> {
        self.unit_inv().ok_or(ArithError::DivisionByZero)
    }
}

impl ToField for Rational {
    type Field = Rational;

    fn to_field(&self) -> Rational {
        self.clone()
    }

    fn field_ratio(num: &Self, den: &Self) -> Result<Rational, ArithError> {
        num.exact_div(den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_i64(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

/// Parses `"p"` or `"p/q"`.
impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n: Integer = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
                Ok(Rational::from_integer(n))
            }
            Some((p, q)) => {
                let p: Integer = p
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad numerator {p:?}: {e}"))?;
                let q: Integer = q
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad denominator {q:?}: {e}"))?;
                Rational::new(p, q).map_err(|e| e.to_string())
            }
        }
    }
}





#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_reduced_with_positive_denominator() {
        let r = Rational::new(Integer::new(4), Integer::new(-6)).unwrap();
        assert_eq!(r.numerator(), Integer::new(-2));
        assert_eq!(r.denominator(), Integer::new(3));
    }

    #[test]
    fn canonical_zero() {
        let z = Rational::new(Integer::zero(), Integer::new(17)).unwrap();
        assert_eq!(z.denominator(), Integer::one());
        assert!(z.is_zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(Integer::one(), Integer::zero()),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("5/2".parse::<Rational>().unwrap(), Rational::from_i64s(5, 2));
        assert_eq!("-3".parse::<Rational>().unwrap(), Rational::from_i64(-3));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
