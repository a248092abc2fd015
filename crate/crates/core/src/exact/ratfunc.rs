//! Rational functions over ℤ[b, c].
//!
//! Reduction is deliberately light: common integer content, common monomial
//! factors, and mutual trial exact division are removed, and the denominator
//! gets a positive leading coefficient under graded lex. No full
//! multivariate gcd is computed, so two equal values may normalize to
//! different representations; equality therefore always cross-multiplies.

use std::fmt;

use super::ring::{ArithError, FieldRing, Ring, ToField};
use super::{Integer, Poly2, Rational};

/// A quotient of two polynomials in ℤ[b, c] with nonzero denominator.
/// `p/q = r/s` iff `p·s = r·q`.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    /// `num / den`; errors when `den` is zero.
    pub fn new(num: Poly2, den: Poly2) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(RatFunc { num, den }.normalize())
    }

    pub fn from_poly(p: Poly2) -> Self {
        RatFunc {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn from_i64s(num: i64, den: i64) -> Self {
        Self::new(Poly2::constant(num), Poly2::constant(den)).expect("nonzero denominator")
    }

    /// The monomial `coeff * b^i c^j / (b^k c^l)`.
    pub fn monomial_ratio(coeff: i64, num_exp: (u32, u32), den_exp: (u32, u32)) -> Self {
        Self::new(
            Poly2::monomial(Integer::new(coeff), num_exp.0, num_exp.1),
            Poly2::monomial(Integer::one(), den_exp.0, den_exp.1),
        )
        .expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &Poly2 {
        &self.den
    }

    /// Whether the value is a polynomial (denominator one after reduction).
    pub fn as_poly(&self) -> Option<&Poly2> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(self) -> Self {
        let RatFunc { mut num, mut den } = self;
        if num.is_zero() {
            return RatFunc {
                num: Poly2::zero(),
                den: Poly2::one(),
            };
        }
        // Common integer content and common monomial factor.
        let g = num.content_gcd(&den);
        if !g.is_one() {
            let (coeff, mono) = {
                let (e, c) = g.leading_term().expect("nonzero gcd");
                (c.clone(), e)
            };
            num = num.div_monomial(&coeff, mono).expect("content divides");
            den = den.div_monomial(&coeff, mono).expect("content divides");
        }
        // Mutual trial division catches the quotient-of-multiples case.
        if !den.is_one() {
            if let Ok(q) = num.exact_div(&den) {
                num = q;
                den = Poly2::one();
            } else if let Ok(q) = den.exact_div(&num) {
                // num/den = 1/q up to the sign fix below.
                den = q;
                num = Poly2::one();
            }
        }
        // Positive leading denominator coefficient under graded lex.
        let den_lead = den.leading_term().expect("nonzero denominator").1.clone();
        if den_lead.signum() < 0 {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// Substitutes rational values for `b` and `c`. Errors if the
    /// denominator vanishes at the point.
    pub fn eval(&self, b_val: &Rational, c_val: &Rational) -> Result<Rational, ArithError> {
        let den = self.den.eval(b_val, c_val);
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        self.num.eval(b_val, c_val).exact_div(&den)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // Cross multiplication: exact regardless of reduction quality.
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFunc {}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly2::zero())
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly2::one())
    }

    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(Poly2::constant(n))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_unit(&self) -> bool {
        !self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc { num, den }.normalize()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
        .normalize()
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.mul(&RatFunc {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        }
        .normalize()))
    }

    fn unit_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(
                RatFunc {
                    num: self.den.clone(),
                    den: self.num.clone(),
                }
                .normalize(),
            )
        }
    }
}

impl FieldRing for RatFunc {
    fn inv(&self) -> Result<Self, ArithError> {
        self.unit_inv().ok_or(ArithError::DivisionByZero)
    }
}

impl ToField for RatFunc {
    type Field = RatFunc;

    fn to_field(&self) -> RatFunc {
        self.clone()
    }

    fn field_ratio(num: &Self, den: &Self) -> Result<RatFunc, ArithError> {
        num.exact_div(den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if self.den.num_terms() > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}





#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_common_content() {
        // (2b)/(2c^2) -> b/c^2
        let f = RatFunc::new(
            Poly2::from_terms(&[(2, 1, 0)]),
            Poly2::from_terms(&[(2, 0, 2)]),
        )
        .unwrap();
        assert_eq!(f.numerator(), &Poly2::var_b());
        assert_eq!(f.denominator(), &Poly2::from_terms(&[(1, 0, 2)]));
        assert_eq!(f.to_string(), "b/c^2");
    }

    #[test]
    fn canonical_zero() {
        let b_plus_c = Poly2::var_b().add(&Poly2::var_c());
        let z = RatFunc::new(Poly2::zero(), b_plus_c).unwrap();
        assert!(z.is_zero());
        assert!(z.denominator().is_one());
    }

    #[test]
    fn trial_division_reduces_polynomial_quotients() {
        // (b^2 - 1)/(b - 1) -> b + 1
        let num = Poly2::from_terms(&[(1, 2, 0), (-1, 0, 0)]);
        let den = Poly2::from_terms(&[(1, 1, 0), (-1, 0, 0)]);
        let f = RatFunc::new(num.clone(), den.clone()).unwrap();
        let expected = Poly2::from_terms(&[(1, 1, 0), (1, 0, 0)]);
        assert_eq!(f.as_poly(), Some(&expected));
        // Cross-multiplication oracle for the same equality.
        let g = RatFunc::from_poly(expected);
        assert_eq!(num.mul(g.denominator()), g.numerator().mul(&den));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(Poly2::one(), Poly2::zero()),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_sign_is_fixed() {
        let f = RatFunc::new(Poly2::var_b(), Poly2::constant(-2)).unwrap();
        assert_eq!(f.to_string(), "-b/2");
    }

    #[test]
    fn equality_cross_multiplies() {
        // b/(b+c) multiplied through by (b - c) on both sides.
        let lhs = RatFunc::new(
            Poly2::from_terms(&[(1, 2, 0), (-1, 1, 1)]),
            Poly2::from_terms(&[(1, 2, 0), (-1, 0, 2)]),
        )
        .unwrap();
        let rhs = RatFunc::new(
            Poly2::var_b(),
            Poly2::from_terms(&[(1, 1, 0), (1, 0, 1)]),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }
}
