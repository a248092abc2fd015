//! Dense-coefficient, sparse-support polynomials over the integers in the
//! two indeterminates `b` and `c`.
//!
//! Terms are kept in a map from exponent pairs to nonzero integer
//! coefficients. The monomial order used for leading terms and display is
//! graded lexicographic with `b` before `c`. Per-variable degrees are
//! checked against a configurable bound; exceeding it is an error, never a
//! silent truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use super::ring::{ArithError, Ring, ToField};
use super::{Integer, RatFunc, Rational};

/// Default per-variable degree bound.
pub const DEFAULT_DEGREE_BOUND: u32 = 64;

static DEGREE_BOUND: AtomicU32 = AtomicU32::new(DEFAULT_DEGREE_BOUND);

/// Current per-variable degree bound for [`Poly2`] arithmetic.
pub fn degree_bound() -> u32 {
    DEGREE_BOUND.load(Ordering::Relaxed)
}

/// Raises or lowers the per-variable degree bound (process-wide). Deep
/// continued-fraction work over the polynomial ring legitimately needs more
/// than the default; callers doing so are expected to raise the bound up
/// front.
pub fn set_degree_bound(bound: u32) {
    DEGREE_BOUND.store(bound, Ordering::Relaxed);
}

/// Exponent pair: degree in `b`, degree in `c`.
pub type Exponents = (u32, u32);

/// Graded-lexicographic comparison, `b` before `c`.
fn grlex(a: Exponents, b: Exponents) -> std::cmp::Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// A polynomial in ℤ[b, c]. No zero coefficients are stored; equality is
/// coefficient-wise.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<Exponents, Integer>,
}

impl Poly2 {
    pub fn constant(n: i64) -> Self {
        Self::from_integer(Integer::new(n))
    }

    pub fn from_integer(n: Integer) -> Self {
        let mut terms = BTreeMap::new();
        if !n.is_zero() {
            terms.insert((0, 0), n);
        }
        Poly2 { terms }
    }

    /// The variable `b`.
    pub fn var_b() -> Self {
        Self::monomial(Integer::one(), 1, 0)
    }

    /// The variable `c`.
    pub fn var_c() -> Self {
        Self::monomial(Integer::one(), 0, 1)
    }

    pub fn monomial(coeff: Integer, deg_b: u32, deg_c: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_b, deg_c), coeff);
        }
        Poly2 { terms }
    }

    /// Builds a polynomial from `(coefficient, deg_b, deg_c)` triples.
    pub fn from_terms(triples: &[(i64, u32, u32)]) -> Self {
        let mut p = Poly2::zero();
        for &(coeff, i, j) in triples {
            p = p.add(&Self::monomial(Integer::new(coeff), i, j));
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Integer)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_b: u32, deg_c: u32) -> Integer {
        self.terms
            .get(&(deg_b, deg_c))
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    /// Degree in `b` and degree in `c`, or `None` for the zero polynomial.
    pub fn degrees(&self) -> Option<Exponents> {
        if self.terms.is_empty() {
            return None;
        }
        let db = self.terms.keys().map(|e| e.0).max().unwrap();
        let dc = self.terms.keys().map(|e| e.1).max().unwrap();
        Some((db, dc))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// True when the variable `c` does not occur.
    pub fn is_univariate_in_b(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    /// Leading term under graded lex (`b` before `c`).
    pub fn leading_term(&self) -> Option<(Exponents, &Integer)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex(**a, **b))
            .map(|(e, c)| (*e, c))
    }

    /// Gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of all exponent pairs; the largest monomial
    /// dividing every term. `(0, 0)` for the zero polynomial.
    pub fn monomial_content(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(&first) = it.next() else {
            return (0, 0);
        };
        it.fold(first, |(mb, mc), &(eb, ec)| (mb.min(eb), mc.min(ec)))
    }

    /// Divides out `scalar * b^i * c^j`, which must divide every term.
    pub fn div_monomial(&self, scalar: &Integer, mono: Exponents) -> Result<Self, ArithError> {
        if scalar.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (&(eb, ec), coeff) in &self.terms {
            if eb < mono.0 || ec < mono.1 {
                return Err(ArithError::InexactDivision);
            }
            terms.insert((eb - mono.0, ec - mono.1), coeff.exact_div(scalar)?);
        }
        Ok(Poly2 { terms })
    }

    fn check_degrees(&self) -> Result<(), ArithError> {
        let bound = degree_bound();
        if let Some((db, dc)) = self.degrees() {
            let d = db.max(dc);
            if d > bound {
                return Err(ArithError::DegreeOverflow(d, bound));
            }
        }
        Ok(())
    }

    /// Product with a degree-bound check.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let p = self.mul_unchecked(rhs);
        p.check_degrees()?;
        Ok(p)
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Exponents, Integer> = BTreeMap::new();
        for (&(ab, ac), av) in &self.terms {
            for (&(bb, bc), bv) in &rhs.terms {
                let key = (ab + bb, ac + bc);
                let prod = av.mul(bv);
                match terms.get_mut(&key) {
                    Some(cur) => {
                        *cur = cur.add(&prod);
                        if cur.is_zero() {
                            terms.remove(&key);
                        }
                    }
                    None => {
                        terms.insert(key, prod);
                    }
                }
            }
        }
        Poly2 { terms }
    }

    /// Substitutes rational values for `b` and `c`.
    ///
    /// This is the evaluation homomorphism: it commutes with ring
    /// operations.
    pub fn eval(&self, b_val: &Rational, c_val: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(eb, ec), coeff) in &self.terms {
            let term = Rational::from(coeff.clone())
                .mul(&b_val.pow(eb))
                .mul(&c_val.pow(ec));
            acc = acc.add(&term);
        }
        acc
    }

    /// Coefficients of `b^0, b^1, ...` for a polynomial free of `c`.
    pub fn b_coefficients(&self) -> Result<Vec<Integer>, ArithError> {
        if !self.is_univariate_in_b() {
            return Err(ArithError::UnexpectedVariable('c'));
        }
        let deg = self.degrees().map(|(db, _)| db).unwrap_or(0);
        let mut out = vec![Integer::zero(); deg as usize + 1];
        for (&(eb, _), coeff) in &self.terms {
            out[eb as usize] = coeff.clone();
        }
        Ok(out)
    }
}

impl Ring for Poly2 {
    fn zero() -> Self {
        Poly2::default()
    }

    fn one() -> Self {
        Poly2::constant(1)
    }

    fn from_i64(n: i64) -> Self {
        Poly2::constant(n)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_unit(&self) -> bool {
        self.is_constant() && self.coeff(0, 0).is_unit()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&e, v) in &rhs.terms {
            match terms.get_mut(&e) {
                Some(cur) => {
                    *cur = cur.add(v);
                    if cur.is_zero() {
                        terms.remove(&e);
                    }
                }
                None => {
                    terms.insert(e, v.clone());
                }
            }
        }
        Poly2 { terms }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        match self.checked_mul(rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }

    fn neg(&self) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e, v.neg()))
                .collect(),
        }
    }

    /// Exact multivariate division. Succeeds iff `rhs` divides `self` in
    /// ℤ[b, c]; leading terms never cancel under a monomial order, so the
    /// greedy leading-term loop decides divisibility.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        let (lt_e, lt_c) = rhs.leading_term().expect("nonzero divisor");
        while !rem.is_zero() {
            let (re, rc) = rem.leading_term().expect("nonzero remainder");
            if re.0 < lt_e.0 || re.1 < lt_e.1 {
                return Err(ArithError::InexactDivision);
            }
            let q_coeff = rc.exact_div(lt_c)?;
            let q_term = Poly2::monomial(q_coeff, re.0 - lt_e.0, re.1 - lt_e.1);
            rem = rem.sub(&q_term.mul_unchecked(rhs));
            quot = quot.add(&q_term);
        }
        Ok(quot)
    }

    fn unit_inv(&self) -> Option<Self> {
        if self.is_unit() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn content_gcd(&self, rhs: &Self) -> Self {
        let g = self.content().gcd(&rhs.content());
        if g.is_zero() {
            return Poly2::one();
        }
        let (mb, mc) = self.monomial_content();
        let (nb, nc) = rhs.monomial_content();
        Poly2::monomial(g, mb.min(nb), mc.min(nc))
    }
}

impl ToField for Poly2 {
    type Field = RatFunc;

    fn to_field(&self) -> RatFunc {
        RatFunc::from_poly(self.clone())
    }

    fn field_ratio(num: &Self, den: &Self) -> Result<RatFunc, ArithError> {
        RatFunc::new(num.clone(), den.clone())
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending graded lex.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| grlex(**b, **a));
        for (idx, (&(eb, ec), coeff)) in terms.into_iter().enumerate() {
            let neg = coeff.signum() < 0;
            let mag = coeff.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if !mag.is_one() || (eb == 0 && ec == 0) {
                write!(f, "{mag}")?;
                wrote_factor = true;
            }
            for (var, e) in [('b', eb), ('c', ec)] {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{var}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}





#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let b = Poly2::var_b();
        let one = Poly2::one();
        let prod = b.add(&one).mul(&b.sub(&one));
        assert_eq!(prod, Poly2::from_terms(&[(1, 2, 0), (-1, 0, 0)]));
    }

    #[test]
    fn exact_div_examples() {
        // (b^3 + 2b) / b = b^2 + 2
        let p = Poly2::from_terms(&[(1, 3, 0), (2, 1, 0)]);
        let q = p.exact_div(&Poly2::var_b()).unwrap();
        assert_eq!(q, Poly2::from_terms(&[(1, 2, 0), (2, 0, 0)]));

        // b^2 + 1 is not divisible by b.
        let p = Poly2::from_terms(&[(1, 2, 0), (1, 0, 0)]);
        assert_eq!(
            p.exact_div(&Poly2::var_b()),
            Err(ArithError::InexactDivision)
        );

        // Coefficient divisibility matters too: (2b) / 3 fails, (6b) / 3 = 2b.
        let two_b = Poly2::from_terms(&[(2, 1, 0)]);
        assert_eq!(
            two_b.exact_div(&Poly2::constant(3)),
            Err(ArithError::InexactDivision)
        );
        let six_b = Poly2::from_terms(&[(6, 1, 0)]);
        assert_eq!(
            six_b.exact_div(&Poly2::constant(3)).unwrap(),
            Poly2::from_terms(&[(2, 1, 0)])
        );
    }

    #[test]
    fn eval_examples() {
        // b^2 + 1 at b = 1 -> 2
        let p = Poly2::from_terms(&[(1, 2, 0), (1, 0, 0)]);
        assert_eq!(
            p.eval(&Rational::from_i64(1), &Rational::from_i64(1)),
            Rational::from_i64(2)
        );
        // -b^4 c^2 at b = c = 1 -> -1
        let p = Poly2::from_terms(&[(-1, 4, 2)]);
        assert_eq!(
            p.eval(&Rational::from_i64(1), &Rational::from_i64(1)),
            Rational::from_i64(-1)
        );
        // b^2 + 3 at b = 2 -> 7
        let p = Poly2::from_terms(&[(1, 2, 0), (3, 0, 0)]);
        assert_eq!(
            p.eval(&Rational::from_i64(2), &Rational::from_i64(0)),
            Rational::from_i64(7)
        );
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let p = Poly2::from_terms(&[(2, 1, 1), (-3, 0, 2), (1, 0, 0)]);
        let q = Poly2::from_terms(&[(1, 2, 0), (5, 0, 1)]);
        let b = Rational::from_i64s(3, 2);
        let c = Rational::from_i64s(-1, 3);
        assert_eq!(p.mul(&q).eval(&b, &c), p.eval(&b, &c).mul(&q.eval(&b, &c)));
        assert_eq!(p.add(&q).eval(&b, &c), p.eval(&b, &c).add(&q.eval(&b, &c)));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let bound = degree_bound();
        let b_high = Poly2::monomial(Integer::one(), bound, 0);
        assert!(matches!(
            b_high.checked_mul(&Poly2::var_b()),
            Err(ArithError::DegreeOverflow(_, _))
        ));
    }

    #[test]
    fn leading_term_is_grlex_b_first() {
        // b*c^2 (total degree 3) beats b^2 (total degree 2); b*c beats c^2.
        let p = Poly2::from_terms(&[(1, 2, 0), (1, 1, 2)]);
        assert_eq!(p.leading_term().unwrap().0, (1, 2));
        let q = Poly2::from_terms(&[(1, 0, 2), (1, 1, 1)]);
        assert_eq!(q.leading_term().unwrap().0, (1, 1));
    }

    #[test]
    fn content_helpers() {
        let p = Poly2::from_terms(&[(4, 2, 1), (6, 1, 3)]);
        assert_eq!(p.content(), Integer::new(2));
        assert_eq!(p.monomial_content(), (1, 1));
        let stripped = p.div_monomial(&Integer::new(2), (1, 1)).unwrap();
        assert_eq!(stripped, Poly2::from_terms(&[(2, 1, 0), (3, 0, 2)]));
    }
}
