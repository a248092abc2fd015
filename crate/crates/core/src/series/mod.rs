//! Truncated formal power series over an exact coefficient ring, plus the
//! finite sequences they expand to.
//!
//! A [`Series`] owns exactly its trusted coefficients: the truncation order
//! *is* the length of the coefficient vector, operations propagate the
//! minimum of the input orders, and anything that would have to read an
//! untrusted coefficient fails with [`SeriesError::InsufficientTruncation`]
//! instead of guessing.
//!
//! The coefficient ring is a type parameter, so mixing rings in one
//! operation is a compile error rather than a runtime one.

use std::fmt;

use thiserror::Error;

use crate::exact::{Integer, Poly2, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstantTerm,
    #[error("operation needs {needed} trusted coefficients but only {have} are available")]
    InsufficientTruncation { needed: usize, have: usize },
    #[error("a series must have at least one trusted coefficient")]
    EmptySeries,
}

/// A truncated formal power series; `coeffs[i]` is the coefficient of `x^i`
/// and every stored coefficient is trusted.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&n| R::from_i64(n)).collect())
    }

    pub fn constant(value: R, order: usize) -> Self {
        assert!(order >= 1);
        let mut coeffs = vec![R::zero(); order];
        coeffs[0] = value;
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1);
        Series {
            coeffs: vec![R::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    /// Number of trusted coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^i`. Panics past the truncation order; use
    /// [`Series::get`] for a checked read.
    pub fn coeff(&self, i: usize) -> &R {
        assert!(
            i < self.coeffs.len(),
            "coefficient {} is beyond the truncation order {}",
            i,
            self.coeffs.len()
        );
        &self.coeffs[i]
    }

    pub fn get(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Restricts to the first `order` coefficients.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order == 0 {
            return Err(SeriesError::EmptySeries);
        }
        if order > self.coeffs.len() {
            return Err(SeriesError::InsufficientTruncation {
                needed: order,
                have: self.coeffs.len(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..n)
            .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..n)
            .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, factor: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(factor)).collect(),
        }
    }

    pub fn add_scalar(&self, value: &R) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = coeffs[0].add(value);
        Series { coeffs }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .unit_inv()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        let n = self.order();
        let mut coeffs = vec![R::zero(); n];
        coeffs[0] = inv0.clone();
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || coeffs[k - j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&coeffs[k - j]));
            }
            coeffs[k] = inv0.mul(&acc).neg();
        }
        Ok(Series { coeffs })
    }

    /// `self / rhs`, requiring a unit constant term in `rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Substitutes `x^k` for `x`. The result trusts `k` times as many
    /// coefficients as the input.
    pub fn compose_xk(&self, k: usize) -> Self {
        assert!(k >= 1, "composition exponent must be positive");
        let n = self.order() * k;
        let mut coeffs = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = a.clone();
        }
        Series { coeffs }
    }

    /// Term-level shift. A positive `k` drops the first `k` coefficients
    /// (the caller accepts the loss of the sequence head); a negative `k`
    /// prepends `|k|` zeros.
    pub fn shift(&self, k: i64) -> Result<Self, SeriesError> {
        if k >= 0 {
            let k = k as usize;
            if k >= self.order() {
                return Err(SeriesError::InsufficientTruncation {
                    needed: k + 1,
                    have: self.order(),
                });
            }
            Ok(Series {
                coeffs: self.coeffs[k..].to_vec(),
            })
        } else {
            let k = (-k) as usize;
            let mut coeffs = vec![R::zero(); k];
            coeffs.extend_from_slice(&self.coeffs);
            Ok(Series { coeffs })
        }
    }

    /// Multiplication by `x^k` (a right shift that keeps the new leading
    /// zeros trusted).
    pub fn mul_xk(&self, k: usize) -> Self {
        self.shift(-(k as i64)).expect("right shift cannot fail")
    }

    pub fn to_sequence(&self, offset: i64) -> Sequence<R> {
        Sequence {
            terms: self.coeffs.clone(),
            offset,
        }
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(x^{})", self.coeffs.len())
    }
}

/// A finite run of sequence terms together with the index of the first one.
#[derive(Clone, PartialEq, Eq)]
pub struct Sequence<R: Ring> {
    terms: Vec<R>,
    offset: i64,
}

impl<R: Ring> Sequence<R> {
    pub fn new(terms: Vec<R>, offset: i64) -> Self {
        Sequence { terms, offset }
    }

    pub fn from_i64s(terms: &[i64], offset: i64) -> Self {
        Sequence {
            terms: terms.iter().map(|&n| R::from_i64(n)).collect(),
            offset,
        }
    }

    pub fn terms(&self) -> &[R] {
        &self.terms
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term at absolute index `n` (respecting the offset).
    pub fn term(&self, n: i64) -> Option<&R> {
        let i = n.checked_sub(self.offset)?;
        if i < 0 {
            return None;
        }
        self.terms.get(i as usize)
    }

    /// Drops the first `k` terms without renumbering: term `n` of the
    /// result is term `n + k` of the input.
    pub fn shift_terms(&self, k: usize) -> Self {
        Sequence {
            terms: self.terms.iter().skip(k).cloned().collect(),
            offset: self.offset,
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Sequence<S> {
        Sequence {
            terms: self.terms.iter().map(f).collect(),
            offset: self.offset,
        }
    }

    pub fn partial_sums(&self) -> Self {
        let mut acc = R::zero();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                acc = acc.add(t);
                acc.clone()
            })
            .collect();
        Sequence {
            terms,
            offset: self.offset,
        }
    }

    pub fn termwise_mul(&self, rhs: &Self) -> Self {
        let n = self.terms.len().min(rhs.terms.len());
        Sequence {
            terms: (0..n).map(|i| self.terms[i].mul(&rhs.terms[i])).collect(),
            offset: self.offset,
        }
    }

    pub fn termwise_sub(&self, rhs: &Self) -> Self {
        let n = self.terms.len().min(rhs.terms.len());
        Sequence {
            terms: (0..n).map(|i| self.terms[i].sub(&rhs.terms[i])).collect(),
            offset: self.offset,
        }
    }

    pub fn to_series(&self) -> Series<R> {
        Series::from_coeffs(self.terms.clone())
    }
}

impl<R: Ring> fmt::Debug for Sequence<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(offset {}) [", self.offset)?;
        for (i, c) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Catalan number series, generated coefficient-by-coefficient from the
/// defining quadratic `c = 1 + x c^2`. No radicals are ever involved.
pub fn catalan_series<R: Ring>(order: usize) -> Series<R> {
    assert!(order >= 1);
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(R::one());
    for n in 1..order {
        // C_n = sum_{k=0}^{n-1} C_k C_{n-1-k}
        let mut acc = R::zero();
        for k in 0..n {
            acc = acc.add(&coeffs[k].mul(&coeffs[n - 1 - k]));
        }
        coeffs.push(acc);
    }
    Series { coeffs }
}

/// Rueppel series: coefficient of `x^n` is 1 when `n + 1` is a power of
/// two, else 0.
pub fn rueppel_series<R: Ring>(order: usize) -> Series<R> {
    assert!(order >= 1);
    let mut coeffs = vec![R::zero(); order];
    let mut p: usize = 1;
    while p - 1 < order {
        coeffs[p - 1] = R::one();
        match p.checked_mul(2) {
            Some(next) => p = next,
            None => break,
        }
    }
    Series { coeffs }
}

/// Two-parameter Rueppel series `1 + c x + b (x^3 + x^7 + x^15 + ...)`.
pub fn rueppel_bc_series(order: usize) -> Series<Poly2> {
    assert!(order >= 1);
    let mut coeffs = vec![Poly2::zero(); order];
    coeffs[0] = Poly2::one();
    if order > 1 {
        coeffs[1] = Poly2::var_c();
    }
    let mut p: usize = 4;
    while p - 1 < order {
        coeffs[p - 1] = Poly2::var_b();
        match p.checked_mul(2) {
            Some(next) => p = next,
            None => break,
        }
    }
    Series { coeffs }
}

/// Motzkin number series from `m = 1 + x m + x^2 m^2`.
pub fn motzkin_series<R: Ring>(order: usize) -> Series<R> {
    assert!(order >= 1);
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(R::one());
    for n in 1..order {
        // M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}
        let mut acc = coeffs[n - 1].clone();
        for k in 0..n.saturating_sub(1) {
            acc = acc.add(&coeffs[k].mul(&coeffs[n - 2 - k]));
        }
        coeffs.push(acc);
    }
    Series { coeffs }
}

/// The geometric series `1/(1 - x)`.
pub fn geometric_series<R: Ring>(order: usize) -> Series<R> {
    assert!(order >= 1);
    Series {
        coeffs: vec![R::one(); order],
    }
}

/// Convenience: an integer series from literal coefficients.
pub fn int_series(coeffs: &[i64]) -> Series<Integer> {
    Series::from_i64s(coeffs)
}

#[cfg(test)]
mod tests;
