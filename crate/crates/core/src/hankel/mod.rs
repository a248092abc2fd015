//! Hankel matrices, exact fraction-free determinants, Hankel transforms,
//! and the continued-fraction product formulas for Hankel determinants.
//!
//! Every determinant is computed independently by Bareiss elimination with
//! row pivoting, so sequences with vanishing leading minors (several of the
//! transforms here hit exact zeros) are handled without special cases.
//! The per-order determinants are independent work over immutable inputs
//! and could run concurrently; callers that want parallelism get it at the
//! check level instead, where the work units are larger.

use thiserror::Error;

use crate::exact::{Integer, Poly2, RatFunc, Ring};
use crate::series::Sequence;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("need {needed} sequence terms, only {have} available")]
    InsufficientTerms { needed: usize, have: usize },
}

/// A dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R: Ring> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        Matrix { rows }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&v| R::from_i64(v)).collect())
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { R::one() } else { R::zero() })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        let n = self.nrows();
        self.rows.iter().all(|r| r.len() == n)
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.rows[i]
    }

    /// Matrix-vector product (the vector may be shorter than the width;
    /// missing entries count as zero).
    pub fn mul_vector(&self, v: &[R]) -> Vec<R> {
        self.rows
            .iter()
            .map(|row| {
                let mut acc = R::zero();
                for (a, x) in row.iter().zip(v) {
                    acc = acc.add(&a.mul(x));
                }
                acc
            })
            .collect()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Intermediate entries are bordered minors of the pivoted input,
/// so every division is exact in the ring; a fully zero pivot column means
/// the determinant is zero.
pub fn det_fraction_free<R: Ring>(m: &Matrix<R>) -> Result<R, HankelError> {
    if !m.is_square() {
        return Err(HankelError::NonSquare);
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.rows.clone();
    let mut negated = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negated = !negated;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negated { det.neg() } else { det })
}

/// Determinant strategy per coefficient ring. The default is Bareiss on the
/// entries as given; rationals are first scaled to integers by the common
/// denominator and rescaled afterwards, keeping the elimination inside an
/// integral domain.
pub trait DetRing: Ring {
    fn det(m: &Matrix<Self>) -> Result<Self, HankelError> {
        det_fraction_free(m)
    }
}

impl DetRing for Integer {}
impl DetRing for Poly2 {}
impl DetRing for RatFunc {}

impl DetRing for Rational {
    fn det(m: &Matrix<Self>) -> Result<Self, HankelError> {
        if !m.is_square() {
            return Err(HankelError::NonSquare);
        }
        let n = m.nrows();
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut lcm = Integer::one();
        for row in m.rows() {
            for v in row {
                lcm = lcm.lcm(&v.denominator());
            }
        }
        let lcm_rat = Rational::from(lcm.clone());
        let scaled = Matrix::from_rows(
            m.rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            v.mul(&lcm_rat)
                                .to_integer()
                                .expect("scaling clears denominators")
                        })
                        .collect()
                })
                .collect(),
        );
        let det = det_fraction_free(&scaled)?;
        let scale = Rational::from(lcm).pow(n as u32);
        Ok(Rational::from(det)
            .exact_div(&scale)
            .expect("nonzero scale"))
    }
}

/// The `(n+1) x (n+1)` Hankel matrix of a sequence: entry `(i, j)` is term
/// `i + j`. Anti-diagonals are constant by construction.
#[derive(Clone, Debug)]
pub struct HankelMatrix<R: Ring> {
    matrix: Matrix<R>,
}

impl<R: Ring> HankelMatrix<R> {
    /// Hankel matrix of order `n + 1`; needs `2n + 1` terms.
    pub fn new(terms: &[R], n: usize) -> Result<Self, HankelError> {
        let needed = 2 * n + 1;
        if terms.len() < needed {
            return Err(HankelError::InsufficientTerms {
                needed,
                have: terms.len(),
            });
        }
        let rows = (0..=n)
            .map(|i| (0..=n).map(|j| terms[i + j].clone()).collect())
            .collect();
        Ok(HankelMatrix {
            matrix: Matrix::from_rows(rows),
        })
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.matrix.nrows()
    }
}

/// The determinant sequence `h_n = |a_{i+j}|, 0 <= i, j <= n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelTransform<R: Ring> {
    values: Sequence<R>,
}

impl<R: Ring> HankelTransform<R> {
    pub fn values(&self) -> &Sequence<R> {
        &self.values
    }

    pub fn value(&self, n: usize) -> &R {
        &self.values.terms()[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Hankel transform `h_0..h_{n_max}` of a sequence. Each determinant is an
/// independent Bareiss elimination; `h_0` equals the leading term.
pub fn hankel_transform<R: DetRing>(
    seq: &Sequence<R>,
    n_max: usize,
) -> Result<HankelTransform<R>, HankelError> {
    let needed = 2 * n_max + 1;
    if seq.len() < needed {
        return Err(HankelError::InsufficientTerms {
            needed,
            have: seq.len(),
        });
    }
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let h = HankelMatrix::new(seq.terms(), n)?;
        values.push(R::det(h.matrix())?);
    }
    Ok(HankelTransform {
        values: Sequence::new(values, 0),
    })
}

/// Hankel determinants of a sequence given by a Jacobi continued fraction:
/// `h_n = a0^{n+1} * prod_{k=1..n} beta_k^{n+1-k}`, independent of the
/// alpha parameters.
pub fn hankel_from_jacobi<R: Ring>(
    a0: &R,
    betas: &[R],
    n_max: usize,
) -> Result<HankelTransform<R>, HankelError> {
    if betas.len() < n_max {
        return Err(HankelError::InsufficientTerms {
            needed: n_max,
            have: betas.len(),
        });
    }
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut h = a0.pow(n as u32 + 1);
        for (k, beta) in betas.iter().take(n).enumerate() {
            h = h.mul(&beta.pow((n - k) as u32));
        }
        values.push(h);
    }
    Ok(HankelTransform {
        values: Sequence::new(values, 0),
    })
}

/// The order-`(n-1)` Hankel determinant `|a_{i+j}|, 0 <= i, j <= n-1` of a
/// sequence given by a Stieltjes continued fraction:
///
/// `a0^n * (α1 α2)^{n-1} * (α3 α4)^{n-2} * ... * (α_{2n-3} α_{2n-2})^1`.
///
/// The exponent of the first pair is `n - 1`: the pattern is calibrated
/// against the determinant path (tests cover the Catalan and `1 - x c(x)`
/// cases) rather than read off any one display of the formula.
pub fn hankel_from_stieltjes<R: Ring>(
    a0: &R,
    alphas: &[R],
    n: usize,
) -> Result<R, HankelError> {
    if n == 0 {
        return Ok(R::one());
    }
    let pairs = n - 1;
    if alphas.len() < 2 * pairs {
        return Err(HankelError::InsufficientTerms {
            needed: 2 * pairs,
            have: alphas.len(),
        });
    }
    let mut h = a0.pow(n as u32);
    for k in 1..=pairs {
        let pair = alphas[2 * k - 2].mul(&alphas[2 * k - 1]);
        h = h.mul(&pair.pow((n - k) as u32));
    }
    Ok(h)
}
