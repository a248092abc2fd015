//! Riordan arrays (including stretched arrays whose second series has
//! order above one), the fundamental-theorem action on a series, extraction
//! of coefficient arrays from polynomial-valued series, and the INVERT
//! transform.

use thiserror::Error;

use crate::exact::{ArithError, Integer, Poly2, Ring};
use crate::hankel::Matrix;
use crate::series::{Sequence, Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error("a Riordan pair needs g(0) != 0 and f(0) = 0")]
    BadOrder,
    #[error("the INVERT transform needs a leading term of 1")]
    BadLeadingTerm,
    #[error("matrix has too few rows")]
    TooSmall,
    #[error("coefficient family is not univariate: {0}")]
    UnexpectedVariable(ArithError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn check_pair<R: Ring>(g: &Series<R>, f: &Series<R>) -> Result<(), RiordanError> {
    if g.coeff(0).is_zero() || !f.coeff(0).is_zero() {
        return Err(RiordanError::BadOrder);
    }
    Ok(())
}

/// The `n x n` matrix with `m[r][k] = [x^r] g(x) f(x)^k`. Stretched pairs
/// (order of `f` above one) use the same rule; nothing special is needed.
pub fn riordan_build<R: Ring>(
    g: &Series<R>,
    f: &Series<R>,
    n: usize,
) -> Result<Matrix<R>, RiordanError> {
    check_pair(g, f)?;
    let g = g.truncated(n)?;
    let f = f.truncated(n)?;
    let mut rows = vec![vec![R::zero(); n]; n];
    let mut column = g;
    for k in 0..n {
        for (r, row) in rows.iter_mut().enumerate() {
            row[k] = column.coeff(r).clone();
        }
        if k + 1 < n {
            column = column.mul(&f);
        }
    }
    Ok(Matrix::from_rows(rows))
}

/// Fundamental theorem action: `(g, f) . h = g(x) h(f(x))`, evaluated by
/// Horner composition to the shared truncation order.
pub fn riordan_apply<R: Ring>(
    g: &Series<R>,
    f: &Series<R>,
    h: &Series<R>,
) -> Result<Series<R>, RiordanError> {
    check_pair(g, f)?;
    let n = g.order().min(f.order()).min(h.order());
    let g = g.truncated(n)?;
    let f = f.truncated(n)?;
    let mut acc = Series::constant(h.coeff(n - 1).clone(), n);
    for k in (0..n - 1).rev() {
        acc = acc.mul(&f).add_scalar(h.coeff(k));
    }
    Ok(acc.mul(&g))
}

/// Row-wise coefficient matrix of a series whose coefficients are
/// polynomials in `b` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffArray {
    rows: Vec<Vec<Integer>>,
}

impl CoeffArray {
    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// Entry `(n, k)`: the coefficient of `b^k` in row `n` (zero when out
    /// of range).
    pub fn entry(&self, n: usize, k: usize) -> Integer {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    /// The array as a square matrix, zero-padded to order `n`.
    pub fn matrix(&self, n: usize) -> Matrix<Integer> {
        let rows = (0..n)
            .map(|r| (0..n).map(|k| self.entry(r, k)).collect())
            .collect();
        Matrix::from_rows(rows)
    }
}

/// Extracts the coefficient array of a polynomial family: row `n` holds the
/// `b`-coefficients of the `n`-th series coefficient. The family must be
/// free of the variable `c`.
pub fn coeff_array(family: &Series<Poly2>, rows: usize) -> Result<CoeffArray, RiordanError> {
    if rows > family.order() {
        return Err(RiordanError::Series(SeriesError::InsufficientTruncation {
            needed: rows,
            have: family.order(),
        }));
    }
    let rows = (0..rows)
        .map(|n| {
            family
                .coeff(n)
                .b_coefficients()
                .map_err(RiordanError::UnexpectedVariable)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoeffArray { rows })
}

/// INVERT transform with parameter `t`: the sequence whose generating
/// function is `A(x) / (1 - t x A(x))`. The input must start with 1.
pub fn invert_transform<R: Ring>(a: &Sequence<R>, t: &R) -> Result<Sequence<R>, RiordanError> {
    if a.is_empty() || !a.terms()[0].is_one() {
        return Err(RiordanError::BadLeadingTerm);
    }
    let series = a.to_series();
    let n = series.order();
    let den = Series::one(n).sub(&series.mul_xk(1).truncated(n)?.scale(t));
    let out = series.mul(&den.recip()?);
    Ok(out.to_sequence(a.offset()))
}

/// Drops the first row, shifting the rest up.
pub fn strip_first_row<R: Ring>(m: &Matrix<R>) -> Result<Matrix<R>, RiordanError> {
    if m.nrows() < 2 {
        return Err(RiordanError::TooSmall);
    }
    Ok(Matrix::from_rows(m.rows()[1..].to_vec()))
}
