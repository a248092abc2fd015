//! Stieltjes and Jacobi continued fractions: expansion of a series into
//! parameters over the fraction field of its coefficient ring, and exact
//! evaluation back to a series.
//!
//! Expansion keeps each tail as a quotient `U/V` of two series over the
//! *base* ring, with common content stripped at every step, instead of
//! working with series of field elements. Over the polynomial ring this is
//! the difference between monomial bookkeeping and an avalanche of rational
//! functions. Evaluation builds the continuant numerator and denominator
//! bottom-up and performs a single series division at the end.

use thiserror::Error;

use crate::exact::{FieldRing, Ring, ToField};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfracError {
    #[error("S-fraction breakdown at parameter {0}: zero coefficient with nonzero tail")]
    SFractionBreakdown(usize),
    #[error("J-fraction terminates at pair {0} with a nonzero tail remaining")]
    JFractionTermination(usize),
    #[error("expanding to depth {depth} needs {needed} trusted coefficients, have {have}")]
    InsufficientTruncation {
        depth: usize,
        needed: usize,
        have: usize,
    },
    #[error("evaluating {requested} coefficients needs depth {needed}, fraction has {have}")]
    InsufficientDepth {
        requested: usize,
        needed: usize,
        have: usize,
    },
    #[error("leading coefficient must be a nonzero (unit) element")]
    NonUnitLeadingTerm,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A Stieltjes continued fraction `a0 / (1 - α1 x / (1 - α2 x / ...))`.
///
/// All stored parameters are nonzero. `finite` records that the expansion
/// terminated exactly (the tail vanished to working precision), in which
/// case evaluation is exact to any order.
#[derive(Clone, Debug, PartialEq)]
pub struct SFraction<F: FieldRing> {
    a0: F,
    alphas: Vec<F>,
    finite: bool,
}

impl<F: FieldRing> SFraction<F> {
    pub fn new(a0: F, alphas: Vec<F>) -> Self {
        SFraction {
            a0,
            alphas,
            finite: false,
        }
    }

    pub fn new_finite(a0: F, alphas: Vec<F>) -> Self {
        SFraction {
            a0,
            alphas,
            finite: true,
        }
    }

    pub fn a0(&self) -> &F {
        &self.a0
    }

    /// `alphas()[k]` is the parameter α_{k+1}.
    pub fn alphas(&self) -> &[F] {
        &self.alphas
    }

    pub fn depth(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }
}

/// A Jacobi continued fraction
/// `a0 / (1 - α0 x - β1 x^2 / (1 - α1 x - β2 x^2 / ...))`.
#[derive(Clone, Debug, PartialEq)]
pub struct JFraction<F: FieldRing> {
    a0: F,
    alphas: Vec<F>,
    betas: Vec<F>,
    finite: bool,
}

impl<F: FieldRing> JFraction<F> {
    pub fn new(a0: F, alphas: Vec<F>, betas: Vec<F>) -> Self {
        assert!(
            alphas.len() == betas.len() + 1 || (alphas.is_empty() && betas.is_empty()),
            "a J-fraction has one more alpha than betas"
        );
        JFraction {
            a0,
            alphas,
            betas,
            finite: false,
        }
    }

    pub fn a0(&self) -> &F {
        &self.a0
    }

    /// `alphas()[k]` is α_k.
    pub fn alphas(&self) -> &[F] {
        &self.alphas
    }

    /// `betas()[k]` is β_{k+1}.
    pub fn betas(&self) -> &[F] {
        &self.betas
    }

    /// Number of (α, β) levels available.
    pub fn depth(&self) -> usize {
        self.betas.len()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }
}

fn require_order(order: usize, depth: usize) -> Result<(), CfracError> {
    let needed = 2 * depth + 2;
    if order < needed {
        Err(CfracError::InsufficientTruncation {
            depth,
            needed,
            have: order,
        })
    } else {
        Ok(())
    }
}

/// Strips a common content factor from the coefficients of both series.
fn strip_common_content<R: Ring>(u: Series<R>, v: Series<R>) -> (Series<R>, Series<R>) {
    let mut g: Option<R> = None;
    for c in u.coeffs().iter().chain(v.coeffs().iter()) {
        if c.is_zero() {
            continue;
        }
        let next = match &g {
            None => c.content_gcd(c),
            Some(acc) => acc.content_gcd(c),
        };
        if next.is_one() {
            return (u, v);
        }
        g = Some(next);
    }
    match g {
        Some(g) if !g.is_one() => (
            u.map(|c| c.exact_div(&g).expect("content divides")),
            v.map(|c| c.exact_div(&g).expect("content divides")),
        ),
        _ => (u, v),
    }
}

/// Expands a series into a Stieltjes continued fraction of the requested
/// depth (fewer parameters are returned only when the fraction terminates).
///
/// Each step rewrites the tail `g = U/V` (with `U(0) = V(0)`) as
/// `1/(1 - α x g')`: with `w = U - V`, the next parameter is
/// `α = [x]w / U(0)` and the next tail is `U' = U(0)·(w >> 1)`,
/// `V' = ([x]w)·U`. A zero `[x]w` with a nonzero tail is a hard breakdown.
pub fn stieltjes_expand<R: ToField>(
    s: &Series<R>,
    depth: usize,
) -> Result<SFraction<R::Field>, CfracError> {
    require_order(s.order(), depth)?;
    let a0 = s.coeff(0).clone();
    if a0.is_zero() {
        return Err(CfracError::NonUnitLeadingTerm);
    }
    let mut u = s.clone();
    let mut v = Series::constant(a0.clone(), s.order());
    let mut alphas = Vec::with_capacity(depth);
    let mut finite = false;
    for k in 1..=depth {
        let w = u.sub(&v);
        if w.is_zero() {
            finite = true;
            break;
        }
        let c1 = w.coeff(1).clone();
        if c1.is_zero() {
            return Err(CfracError::SFractionBreakdown(k));
        }
        let alpha =
            R::field_ratio(&c1, u.coeff(0)).map_err(|_| CfracError::SFractionBreakdown(k))?;
        alphas.push(alpha);
        let shifted = w.shift(1)?;
        let order = shifted.order();
        let nu = shifted.scale(u.coeff(0));
        let nv = u.truncated(order)?.scale(&c1);
        (u, v) = strip_common_content(nu, nv);
    }
    Ok(SFraction {
        a0: a0.to_field(),
        alphas,
        finite,
    })
}

/// Expands a series into a Jacobi continued fraction with parameters
/// `α_0..α_depth` and `β_1..β_depth`.
///
/// A vanishing β with a vanishing remainder is a legitimate finite
/// fraction and terminates the expansion gracefully; a vanishing β with a
/// nonzero remainder means no standard J-fraction exists and is reported
/// as [`CfracError::JFractionTermination`].
pub fn jacobi_expand<R: ToField>(
    s: &Series<R>,
    depth: usize,
) -> Result<JFraction<R::Field>, CfracError> {
    require_order(s.order(), depth)?;
    let a0 = s.coeff(0).clone();
    if a0.is_zero() {
        return Err(CfracError::NonUnitLeadingTerm);
    }
    let mut u = s.clone();
    let mut v = Series::constant(a0.clone(), s.order());
    let mut alphas = Vec::with_capacity(depth + 1);
    let mut betas = Vec::with_capacity(depth);
    let mut finite = false;
    for k in 0..=depth {
        let w = u.sub(&v);
        // A zero linear coefficient is a legitimate alpha for a J-fraction;
        // only the beta extraction below decides termination.
        let u0 = u.coeff(0).clone();
        let w1 = w.coeff(1).clone();
        let alpha =
            R::field_ratio(&w1, &u0).map_err(|_| CfracError::JFractionTermination(k))?;
        alphas.push(alpha);
        if k == depth {
            break;
        }
        // n = U0·w - w1·x·U has a double zero at the origin; the next level
        // is U' = U0·(n >> 2), V' = [x^2]n · U.
        let n = w.scale(&u0).sub(&u.mul_xk(1).truncated(w.order())?.scale(&w1));
        let n2 = n.coeff(2).clone();
        if n2.is_zero() {
            if n.is_zero() {
                finite = true;
                break;
            }
            return Err(CfracError::JFractionTermination(k + 1));
        }
        let beta = R::field_ratio(&n2, &u0.mul(&u0))
            .map_err(|_| CfracError::JFractionTermination(k + 1))?;
        betas.push(beta);
        let shifted = n.shift(2)?;
        let order = shifted.order();
        let nu = shifted.scale(&u0);
        let nv = u.truncated(order)?.scale(&n2);
        (u, v) = strip_common_content(nu, nv);
    }
    Ok(JFraction {
        a0: a0.to_field(),
        alphas,
        betas,
        finite,
    })
}

/// Evaluates a Stieltjes fraction to a series with `order` trusted
/// coefficients. An infinite fraction of depth `d` determines coefficients
/// `0..=d`, so `order` may be at most `d + 1`; finite fractions evaluate
/// exactly to any order.
pub fn stieltjes_eval<F: FieldRing>(
    f: &SFraction<F>,
    order: usize,
) -> Result<Series<F>, CfracError> {
    if !f.finite && order > f.alphas.len() + 1 {
        return Err(CfracError::InsufficientDepth {
            requested: order,
            needed: order.saturating_sub(1),
            have: f.alphas.len(),
        });
    }
    let (p, q) = stieltjes_continuants(&f.alphas, order);
    let value = p.div(&q)?;
    Ok(value.scale(&f.a0))
}

/// Continuant numerator and denominator of
/// `1/(1 - α1 x/(1 - α2 x/(...)))` as series of the given order.
fn stieltjes_continuants<F: FieldRing>(alphas: &[F], order: usize) -> (Series<F>, Series<F>) {
    let mut p = Series::one(order);
    let mut q = Series::one(order);
    for alpha in alphas.iter().rev() {
        // 1/(1 - α x · P/Q) = Q / (Q - α x P)
        let new_q = q.sub(&p.mul_xk(1).truncated(order).expect("order kept").scale(alpha));
        p = q;
        q = new_q;
    }
    (p, q)
}

/// Evaluates a Jacobi fraction to a series with `order` trusted
/// coefficients. Depth `d` determines coefficients `0..=2d+1`.
pub fn jacobi_eval<F: FieldRing>(j: &JFraction<F>, order: usize) -> Result<Series<F>, CfracError> {
    if !j.finite && order > 2 * j.betas.len() + 2 {
        return Err(CfracError::InsufficientDepth {
            requested: order,
            needed: order / 2,
            have: j.betas.len(),
        });
    }
    let mut p = Series::one(order);
    let mut q = Series::one(order);
    for (k, alpha) in j.alphas.iter().enumerate().rev() {
        // 1/(1 - α_k x - β_{k+1} x^2 · P/Q) = Q / (Q - α_k x Q - β_{k+1} x^2 P)
        let mut new_q = q.sub(&q.mul_xk(1).truncated(order).expect("order kept").scale(alpha));
        if let Some(beta) = j.betas.get(k) {
            new_q = new_q.sub(&p.mul_xk(2).truncated(order).expect("order kept").scale(beta));
        }
        p = q;
        q = new_q;
    }
    let value = p.div(&q)?;
    Ok(value.scale(&j.a0))
}

/// The first tail of the Stieltjes expansion: the series `g1` with
/// `s = 1 / (1 - α1 x g1)`. Requires `s(0) = 1` and a nonzero linear
/// coefficient.
pub fn tail_series<R: ToField>(s: &Series<R>) -> Result<Series<R::Field>, CfracError> {
    let sf = s.map(ToField::to_field);
    if !sf.coeff(0).is_one() {
        return Err(CfracError::NonUnitLeadingTerm);
    }
    let t = Series::one(sf.order()).sub(&sf.recip()?);
    let alpha1 = t.coeff(1).clone();
    if alpha1.is_zero() {
        return Err(CfracError::SFractionBreakdown(1));
    }
    let inv = alpha1.inv().expect("nonzero field element");
    Ok(t.shift(1)?.scale(&inv))
}
