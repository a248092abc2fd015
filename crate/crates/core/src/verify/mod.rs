//! A registry of depth-parameterized checks covering every identity,
//! pattern and printed prefix the project tracks, each returning a
//! structured report with the first counterexample on failure.
//!
//! Checks are pure and independent; [`run_all`] may execute them on a small
//! thread pool. A passing report means the claim held at every index the
//! requested depth reaches — finite verification, not proof.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::catalog::Catalog;

mod checks;
mod data;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("check {id} supports depth at most {max}, requested {requested}")]
    DepthInfeasible {
        id: String,
        requested: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// First index at which a claim failed, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub depth_requested: usize,
    pub depth_reached: usize,
    pub status: CheckStatus,
    pub first_counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Builder that keeps the report invariants straight: the status is `Fail`
/// exactly when a counterexample is recorded, and the reached depth never
/// exceeds the requested one.
pub(crate) struct ReportBuilder {
    report: CheckReport,
}

impl ReportBuilder {
    pub(crate) fn new(check_id: &str, depth_requested: usize) -> Self {
        ReportBuilder {
            report: CheckReport {
                check_id: check_id.to_string(),
                depth_requested,
                depth_reached: depth_requested,
                status: CheckStatus::Pass,
                first_counterexample: None,
                notes: Vec::new(),
            },
        }
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.report.notes.push(text.into());
    }

    /// Records the first failure; later failures are ignored.
    pub(crate) fn fail(&mut self, index: i64, expected: impl fmt::Display, actual: impl fmt::Display) {
        if self.report.first_counterexample.is_none() {
            self.report.status = CheckStatus::Fail;
            self.report.first_counterexample = Some(Counterexample {
                index,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub(crate) fn failed(&self) -> bool {
        self.report.first_counterexample.is_some()
    }

    /// Marks the run as stopped early without a verdict at full depth.
    pub(crate) fn reached(&mut self, depth: usize) {
        self.report.depth_reached = depth.min(self.report.depth_requested);
        if self.report.depth_reached < self.report.depth_requested
            && self.report.status == CheckStatus::Pass
        {
            self.report.status = CheckStatus::Inconclusive;
        }
    }

    pub(crate) fn finish(self) -> CheckReport {
        self.report
    }
}

/// Default depths per parameter domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthProfile {
    /// Hankel order for integer-sequence checks.
    pub hankel_order: usize,
    /// Hankel order for polynomial-valued sequences.
    pub poly_order: usize,
    /// Continued-fraction depth for the parameterized expansion checks.
    pub cf_depth: usize,
}

impl Default for DepthProfile {
    fn default() -> Self {
        DepthProfile {
            hankel_order: 32,
            poly_order: 9,
            cf_depth: 64,
        }
    }
}

#[derive(Clone, Copy)]
enum DepthKind {
    Hankel,
    Poly,
    Cf,
    Fixed(usize),
}

/// One registry entry: a named check with its depth domain and bound.
pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    depth_kind: DepthKind,
    max_depth: usize,
    runner: fn(&Catalog, usize) -> CheckReport,
}

impl CheckDef {
    pub fn default_depth(&self, profile: &DepthProfile) -> usize {
        let d = match self.depth_kind {
            DepthKind::Hankel => profile.hankel_order,
            DepthKind::Poly => profile.poly_order,
            DepthKind::Cf => profile.cf_depth,
            DepthKind::Fixed(n) => n,
        };
        d.min(self.max_depth)
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }
}

/// The full check registry, in report order.
pub fn registry() -> &'static [CheckDef] {
    macro_rules! defs {
        ($(($id:literal, $summary:literal, $kind:expr, $max:expr, $runner:path),)*) => {
            &[$(CheckDef {
                id: $id,
                summary: $summary,
                depth_kind: $kind,
                max_depth: $max,
                runner: $runner,
            }),*]
        };
    }
    defs![
        (
            "C1-A037834-signed",
            "Hankel of 1-x+x^2 r(x^2) is a signed A037834",
            DepthKind::Hankel,
            40,
            checks::c1_a037834_signed
        ),
        (
            "C2-A268411-parity",
            "((-1)^C(n,2) - h_n)/2 for h = Hankel(1/(1+x r)) is a signed A268411",
            DepthKind::Hankel,
            40,
            checks::c2_a268411_parity
        ),
        (
            "C3-periodic-1m1m10",
            "Hankel of 1 - x/r(x^2) is the period-4 word 1,-1,-1,0",
            DepthKind::Hankel,
            40,
            checks::c3_periodic
        ),
        (
            "C3b-catalan-mod2",
            "Hankel of 1-x(1-x/c(x^2)) mod 2 has period 8",
            DepthKind::Hankel,
            40,
            checks::c3b_catalan_mod2
        ),
        (
            "C4-mod2-periodic",
            "Hankel of 1-x+x^2/r(x^2) mod 2 has period 8",
            DepthKind::Hankel,
            40,
            checks::c4_mod2_periodic
        ),
        (
            "C5-A005811-signed",
            "Hankel of x + 1/r(x^2) is a signed A005811(n+1)",
            DepthKind::Hankel,
            40,
            checks::c5_a005811_signed
        ),
        (
            "C6-A005811-shift",
            "Hankel of 1-x+x^2/(1-x^2 r(x^2)) follows A005811(n-1)",
            DepthKind::Hankel,
            40,
            checks::c6_a005811_shift
        ),
        (
            "C7-s-decomposition",
            "Hankel of 1+sx+x^2/(1-x^2 r(x^2)) decomposes as A + s^2 B",
            DepthKind::Hankel,
            40,
            checks::c7_s_decomposition
        ),
        (
            "C-J-aux",
            "J-fraction of 1+x/(1-x^2 r(x^2)) and its Hankel transform",
            DepthKind::Hankel,
            40,
            checks::cj_aux
        ),
        (
            "C8-A088748-sqrt",
            "sqrt|h_{2n}| of the rational Rueppel quotient equals A088748",
            DepthKind::Hankel,
            40,
            checks::c8_a088748_sqrt
        ),
        (
            "C9-sbc",
            "Stieltjes parameters of r_{b,c} follow the 8-periodic paper-folding pattern",
            DepthKind::Cf,
            128,
            checks::c9_sbc
        ),
        (
            "C9-hankel",
            "Hankel of r_{b,c} matches the printed monomial prefix",
            DepthKind::Poly,
            12,
            checks::c9_hankel
        ),
        (
            "P1-sign-alternation",
            "1+x-x^2 r(x^2) and 1-x r(x) share a Hankel transform",
            DepthKind::Hankel,
            40,
            checks::p1_sign_alternation
        ),
        (
            "P2-riordan",
            "coefficient array of the r_{b,b} tail is (r(x^2), -x r(x^2))",
            DepthKind::Fixed(24),
            32,
            checks::p2_riordan
        ),
        (
            "P3-stretched",
            "coefficient array of the r_{b,1} tail is the stripped stretched array",
            DepthKind::Fixed(24),
            32,
            checks::p3_stretched
        ),
        (
            "C10-sqrt-diff",
            "|h_n| = sqrt(|H_{n+1}| - |H_n|) for complement and difference transforms",
            DepthKind::Hankel,
            40,
            checks::c10_sqrt_diff
        ),
        (
            "C11-product",
            "(1 + (-1)^n h_n H_n)/2 equals A268411(n+1)",
            DepthKind::Hankel,
            40,
            checks::c11_product
        ),
        (
            "R-regressions",
            "every remaining printed prefix and closed form",
            DepthKind::Hankel,
            40,
            checks::r_regressions
        ),
    ]
}

pub fn find_check(id: &str) -> Result<&'static CheckDef, VerifyError> {
    registry()
        .iter()
        .find(|def| def.id == id)
        .ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))
}

/// Runs a single check. `depth` falls back to the profile default.
pub fn run_check(
    catalog: &Catalog,
    id: &str,
    depth: Option<usize>,
    profile: &DepthProfile,
) -> Result<CheckReport, VerifyError> {
    let def = find_check(id)?;
    let depth = depth.unwrap_or_else(|| def.default_depth(profile));
    if depth > def.max_depth {
        return Err(VerifyError::DepthInfeasible {
            id: id.to_string(),
            requested: depth,
            max: def.max_depth,
        });
    }
    Ok((def.runner)(catalog, depth))
}

/// Runs every registered check, up to `jobs` in parallel, and returns the
/// reports in registry order.
pub fn run_all(catalog: &Catalog, profile: &DepthProfile, jobs: usize) -> Vec<CheckReport> {
    let defs = registry();
    let workers = jobs.clamp(1, defs.len());
    let next = AtomicUsize::new(0);
    let collected: Mutex<Vec<(usize, CheckReport)>> = Mutex::new(Vec::with_capacity(defs.len()));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= defs.len() {
                    break;
                }
                let def = &defs[i];
                let report = (def.runner)(catalog, def.default_depth(profile));
                collected.lock().expect("no poisoned workers").push((i, report));
            });
        }
    });
    let mut collected = collected.into_inner().expect("workers joined");
    collected.sort_by_key(|(i, _)| *i);
    collected.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests;
