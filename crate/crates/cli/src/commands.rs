//! Subcommand implementations, shared by the binary and the integration
//! tests.

use std::collections::BTreeMap;

use rueppel_core::catalog::Catalog;
use rueppel_core::cfrac::{jacobi_expand, stieltjes_expand};
use rueppel_core::exact::{Integer, Poly2, Rational, Ring};
use rueppel_core::hankel::{hankel_transform, Matrix};
use rueppel_core::riordan::{riordan_apply, riordan_build, strip_first_row};
use rueppel_core::series::Sequence;
use rueppel_core::verify::{run_all, run_check, CheckStatus, DepthProfile};
use rueppel_oeis::{Client, CountingFetcher, FetchMode, HttpFetcher, NetFetcher, OeisConfig};

use crate::expr::{self, CliRing};
use crate::output::{MismatchDto, OutputRecord, Payload, ReportDto};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or an unusable flag combination; exit code 2.
    Usage(String),
    /// The computation itself reported a failure; exit code 1.
    Computation(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Computation(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RingKind {
    #[default]
    Int,
    Rat,
    PolyBC,
}

impl std::str::FromStr for RingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "int" => Ok(RingKind::Int),
            "rat" => Ok(RingKind::Rat),
            "poly-bc" => Ok(RingKind::PolyBC),
            other => Err(format!("unknown ring {other:?} (int, rat, poly-bc)")),
        }
    }
}

/// Resolved settings: config-file values with flag overrides applied.
#[derive(Debug, Clone)]
pub struct Settings {
    pub ring: RingKind,
    pub series_order: usize,
    pub hankel_order_int: usize,
    pub hankel_order_poly: usize,
    pub cf_depth: usize,
    pub jobs: usize,
    pub oeis: OeisConfig,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            ring: RingKind::Int,
            series_order: 64,
            hankel_order_int: 40,
            hankel_order_poly: 10,
            cf_depth: 24,
            jobs: 4,
            oeis: OeisConfig::default(),
        }
    }
}

/// A successfully produced record, plus whether a verification-style
/// command found a failure (exit code 3).
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    pub verification_failed: bool,
}

impl Outcome {
    fn ok(record: OutputRecord) -> Self {
        Outcome {
            record,
            verification_failed: false,
        }
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn looks_like_a_number(s: &str) -> bool {
    let s = s.trim();
    s.len() >= 2
        && (s.starts_with('A') || s.starts_with('a'))
        && s[1..].bytes().all(|b| b.is_ascii_digit())
}

fn parse_expr(src: &str) -> Result<expr::Expr, CliError> {
    expr::parse(src).map_err(|e| CliError::Usage(e.to_string()))
}

fn eval_series<R: CliRing>(src: &str, order: usize) -> Result<Vec<R>, CliError> {
    let parsed = parse_expr(src)?;
    let series =
        expr::eval::<R>(&parsed, order).map_err(|e| CliError::Computation(e.to_string()))?;
    Ok(series.coeffs().to_vec())
}

fn sequence_payload<R: Ring>(offset: i64, values: &[R]) -> Payload {
    Payload::Sequence {
        offset,
        values: values.iter().map(|v| v.to_string()).collect(),
    }
}

pub fn expand(settings: &Settings, source: &str, n: usize) -> Result<Outcome, CliError> {
    let payload = match settings.ring {
        RingKind::Int => sequence_payload(0, &eval_series::<Integer>(source, n)?),
        RingKind::Rat => sequence_payload(0, &eval_series::<Rational>(source, n)?),
        RingKind::PolyBC => sequence_payload(0, &eval_series::<Poly2>(source, n)?),
    };
    Ok(Outcome::ok(OutputRecord::new(
        "expand",
        params(&[
            ("expr", source.to_string()),
            ("n", n.to_string()),
            ("ring", format!("{:?}", settings.ring).to_lowercase()),
        ]),
        payload,
    )))
}

fn hankel_of<R: CliRing>(
    source: &str,
    n_max: usize,
    shift: usize,
) -> Result<Vec<R>, CliError> {
    let order = 2 * n_max + 1 + shift;
    let coeffs = eval_series::<R>(source, order)?;
    let seq = Sequence::new(coeffs, 0).shift_terms(shift);
    let transform =
        hankel_transform(&seq, n_max).map_err(|e| CliError::Computation(e.to_string()))?;
    Ok(transform.values().terms().to_vec())
}

pub fn hankel(
    settings: &Settings,
    target: &str,
    n: Option<usize>,
    shift: usize,
) -> Result<Outcome, CliError> {
    let default_n = match settings.ring {
        RingKind::PolyBC => settings.hankel_order_poly,
        _ => settings.hankel_order_int,
    };
    let n_max = n.unwrap_or(default_n);
    let payload = if looks_like_a_number(target) {
        let catalog = Catalog::new();
        let needed = 2 * n_max + 1 + shift;
        let seq = catalog
            .terms(target, needed)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .shift_terms(shift);
        let transform =
            hankel_transform(&seq, n_max).map_err(|e| CliError::Computation(e.to_string()))?;
        sequence_payload(0, transform.values().terms())
    } else {
        match settings.ring {
            RingKind::Int => sequence_payload(0, &hankel_of::<Integer>(target, n_max, shift)?),
            RingKind::Rat => sequence_payload(0, &hankel_of::<Rational>(target, n_max, shift)?),
            RingKind::PolyBC => sequence_payload(0, &hankel_of::<Poly2>(target, n_max, shift)?),
        }
    };
    Ok(Outcome::ok(OutputRecord::new(
        "hankel",
        params(&[
            ("target", target.to_string()),
            ("n", n_max.to_string()),
            ("shift", shift.to_string()),
        ]),
        payload,
    )))
}

fn cfrac_payload<R>(source: &str, kind: &str, depth: usize) -> Result<Payload, CliError>
where
    R: CliRing + rueppel_core::exact::ToField,
{
    let order = 2 * depth + 2;
    let coeffs = eval_series::<R>(source, order)?;
    let series = rueppel_core::series::Series::from_coeffs(coeffs);
    match kind {
        "s" => {
            let f = stieltjes_expand(&series, depth)
                .map_err(|e| CliError::Computation(e.to_string()))?;
            Ok(Payload::ContinuedFraction {
                fraction_kind: "s".into(),
                a0: f.a0().to_string(),
                alphas: f.alphas().iter().map(|a| a.to_string()).collect(),
                betas: None,
                finite: f.is_finite(),
            })
        }
        "j" => {
            let f = jacobi_expand(&series, depth)
                .map_err(|e| CliError::Computation(e.to_string()))?;
            Ok(Payload::ContinuedFraction {
                fraction_kind: "j".into(),
                a0: f.a0().to_string(),
                alphas: f.alphas().iter().map(|a| a.to_string()).collect(),
                betas: Some(f.betas().iter().map(|b| b.to_string()).collect()),
                finite: f.is_finite(),
            })
        }
        other => Err(CliError::Usage(format!("unknown kind {other:?} (s or j)"))),
    }
}

pub fn cfrac(
    settings: &Settings,
    source: &str,
    kind: &str,
    depth: Option<usize>,
) -> Result<Outcome, CliError> {
    let depth = depth.unwrap_or(settings.cf_depth);
    let payload = match settings.ring {
        RingKind::Int => cfrac_payload::<Integer>(source, kind, depth)?,
        RingKind::Rat => cfrac_payload::<Rational>(source, kind, depth)?,
        RingKind::PolyBC => cfrac_payload::<Poly2>(source, kind, depth)?,
    };
    Ok(Outcome::ok(OutputRecord::new(
        "cfrac",
        params(&[
            ("expr", source.to_string()),
            ("kind", kind.to_string()),
            ("depth", depth.to_string()),
        ]),
        payload,
    )))
}

fn matrix_payload<R: Ring>(m: &Matrix<R>) -> Payload {
    Payload::Matrix {
        rows: m
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

fn riordan_in<R: CliRing>(
    g_src: &str,
    f_src: &str,
    n: usize,
    strip: bool,
    apply: Option<&str>,
) -> Result<Payload, CliError> {
    let rows = if strip { n + 1 } else { n };
    let g = rueppel_core::series::Series::from_coeffs(eval_series::<R>(g_src, rows)?);
    let f = rueppel_core::series::Series::from_coeffs(eval_series::<R>(f_src, rows)?);
    if let Some(h_src) = apply {
        let h = rueppel_core::series::Series::from_coeffs(eval_series::<R>(h_src, rows)?);
        let applied =
            riordan_apply(&g, &f, &h).map_err(|e| CliError::Computation(e.to_string()))?;
        return Ok(sequence_payload(0, applied.coeffs()));
    }
    let mut matrix =
        riordan_build(&g, &f, rows).map_err(|e| CliError::Computation(e.to_string()))?;
    if strip {
        matrix = strip_first_row(&matrix).map_err(|e| CliError::Computation(e.to_string()))?;
        matrix = Matrix::from_rows(
            matrix.rows().iter().map(|r| r[..n].to_vec()).collect(),
        );
    }
    Ok(matrix_payload(&matrix))
}

#[allow(clippy::too_many_arguments)]
pub fn riordan(
    settings: &Settings,
    g_src: &str,
    f_src: &str,
    n: usize,
    strip: bool,
    apply: Option<&str>,
) -> Result<Outcome, CliError> {
    if strip && apply.is_some() {
        return Err(CliError::Usage(
            "--strip-first-row and --apply are mutually exclusive".into(),
        ));
    }
    let payload = match settings.ring {
        RingKind::Int => riordan_in::<Integer>(g_src, f_src, n, strip, apply)?,
        RingKind::Rat => riordan_in::<Rational>(g_src, f_src, n, strip, apply)?,
        RingKind::PolyBC => riordan_in::<Poly2>(g_src, f_src, n, strip, apply)?,
    };
    Ok(Outcome::ok(OutputRecord::new(
        "riordan",
        params(&[
            ("g", g_src.to_string()),
            ("f", f_src.to_string()),
            ("n", n.to_string()),
            ("strip_first_row", strip.to_string()),
            ("apply", apply.unwrap_or("").to_string()),
        ]),
        payload,
    )))
}

pub fn catalog_terms(_settings: &Settings, id: &str, n: usize) -> Result<Outcome, CliError> {
    let catalog = Catalog::new();
    let seq = catalog
        .terms(id, n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Outcome::ok(OutputRecord::new(
        "catalog",
        params(&[("id", id.to_string()), ("n", n.to_string())]),
        sequence_payload(seq.offset(), seq.terms()),
    )))
}

fn report_dto(report: &rueppel_core::verify::CheckReport) -> ReportDto {
    ReportDto {
        check_id: report.check_id.clone(),
        status: report.status.to_string(),
        depth_requested: report.depth_requested,
        depth_reached: report.depth_reached,
        first_counterexample: report.first_counterexample.as_ref().map(|c| MismatchDto {
            index: c.index,
            expected: c.expected.clone(),
            actual: c.actual.clone(),
        }),
        notes: report.notes.clone(),
    }
}

pub fn parse_depth_profile(spec: &str) -> Result<DepthProfile, CliError> {
    let mut profile = DepthProfile::default();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((key, value)) = part.split_once('=') else {
            return Err(CliError::Usage(format!(
                "depth profile entries look like hankel=32, got {part:?}"
            )));
        };
        let value: usize = value
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad depth {value:?}: {e}")))?;
        match key.trim() {
            "hankel" => profile.hankel_order = value,
            "poly" => profile.poly_order = value,
            "cf" => profile.cf_depth = value,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown depth profile key {other:?} (hankel, poly, cf)"
                )))
            }
        }
    }
    Ok(profile)
}

pub fn verify(
    settings: &Settings,
    target: &str,
    depth: Option<usize>,
    profile: &DepthProfile,
) -> Result<Outcome, CliError> {
    let catalog = Catalog::new();
    let reports = if target == "all" {
        // A bare depth override applies to the integer-sequence checks.
        let mut profile = *profile;
        if let Some(d) = depth {
            profile.hankel_order = d;
        }
        run_all(&catalog, &profile, settings.jobs)
    } else {
        vec![run_check(&catalog, target, depth, profile)
            .map_err(|e| CliError::Usage(e.to_string()))?]
    };
    let verification_failed = reports.iter().any(|r| r.status == CheckStatus::Fail);
    let record = OutputRecord::new(
        "verify",
        params(&[
            ("target", target.to_string()),
            (
                "depth",
                depth.map(|d| d.to_string()).unwrap_or_default(),
            ),
        ]),
        Payload::Reports {
            reports: reports.iter().map(report_dto).collect(),
        },
    );
    Ok(Outcome {
        record,
        verification_failed,
    })
}

pub fn compare(
    settings: &Settings,
    id: &str,
    n: usize,
    network: bool,
) -> Result<Outcome, CliError> {
    let catalog = Catalog::new();
    let local = catalog
        .terms(id, n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mode = if network {
        FetchMode::NetworkWithCache
    } else {
        FetchMode::FixtureOnly
    };
    let counting = CountingFetcher::default();
    let net = NetFetcher;
    let fetcher: &dyn HttpFetcher = if network { &net } else { &counting };
    let client = Client::new(settings.oeis.clone(), fetcher);
    let bfile = client
        .fetch_bfile(id, mode)
        .map_err(|e| CliError::Computation(e.to_string()))?;
    let source = format!("{:?}", bfile.source).to_lowercase();
    let report = rueppel_oeis::compare(&local, &bfile, 0)
        .map_err(|e| CliError::Computation(e.to_string()))?;
    let agrees = report.agrees();
    let record = OutputRecord::new(
        "compare",
        params(&[("id", id.to_string()), ("n", n.to_string())]),
        Payload::Compare {
            id: report.id,
            source,
            overlap: report.overlap,
            agrees,
            first_mismatch: report.first_mismatch.map(|(index, local, remote)| MismatchDto {
                index,
                expected: local.to_string(),
                actual: remote.to_string(),
            }),
        },
    );
    Ok(Outcome {
        record,
        verification_failed: !agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(outcome: &Outcome) -> Vec<String> {
        match &outcome.record.payload {
            Payload::Sequence { values, .. } => values.clone(),
            other => panic!("expected sequence payload, got {other:?}"),
        }
    }

    #[test]
    fn hankel_of_expression_matches_printed_values() {
        let settings = Settings::default();
        let outcome = hankel(&settings, "1 - x*r", Some(10), 0).unwrap();
        assert_eq!(
            values(&outcome),
            ["1", "-2", "3", "2", "-3", "4", "3", "2", "-3", "4", "-5"]
        );
    }

    #[test]
    fn hankel_accepts_catalog_ids_and_shifts() {
        let settings = Settings::default();
        let direct = hankel(&settings, "A036987", Some(8), 1).unwrap();
        // Shifted Rueppel: the transform of r_{n+1}.
        assert_eq!(
            values(&direct),
            ["1", "1", "-1", "-1", "-1", "1", "-1", "-1", "-1"]
        );
    }

    #[test]
    fn cfrac_of_rueppel() {
        let settings = Settings::default();
        let outcome = cfrac(&settings, "r", "s", Some(11)).unwrap();
        match &outcome.record.payload {
            Payload::ContinuedFraction { alphas, betas, .. } => {
                assert_eq!(
                    alphas,
                    &["1", "-1", "-1", "1", "-1", "1", "-1", "1", "1", "-1", "1"]
                );
                assert!(betas.is_none());
            }
            other => panic!("unexpected payload {other:?}"),
        }
    }

    #[test]
    fn expand_respects_ring() {
        let mut settings = Settings::default();
        let int_err = expand(&settings, "1/2 + c", 4).unwrap_err();
        assert!(matches!(int_err, CliError::Computation(_)));
        settings.ring = RingKind::Rat;
        let ok = expand(&settings, "1/2 + c", 4).unwrap();
        assert_eq!(values(&ok)[0], "3/2");
    }

    #[test]
    fn poly_ring_serves_the_generalized_sequence() {
        let settings = Settings {
            ring: RingKind::PolyBC,
            ..Settings::default()
        };
        let outcome = hankel(&settings, "rbc", Some(7), 0).unwrap();
        assert_eq!(
            values(&outcome),
            ["1", "-c^2", "-b^2", "b^4", "b^4", "-b^4*c^2", "-b^6", "b^8"]
        );
    }

    #[test]
    fn riordan_build_strip_and_apply() {
        let settings = Settings::default();
        let built = riordan(&settings, "1", "x", 3, false, None).unwrap();
        match &built.record.payload {
            Payload::Matrix { rows } => {
                assert_eq!(rows[0], ["1", "0", "0"]);
                assert_eq!(rows[2], ["0", "0", "1"]);
            }
            other => panic!("unexpected payload {other:?}"),
        }
        // Stripping is row-preserving: one extra row is built first, so
        // the result is still n x n with everything shifted up.
        let stripped = riordan(&settings, "1", "x", 2, true, None).unwrap();
        match &stripped.record.payload {
            Payload::Matrix { rows } => {
                assert_eq!(rows, &[vec!["0", "1"], vec!["0", "0"]])
            }
            other => panic!("unexpected payload {other:?}"),
        }
        let applied = riordan(&settings, "r(x^2)", "-x*r(x^2)", 8, false, Some("1/(1-x)")).unwrap();
        assert_eq!(
            values(&applied),
            ["1", "-1", "2", "-3", "4", "-6", "10", "-15"]
        );
        assert!(matches!(
            riordan(&settings, "1", "x", 2, true, Some("c")),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn verify_single_check_and_failure_flag() {
        let settings = Settings::default();
        let outcome = verify(
            &settings,
            "C11-product",
            Some(32),
            &DepthProfile::default(),
        )
        .unwrap();
        assert!(!outcome.verification_failed);
        match &outcome.record.payload {
            Payload::Reports { reports } => {
                assert_eq!(reports.len(), 1);
                assert_eq!(reports[0].status, "pass");
                assert_eq!(reports[0].depth_reached, 32);
            }
            other => panic!("unexpected payload {other:?}"),
        }
    }

    #[test]
    fn unknown_verify_target_is_usage_error() {
        let settings = Settings::default();
        assert!(matches!(
            verify(&settings, "C99", None, &DepthProfile::default()),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn depth_profile_parsing() {
        let p = parse_depth_profile("hankel=12, poly=5, cf=16").unwrap();
        assert_eq!((p.hankel_order, p.poly_order, p.cf_depth), (12, 5, 16));
        assert!(parse_depth_profile("bogus=3").is_err());
        assert!(parse_depth_profile("hankel:3").is_err());
    }

    #[test]
    fn compare_uses_fixtures_offline() {
        let settings = Settings {
            oeis: OeisConfig {
                base_url: "https://example.invalid".into(),
                cache_dir: std::env::temp_dir().join("rueppel-compare-test"),
                fixture_dir: std::path::PathBuf::from(concat!(
                    env!("CARGO_MANIFEST_DIR"),
                    "/../oeis/fixtures"
                )),
                offline: true,
            },
            ..Settings::default()
        };
        let outcome = compare(&settings, "A000108", 40, false).unwrap();
        assert!(!outcome.verification_failed);
        match &outcome.record.payload {
            Payload::Compare { agrees, overlap, .. } => {
                assert!(agrees);
                assert_eq!(*overlap, 40);
            }
            other => panic!("unexpected payload {other:?}"),
        }
    }
}
