use super::*;
use crate::exact::Integer;

fn catalog() -> Catalog {
    Catalog::new()
}

#[test]
fn c3_passes_at_depth_40() {
    let report = run_check(&catalog(), "C3-periodic-1m1m10", Some(40), &DepthProfile::default())
        .unwrap();
    assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
    assert_eq!(report.depth_reached, 40);
}

#[test]
fn p1_passes_at_depth_40() {
    let report = run_check(&catalog(), "P1-sign-alternation", Some(40), &DepthProfile::default())
        .unwrap();
    assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
}

#[test]
fn c6_passes_at_depth_24() {
    let report =
        run_check(&catalog(), "C6-A005811-shift", Some(24), &DepthProfile::default()).unwrap();
    assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
}

#[test]
fn unknown_check_is_rejected() {
    assert_eq!(
        run_check(&catalog(), "C99-no-such", None, &DepthProfile::default()),
        Err(VerifyError::UnknownCheck("C99-no-such".into()))
    );
}

#[test]
fn infeasible_depth_is_rejected() {
    let err = run_check(&catalog(), "C9-hankel", Some(100), &DepthProfile::default()).unwrap_err();
    assert!(matches!(err, VerifyError::DepthInfeasible { .. }));
}

#[test]
fn reports_are_deterministic() {
    let profile = DepthProfile::default();
    let a = run_check(&catalog(), "C2-A268411-parity", Some(12), &profile).unwrap();
    let b = run_check(&catalog(), "C2-A268411-parity", Some(12), &profile).unwrap();
    assert_eq!(a, b);
}

#[test]
fn run_all_passes_at_a_small_profile() {
    let profile = DepthProfile {
        hankel_order: 10,
        poly_order: 7,
        cf_depth: 24,
    };
    let reports = run_all(&catalog(), &profile, 4);
    assert_eq!(reports.len(), registry().len());
    for report in &reports {
        assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
    }
    // Registry order is preserved regardless of scheduling.
    for (def, report) in registry().iter().zip(&reports) {
        assert_eq!(def.id, report.check_id);
    }
}

#[test]
fn run_all_passes_at_trivial_depth() {
    let profile = DepthProfile {
        hankel_order: 4,
        poly_order: 4,
        cf_depth: 8,
    };
    for report in run_all(&catalog(), &profile, 2) {
        assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
    }
}

#[test]
fn corrupted_catalog_fails_exactly_the_dependent_checks() {
    let corrupted = Catalog::new().with_override("A005811", 7, Integer::new(9));
    let profile = DepthProfile {
        hankel_order: 12,
        poly_order: 6,
        cf_depth: 16,
    };
    let reports = run_all(&corrupted, &profile, 4);
    let expect_fail = [
        "C5-A005811-signed",
        "C6-A005811-shift",
        "C7-s-decomposition",
        "R-regressions",
    ];
    for report in &reports {
        if expect_fail.contains(&report.check_id.as_str()) {
            assert_eq!(report.status, CheckStatus::Fail, "{report:?}");
            let ce = report.first_counterexample.as_ref().unwrap();
            // A005811(7) feeds C5 at n = 6, C6/C7 at n = 8, and the
            // printed run-count head at its own index 7.
            let expected_index = match report.check_id.as_str() {
                "C5-A005811-signed" => 6,
                "R-regressions" => 7,
                _ => 8,
            };
            assert_eq!(ce.index, expected_index, "{report:?}");
        } else {
            assert_eq!(report.status, CheckStatus::Pass, "{report:?}");
        }
    }
}

#[test]
fn corrupted_a268411_hits_c2_and_c11() {
    let corrupted = Catalog::new().with_override("A268411", 5, Integer::new(7));
    let profile = DepthProfile {
        hankel_order: 12,
        poly_order: 6,
        cf_depth: 16,
    };
    let reports = run_all(&corrupted, &profile, 4);
    for report in &reports {
        match report.check_id.as_str() {
            "C2-A268411-parity" => {
                assert_eq!(report.status, CheckStatus::Fail);
                assert_eq!(report.first_counterexample.as_ref().unwrap().index, 5);
            }
            "C11-product" => {
                assert_eq!(report.status, CheckStatus::Fail);
                assert_eq!(report.first_counterexample.as_ref().unwrap().index, 4);
            }
            _ => assert_eq!(report.status, CheckStatus::Pass, "{report:?}"),
        }
    }
}

#[test]
fn registry_ids_are_unique() {
    let mut ids: Vec<&str> = registry().iter().map(|d| d.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), registry().len());
}
