//! End-to-end binary tests: exit codes, format renderings, and the
//! stability of the machine-readable output.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rueppel-lab"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("OEIS_FIXTURE_DIR", Path::new(env!("CARGO_MANIFEST_DIR")).join("../oeis/fixtures"))
        .env("OEIS_OFFLINE", "1")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn hankel_reproduces_the_worked_example() {
    let out = run(&["hankel", "1 - x*r", "-n", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5"));
}

#[test]
fn cfrac_reproduces_the_rueppel_parameters() {
    let out = run(&["cfrac", "r", "--kind", "s", "-d", "11"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1"));
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify", "C11-product", "-d", "32"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn verify_all_at_small_depth() {
    let out = run(&[
        "verify",
        "all",
        "--depth-profile",
        "hankel=8,poly=6,cf=16",
        "--jobs",
        "4",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("C9-sbc"));
    assert!(!text.contains("fail"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["hankel", "nosuchatom", "-n", "4"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let out = run(&["cfrac", "r", "--kind", "q", "-d", "3"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let out = run(&["catalog", "A999999"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    // bfile format on a matrix payload is unusable.
    let out = run(&["--format", "bfile", "riordan", "--g", "1", "--f", "x", "-n", "3"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn computation_errors_exit_one() {
    // Division needs a unit constant term over the integer ring.
    let out = run(&["expand", "c / (2 + x)", "-n", "4"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("--ring rat"), "{err}");
}

#[test]
fn json_output_is_versioned_and_parses() {
    let out = run(&["--format", "json", "expand", "r", "-n", "8"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["schema"], "rueppel-lab/1");
    assert_eq!(value["command"], "expand");
    assert_eq!(value["payload"]["kind"], "sequence");
    assert_eq!(value["payload"]["values"][3], "1");
}

#[test]
fn bfile_output_reparses_through_the_oeis_client() {
    let out = run(&["--format", "bfile", "catalog", "A000108", "-n", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed = rueppel_oeis::parse_bfile("A000108", &text, rueppel_oeis::Source::Fixture)
        .expect("bfile output reparses");
    assert_eq!(parsed.entries.len(), 10);
    assert_eq!(
        parsed.value_at(9),
        Some(&rueppel_core::exact::Integer::new(4862))
    );
}

#[test]
fn csv_output_for_cfrac() {
    let out = run(&["--format", "csv", "cfrac", "c", "--kind", "j", "-d", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("k,alpha,beta"));
    assert!(text.contains("1,1,1"), "{text}");
    assert!(text.contains("2,2,1"), "{text}");
}

#[test]
fn compare_agrees_offline_and_exits_zero() {
    let out = run(&["compare", "A036987", "-n", "64"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("agrees"));
}

#[test]
fn poly_ring_commands_work_end_to_end() {
    let out = run(&["--ring", "poly-bc", "hankel", "rbc", "-n", "9"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(
        text.contains("1, -c^2, -b^2, b^4, b^4, -b^4*c^2, -b^6, b^8, b^8, -b^8*c^2"),
        "{text}"
    );
}

#[test]
fn config_file_sets_defaults() {
    let tmp = tempfile::tempdir().unwrap();
    let config_path = tmp.path().join("rueppel-lab.toml");
    std::fs::write(&config_path, "ring = rat\nseries_order = 5\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rueppel-lab"))
        .args([
            "--config",
            config_path.to_str().unwrap(),
            "expand",
            "1/2 + x",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("1/2, 1, 0, 0, 0"), "{text}");
}

#[test]
fn checks_listing_names_every_check() {
    let out = run(&["checks"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in [
        "C1-A037834-signed",
        "C9-sbc",
        "P1-sign-alternation",
        "R-regressions",
    ] {
        assert!(text.contains(id), "{id} missing from listing");
    }
}
