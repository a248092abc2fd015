//! Fixture integrity: the shipped b-files reproduce the catalog exactly,
//! and can be regenerated with
//! `cargo test -p rueppel-oeis --test fixtures -- --ignored regenerate`.

use std::fmt::Write as _;
use std::path::PathBuf;

use rueppel_core::catalog::{Catalog, IDS};
use rueppel_oeis::format_bfile;

const FIXTURE_TERMS: usize = 80;

fn fixture_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

fn describe(id: &str) -> &'static str {
    match id {
        "A000108" => "Catalan numbers",
        "A005811" => "number of runs in the binary expansion of n",
        "A006257" => "Josephus problem survivor (every second eliminated)",
        "A014577" => "regular paper-folding (dragon curve) sequence",
        "A036563" => "2^n - 3",
        "A036987" => "Rueppel (Fredholm-Rueppel) characteristic sequence",
        "A037834" => "adjacent-bit alternations in the binary expansion of n",
        "A043545" => "complement of the Rueppel sequence",
        "A043725" => "numbers whose binary run count is 1 mod 4",
        "A062050" => "n-th chunk of the ruler-like restart sequence",
        "A088567" => "non-squashing partitions into distinct parts",
        "A088748" => "1 plus the number of binary runs of n",
        "A110036" => "negated Jacobi alphas of the Rueppel generating function, shifted",
        "A126983" => "expansion of 1/(1 + x c(x))",
        "A268411" => "parity of the number of runs of ones in binary n",
        "A339422" => "expansion of 1/(1 + x r(x))",
        _ => "sequence",
    }
}

fn render(id: &str) -> String {
    let catalog = Catalog::new();
    let seq = catalog.terms(id, FIXTURE_TERMS).expect("catalog id");
    let mut out = String::new();
    writeln!(out, "# {id}: {}.", describe(id)).unwrap();
    writeln!(
        out,
        "# Generated by the rueppel-lab catalog generator ({FIXTURE_TERMS} terms, offset {}).",
        seq.offset()
    )
    .unwrap();
    writeln!(
        out,
        "# Regenerate: cargo test -p rueppel-oeis --test fixtures -- --ignored regenerate"
    )
    .unwrap();
    out.push_str(&format_bfile(&seq));
    out
}

#[test]
#[ignore = "writes the fixture files; run explicitly after generator changes"]
fn regenerate() {
    let dir = fixture_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for id in IDS {
        std::fs::write(dir.join(format!("{id}.txt")), render(id)).unwrap();
    }
}

#[test]
fn shipped_fixtures_match_the_generators() {
    for id in IDS {
        let path = fixture_dir().join(format!("{id}.txt"));
        let on_disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("fixture {id} missing ({e}); run the regenerate test"));
        assert_eq!(on_disk, render(id), "{id} fixture is stale");
    }
}
