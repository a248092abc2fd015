//! Offline guarantees: every catalog sequence matches its fixture with
//! zero network activity, the cache path writes atomically, and a
//! corrupted fixture is pinpointed at the exact index.

use std::path::PathBuf;

use rueppel_core::catalog::{Catalog, IDS};
use rueppel_core::exact::Integer;
use rueppel_oeis::{
    compare, compare_catalog_fixture, parse_bfile, Client, CountingFetcher, FetchMode,
    HttpFetcher, OeisConfig, OeisError, Source,
};

fn offline_config() -> OeisConfig {
    OeisConfig {
        base_url: "http://invalid.invalid".into(),
        cache_dir: PathBuf::from("/nonexistent-cache"),
        fixture_dir: PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")),
        offline: true,
    }
}

#[test]
fn all_catalog_sequences_match_fixtures_offline() {
    let catalog = Catalog::new();
    let fetcher = CountingFetcher::default();
    let config = offline_config();
    for id in IDS {
        let report = compare_catalog_fixture(&catalog, &config, &fetcher, id, 80).unwrap();
        assert!(report.agrees(), "{id}: {report:?}");
        assert!(report.overlap >= 64, "{id}: overlap {}", report.overlap);
    }
    assert_eq!(fetcher.calls(), 0, "offline mode performed network calls");
}

#[test]
fn offline_overrides_network_mode() {
    let fetcher = CountingFetcher::default();
    let client = Client::new(offline_config(), &fetcher);
    let bfile = client.fetch_bfile("A000108", FetchMode::NetworkWithCache).unwrap();
    assert_eq!(bfile.source, Source::Fixture);
    assert_eq!(fetcher.calls(), 0);
}

#[test]
fn missing_fixture_is_reported() {
    let fetcher = CountingFetcher::default();
    let client = Client::new(offline_config(), &fetcher);
    let err = client.fetch_bfile("A999999", FetchMode::FixtureOnly).unwrap_err();
    assert!(matches!(err, OeisError::FixtureMissing(..)), "{err}");
}

struct CannedFetcher {
    body: String,
}

impl HttpFetcher for CannedFetcher {
    fn get(&self, url: &str) -> Result<String, OeisError> {
        assert!(url.ends_with("/A000045/b000045.txt"), "unexpected url {url}");
        Ok(self.body.clone())
    }
}

#[test]
fn network_mode_caches_atomically_and_reuses_the_cache() {
    let tmp = tempfile::tempdir().unwrap();
    let config = OeisConfig {
        base_url: "https://example.invalid".into(),
        cache_dir: tmp.path().join("cache"),
        fixture_dir: tmp.path().join("no-fixtures"),
        offline: false,
    };
    let fetcher = CannedFetcher {
        body: "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n".into(),
    };
    let client = Client::new(config.clone(), &fetcher);
    let fetched = client.fetch_bfile("A45", FetchMode::NetworkWithCache).unwrap();
    assert_eq!(fetched.source, Source::Network);
    assert_eq!(fetched.value_at(5), Some(&Integer::new(5)));
    // No temporary files linger next to the final cache entry.
    let leftovers: Vec<_> = std::fs::read_dir(tmp.path().join("cache"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(leftovers, vec!["A000045.txt".to_string()]);
    // Second fetch is served from the cache without a network call.
    let counting = CountingFetcher::default();
    let cached_client = Client::new(config, &counting);
    let cached = cached_client
        .fetch_bfile("A000045", FetchMode::NetworkWithCache)
        .unwrap();
    assert_eq!(cached.source, Source::Cache);
    assert_eq!(cached.entries, fetched.entries);
    assert_eq!(counting.calls(), 0);
}

#[test]
fn malformed_network_payload_never_reaches_the_cache() {
    let tmp = tempfile::tempdir().unwrap();
    let config = OeisConfig {
        base_url: "https://example.invalid".into(),
        cache_dir: tmp.path().join("cache"),
        fixture_dir: tmp.path().join("no-fixtures"),
        offline: false,
    };
    let fetcher = CannedFetcher {
        body: "0 0\n1 oops\n".into(),
    };
    let client = Client::new(config, &fetcher);
    let err = client.fetch_bfile("A45", FetchMode::NetworkWithCache).unwrap_err();
    assert!(matches!(err, OeisError::ParseError { line: 2, .. }), "{err}");
    assert!(!tmp.path().join("cache").join("A000045.txt").exists());
}

#[test]
fn corrupted_fixture_value_is_pinpointed() {
    // Copy a real fixture, corrupt one value, and check the comparison
    // fails at exactly that index with the right pair of values.
    let tmp = tempfile::tempdir().unwrap();
    let fixtures = tmp.path().join("fixtures");
    std::fs::create_dir_all(&fixtures).unwrap();
    let original = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/A000108.txt"
    ))
    .unwrap();
    let corrupted: String = original
        .lines()
        .map(|line| {
            if line == "7 429" {
                "7 430".to_string()
            } else {
                line.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    assert_ne!(original, corrupted, "corruption target line must exist");
    std::fs::write(fixtures.join("A000108.txt"), corrupted).unwrap();

    let config = OeisConfig {
        base_url: "https://example.invalid".into(),
        cache_dir: tmp.path().join("cache"),
        fixture_dir: fixtures,
        offline: true,
    };
    let fetcher = CountingFetcher::default();
    let report =
        compare_catalog_fixture(&Catalog::new(), &config, &fetcher, "A000108", 80).unwrap();
    assert_eq!(
        report.first_mismatch,
        Some((7, Integer::new(429), Integer::new(430)))
    );
    assert_eq!(fetcher.calls(), 0);
}

#[test]
fn comment_lines_and_blank_lines_are_ignored() {
    let text = "# one\n\n# two\n10 5\n11 -6\n";
    let b = parse_bfile("A000001", text, Source::Fixture).unwrap();
    assert_eq!(b.entries.len(), 2);
    assert_eq!(b.first_index(), Some(10));
    let local = rueppel_core::series::Sequence::from_i64s(&[5, -6], 10);
    assert!(compare(&local, &b, 0).unwrap().agrees());
}
