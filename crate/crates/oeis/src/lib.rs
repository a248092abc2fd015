//! OEIS b-file access for cross-validating the sequence catalog.
//!
//! Sixteen b-files ship as fixtures in this crate, so everything runs
//! offline; network fetching (with an atomically written local cache) is
//! available but entirely optional. The b-file format is plain ASCII,
//! one `index value` pair per line, `#` starting a comment.
//!
//! Configuration comes from explicit [`OeisConfig`] values, each with an
//! environment override: `OEIS_BASE_URL`, `OEIS_CACHE_DIR`,
//! `OEIS_FIXTURE_DIR` and `OEIS_OFFLINE` (set to `1` to forbid network
//! use regardless of the requested mode).

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use rueppel_core::exact::Integer;
use rueppel_core::series::Sequence;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("no fixture for {0} in {1}")]
    FixtureMissing(String, PathBuf),
    #[error("network unavailable or disabled: {0}")]
    NetworkUnavailable(String),
    #[error("b-file parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("sequence ranges do not overlap")]
    EmptyOverlap,
    #[error("malformed A-number {0:?}")]
    BadId(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Where a b-file came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Network,
    Fixture,
    Cache,
}

/// A parsed b-file: strictly increasing indices with exact values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub entries: Vec<(i64, Integer)>,
    pub source: Source,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn value_at(&self, index: i64) -> Option<&Integer> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }
}

/// Parses b-file text: `index value` lines, `#` comments, blank lines
/// ignored. Indices must be strictly increasing.
pub fn parse_bfile(id: &str, text: &str, source: Source) -> Result<BFile, OeisError> {
    let mut entries: Vec<(i64, Integer)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(index), Some(value)) = (parts.next(), parts.next()) else {
            return Err(OeisError::ParseError {
                line: lineno + 1,
                message: format!("expected `index value`, got {line:?}"),
            });
        };
        if parts.next().is_some() {
            return Err(OeisError::ParseError {
                line: lineno + 1,
                message: format!("trailing tokens in {line:?}"),
            });
        }
        let index: i64 = index.parse().map_err(|e| OeisError::ParseError {
            line: lineno + 1,
            message: format!("bad index {index:?}: {e}"),
        })?;
        let value: Integer = value.parse().map_err(|e| OeisError::ParseError {
            line: lineno + 1,
            message: format!("bad value {value:?}: {e}"),
        })?;
        if let Some(&(prev, _)) = entries.last() {
            if index <= prev {
                return Err(OeisError::ParseError {
                    line: lineno + 1,
                    message: format!("indices must increase: {prev} then {index}"),
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile {
        id: id.to_string(),
        entries,
        source,
    })
}

/// Renders a sequence in b-file format.
pub fn format_bfile(seq: &Sequence<Integer>) -> String {
    let mut out = String::new();
    for (i, v) in seq.terms().iter().enumerate() {
        out.push_str(&format!("{} {}\n", seq.offset() + i as i64, v));
    }
    out
}

/// Fetch behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FetchMode {
    /// Only the shipped fixtures; never touches the network or cache.
    FixtureOnly,
    /// Cache first, then the network, writing the cache atomically.
    NetworkWithCache,
}

/// Transport abstraction. The default implementation performs a real HTTP
/// GET; tests substitute counting or failing fetchers to prove hermeticity.
pub trait HttpFetcher: Send + Sync {
    fn get(&self, url: &str) -> Result<String, OeisError>;
}

/// `ureq`-backed fetcher.
pub struct NetFetcher;

impl HttpFetcher for NetFetcher {
    fn get(&self, url: &str) -> Result<String, OeisError> {
        let mut response = ureq::get(url)
            .call()
            .map_err(|e| OeisError::NetworkUnavailable(e.to_string()))?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| OeisError::NetworkUnavailable(e.to_string()))
    }
}

/// A fetcher that fails every request and counts the attempts; the test
/// seam for asserting that offline paths stay offline.
#[derive(Default)]
pub struct CountingFetcher {
    calls: AtomicU64,
}

impl CountingFetcher {
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::SeqCst)
    }
}

impl HttpFetcher for CountingFetcher {
    fn get(&self, _url: &str) -> Result<String, OeisError> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        Err(OeisError::NetworkUnavailable(
            "network disabled in this context".into(),
        ))
    }
}

#[derive(Debug, Clone)]
pub struct OeisConfig {
    pub base_url: String,
    pub cache_dir: PathBuf,
    pub fixture_dir: PathBuf,
    /// Forces fixture-only behavior regardless of the requested mode.
    pub offline: bool,
}

impl Default for OeisConfig {
    fn default() -> Self {
        OeisConfig {
            base_url: std::env::var("OEIS_BASE_URL")
                .unwrap_or_else(|_| "https://oeis.org".to_string()),
            cache_dir: std::env::var("OEIS_CACHE_DIR")
                .map(PathBuf::from)
                .unwrap_or_else(|_| PathBuf::from(".oeis-cache")),
            fixture_dir: std::env::var("OEIS_FIXTURE_DIR")
                .map(PathBuf::from)
                .unwrap_or_else(|_| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))),
            offline: std::env::var("OEIS_OFFLINE").map(|v| v == "1").unwrap_or(false),
        }
    }
}

/// Validates and normalizes an A-number like "A000108".
pub fn normalize_id(id: &str) -> Result<String, OeisError> {
    let id = id.trim().to_ascii_uppercase();
    let digits = id.strip_prefix('A').ok_or_else(|| OeisError::BadId(id.clone()))?;
    if digits.is_empty() || digits.len() > 9 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(OeisError::BadId(id));
    }
    Ok(format!("A{:0>6}", digits))
}

/// Per-A-number write locks, so concurrent cache mutation is serialized.
fn cache_lock(id: &str) -> std::sync::Arc<Mutex<()>> {
    static LOCKS: OnceLock<Mutex<HashMap<String, std::sync::Arc<Mutex<()>>>>> = OnceLock::new();
    let locks = LOCKS.get_or_init(|| Mutex::new(HashMap::new()));
    locks
        .lock()
        .expect("lock registry healthy")
        .entry(id.to_string())
        .or_default()
        .clone()
}

pub struct Client<'a> {
    config: OeisConfig,
    fetcher: &'a dyn HttpFetcher,
}

impl<'a> Client<'a> {
    pub fn new(config: OeisConfig, fetcher: &'a dyn HttpFetcher) -> Self {
        Client { config, fetcher }
    }

    fn fixture_path(&self, id: &str) -> PathBuf {
        self.config.fixture_dir.join(format!("{id}.txt"))
    }

    fn cache_path(&self, id: &str) -> PathBuf {
        self.config.cache_dir.join(format!("{id}.txt"))
    }

    /// Fetches a b-file in the requested mode. With `offline` set in the
    /// configuration, every request is served fixture-only.
    pub fn fetch_bfile(&self, id: &str, mode: FetchMode) -> Result<BFile, OeisError> {
        let id = normalize_id(id)?;
        let mode = if self.config.offline {
            FetchMode::FixtureOnly
        } else {
            mode
        };
        match mode {
            FetchMode::FixtureOnly => self.read_fixture(&id),
            FetchMode::NetworkWithCache => {
                let cache = self.cache_path(&id);
                if cache.is_file() {
                    let text = fs::read_to_string(&cache)?;
                    return parse_bfile(&id, &text, Source::Cache);
                }
                let url = format!(
                    "{}/{}/b{}.txt",
                    self.config.base_url.trim_end_matches('/'),
                    id,
                    &id[1..]
                );
                let text = self.fetcher.get(&url)?;
                // Validate before caching; a partial or malformed download
                // must never become a cache hit.
                let parsed = parse_bfile(&id, &text, Source::Network)?;
                self.write_cache_atomically(&id, &text)?;
                Ok(parsed)
            }
        }
    }

    fn read_fixture(&self, id: &str) -> Result<BFile, OeisError> {
        let path = self.fixture_path(id);
        if !path.is_file() {
            return Err(OeisError::FixtureMissing(
                id.to_string(),
                self.config.fixture_dir.clone(),
            ));
        }
        let text = fs::read_to_string(&path)?;
        parse_bfile(id, &text, Source::Fixture)
    }

    fn write_cache_atomically(&self, id: &str, text: &str) -> Result<(), OeisError> {
        let lock = cache_lock(id);
        let _guard = lock.lock().expect("cache lock healthy");
        fs::create_dir_all(&self.config.cache_dir)?;
        let final_path = self.cache_path(id);
        let tmp_path = self
            .config
            .cache_dir
            .join(format!("{id}.txt.tmp.{}", std::process::id()));
        {
            let mut tmp = fs::File::create(&tmp_path)?;
            tmp.write_all(text.as_bytes())?;
            tmp.sync_all()?;
        }
        fs::rename(&tmp_path, &final_path)?;
        Ok(())
    }
}

/// Outcome of comparing a locally generated sequence against a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub id: String,
    /// Number of indices compared.
    pub overlap: usize,
    /// First disagreement, if any: (index, local value, b-file value).
    pub first_mismatch: Option<(i64, Integer, Integer)>,
}

impl CompareReport {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Termwise comparison over the overlapping index range, after shifting
/// the local indices by `offset_shift`.
pub fn compare(
    local: &Sequence<Integer>,
    bfile: &BFile,
    offset_shift: i64,
) -> Result<CompareReport, OeisError> {
    let Some(b_first) = bfile.first_index() else {
        return Err(OeisError::EmptyOverlap);
    };
    let b_last = bfile.entries.last().map(|(i, _)| *i).expect("nonempty");
    let l_first = local.offset() + offset_shift;
    let l_last = l_first + local.len() as i64 - 1;
    let lo = b_first.max(l_first);
    let hi = b_last.min(l_last);
    if local.is_empty() || lo > hi {
        return Err(OeisError::EmptyOverlap);
    }
    let mut overlap = 0usize;
    let mut first_mismatch = None;
    for index in lo..=hi {
        let Some(remote) = bfile.value_at(index) else {
            continue;
        };
        let local_value = &local.terms()[(index - l_first) as usize];
        overlap += 1;
        if local_value != remote && first_mismatch.is_none() {
            first_mismatch = Some((index, local_value.clone(), remote.clone()));
        }
    }
    if overlap == 0 {
        return Err(OeisError::EmptyOverlap);
    }
    Ok(CompareReport {
        id: bfile.id.clone(),
        overlap,
        first_mismatch,
    })
}

/// Compares a catalog sequence against its shipped fixture, offline.
pub fn compare_catalog_fixture(
    catalog: &rueppel_core::catalog::Catalog,
    config: &OeisConfig,
    fetcher: &dyn HttpFetcher,
    id: &str,
    terms: usize,
) -> Result<CompareReport, OeisError> {
    let client = Client::new(config.clone(), fetcher);
    let bfile = client.fetch_bfile(id, FetchMode::FixtureOnly)?;
    let local = catalog
        .terms(id, terms)
        .map_err(|e| OeisError::FixtureMissing(e.to_string(), config.fixture_dir.clone()))?;
    compare(&local, &bfile, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_standard_format() {
        let text = "# header comment\n0 1\n1 1\n2 2\n3 5\n4 14\n";
        let b = parse_bfile("A000108", text, Source::Fixture).unwrap();
        assert_eq!(b.entries.len(), 5);
        assert_eq!(b.value_at(3), Some(&Integer::new(5)));
        assert_eq!(b.first_index(), Some(0));
    }

    #[test]
    fn reports_malformed_lines_with_their_number() {
        let text = "0 1\n1 1\n3 x\n";
        let err = parse_bfile("A000000", text, Source::Fixture).unwrap_err();
        match err {
            OeisError::ParseError { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn rejects_decreasing_indices() {
        let text = "0 1\n0 2\n";
        assert!(matches!(
            parse_bfile("A000000", text, Source::Fixture),
            Err(OeisError::ParseError { line: 2, .. })
        ));
    }

    #[test]
    fn id_normalization() {
        assert_eq!(normalize_id("a108").unwrap(), "A000108");
        assert_eq!(normalize_id("A000108").unwrap(), "A000108");
        assert!(normalize_id("000108").is_err());
        assert!(normalize_id("Axyz").is_err());
    }

    #[test]
    fn bfile_round_trips_through_the_formatter() {
        let seq: Sequence<Integer> = Sequence::from_i64s(&[3, -1, 4, -1, 5], 2);
        let text = format_bfile(&seq);
        let parsed = parse_bfile("A999999", &text, Source::Fixture).unwrap();
        assert_eq!(parsed.first_index(), Some(2));
        assert_eq!(parsed.value_at(4), Some(&Integer::new(4)));
        assert_eq!(parsed.entries.len(), 5);
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let b = parse_bfile("A000045", "0 0\n1 1\n2 1\n3 2\n4 3\n", Source::Fixture).unwrap();
        let good: Sequence<Integer> = Sequence::from_i64s(&[0, 1, 1, 2, 3], 0);
        assert!(compare(&good, &b, 0).unwrap().agrees());
        let bad: Sequence<Integer> = Sequence::from_i64s(&[0, 1, 9, 2, 3], 0);
        let report = compare(&bad, &b, 0).unwrap();
        assert_eq!(
            report.first_mismatch,
            Some((2, Integer::new(9), Integer::new(1)))
        );
        // A shift misaligns everything from the first index.
        let shifted = compare(&good, &b, 1).unwrap();
        assert_eq!(shifted.first_mismatch.as_ref().unwrap().0, 1);
    }

    #[test]
    fn empty_overlap_is_an_error() {
        let b = parse_bfile("A000045", "0 0\n1 1\n", Source::Fixture).unwrap();
        let far: Sequence<Integer> = Sequence::from_i64s(&[1, 2], 100);
        assert!(matches!(compare(&far, &b, 0), Err(OeisError::EmptyOverlap)));
    }
}
