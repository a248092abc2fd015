//! Optional configuration file: simple `key = value` lines, `#` comments.
//! Looked up at `./rueppel-lab.toml` unless another path is given; every
//! value can be overridden by a command-line flag.

use std::collections::BTreeMap;
use std::path::Path;

/// Keys understood by the loader. Unknown keys are an error, so typos in a
/// config file fail loudly instead of being ignored.
pub const KNOWN_KEYS: [&str; 10] = [
    "ring",
    "format",
    "series_order",
    "hankel_order_int",
    "hankel_order_poly",
    "cf_depth",
    "verify_jobs",
    "oeis_base_url",
    "oeis_cache_dir",
    "oeis_offline",
];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FileConfig {
    pub values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, String> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|e| format!("config key {key} = {v:?}: {e}"))
            })
            .transpose()
    }

    pub fn get_bool(&self, key: &str) -> Result<Option<bool>, String> {
        self.get(key)
            .map(|v| match v {
                "true" | "1" => Ok(true),
                "false" | "0" => Ok(false),
                other => Err(format!("config key {key} = {other:?}: expected a boolean")),
            })
            .transpose()
    }
}

pub fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut values = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key = value", lineno + 1));
        };
        let key = key.trim();
        let value = value.trim().trim_matches('"');
        if !KNOWN_KEYS.contains(&key) {
            return Err(format!("config line {}: unknown key {key:?}", lineno + 1));
        }
        values.insert(key.to_string(), value.to_string());
    }
    Ok(FileConfig { values })
}

pub fn load_config(path: &Path) -> Result<FileConfig, String> {
    if !path.is_file() {
        return Ok(FileConfig::default());
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_config(&text)
}
