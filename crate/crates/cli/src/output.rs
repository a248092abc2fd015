//! Machine-readable output records and their renderings.
//!
//! Every subcommand produces one [`OutputRecord`]; `--format` selects the
//! rendering. The JSON layout is versioned through the `schema` field and
//! round-trips through serde. The b-file rendering is only defined for
//! sequence payloads and re-parses through the OEIS client.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "rueppel-lab/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
    BFile,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "bfile" => Ok(Format::BFile),
            other => Err(format!("unknown format {other:?} (plain, json, csv, bfile)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Sequence {
        offset: i64,
        values: Vec<String>,
    },
    ContinuedFraction {
        fraction_kind: String,
        a0: String,
        alphas: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        betas: Option<Vec<String>>,
        finite: bool,
    },
    Matrix {
        rows: Vec<Vec<String>>,
    },
    Reports {
        reports: Vec<ReportDto>,
    },
    Compare {
        id: String,
        source: String,
        overlap: usize,
        agrees: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        first_mismatch: Option<MismatchDto>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDto {
    pub check_id: String,
    pub status: String,
    pub depth_requested: usize,
    pub depth_reached: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<MismatchDto>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MismatchDto {
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub payload: Payload,
}

impl OutputRecord {
    pub fn new(command: &str, params: BTreeMap<String, String>, payload: Payload) -> Self {
        OutputRecord {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            params,
            payload,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self)
                .map(|mut s| {
                    s.push('\n');
                    s
                })
                .map_err(|e| e.to_string()),
            Format::Plain => Ok(self.render_plain()),
            Format::Csv => Ok(self.render_csv()),
            Format::BFile => self.render_bfile(),
        }
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Sequence { offset, values } => {
                let _ = writeln!(out, "# {} (offset {offset})", self.command);
                let _ = writeln!(out, "{}", values.join(", "));
            }
            Payload::ContinuedFraction {
                fraction_kind,
                a0,
                alphas,
                betas,
                finite,
            } => {
                let _ = writeln!(out, "# {fraction_kind}-fraction, a0 = {a0}");
                let _ = writeln!(out, "alphas: {}", alphas.join(", "));
                if let Some(betas) = betas {
                    let _ = writeln!(out, "betas:  {}", betas.join(", "));
                }
                if *finite {
                    let _ = writeln!(out, "(terminates)");
                }
            }
            Payload::Matrix { rows } => {
                for row in rows {
                    let _ = writeln!(out, "{}", row.join("\t"));
                }
            }
            Payload::Reports { reports } => {
                for r in reports {
                    let _ = write!(
                        out,
                        "{:6} {} (depth {}/{})",
                        r.status, r.check_id, r.depth_reached, r.depth_requested
                    );
                    if let Some(ce) = &r.first_counterexample {
                        let _ = write!(
                            out,
                            "  first counterexample at {}: expected {}, got {}",
                            ce.index, ce.expected, ce.actual
                        );
                    }
                    out.push('\n');
                    for note in &r.notes {
                        let _ = writeln!(out, "       {note}");
                    }
                }
            }
            Payload::Compare {
                id,
                source,
                overlap,
                agrees,
                first_mismatch,
            } => {
                if *agrees {
                    let _ =
                        writeln!(out, "{id}: agrees with the {source} b-file over {overlap} terms");
                } else if let Some(m) = first_mismatch {
                    let _ = writeln!(
                        out,
                        "{id}: MISMATCH at index {} (local {}, b-file {}); {} terms compared",
                        m.index, m.expected, m.actual, overlap
                    );
                }
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Sequence { offset, values } => {
                let _ = writeln!(out, "index,value");
                for (i, v) in values.iter().enumerate() {
                    let _ = writeln!(out, "{},{v}", offset + i as i64);
                }
            }
            Payload::ContinuedFraction { a0, alphas, betas, .. } => {
                let _ = writeln!(out, "k,alpha,beta");
                let _ = writeln!(out, "0,{a0},");
                for (i, a) in alphas.iter().enumerate() {
                    let beta = betas
                        .as_ref()
                        .and_then(|b| b.get(i))
                        .cloned()
                        .unwrap_or_default();
                    let _ = writeln!(out, "{},{a},{beta}", i + 1);
                }
            }
            Payload::Matrix { rows } => {
                for row in rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
            }
            Payload::Reports { reports } => {
                let _ = writeln!(out, "check_id,status,depth_reached,counterexample_index");
                for r in reports {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        r.check_id,
                        r.status,
                        r.depth_reached,
                        r.first_counterexample
                            .as_ref()
                            .map(|c| c.index.to_string())
                            .unwrap_or_default()
                    );
                }
            }
            Payload::Compare {
                id,
                overlap,
                agrees,
                first_mismatch,
                ..
            } => {
                let _ = writeln!(out, "id,overlap,agrees,mismatch_index");
                let _ = writeln!(
                    out,
                    "{id},{overlap},{agrees},{}",
                    first_mismatch
                        .as_ref()
                        .map(|m| m.index.to_string())
                        .unwrap_or_default()
                );
            }
        }
        out
    }

    fn render_bfile(&self) -> Result<String, String> {
        match &self.payload {
            Payload::Sequence { offset, values } => {
                let mut out = String::new();
                for (i, v) in values.iter().enumerate() {
                    let _ = writeln!(out, "{} {v}", offset + i as i64);
                }
                Ok(out)
            }
            _ => Err("--format bfile applies only to sequence output".to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> OutputRecord {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), "3".to_string());
        OutputRecord::new(
            "catalog",
            params,
            Payload::Sequence {
                offset: 0,
                values: vec!["1".into(), "1".into(), "2".into()],
            },
        )
    }

    #[test]
    fn json_round_trips() {
        let r = record();
        let json = r.render(Format::Json).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema, SCHEMA);
    }

    #[test]
    fn bfile_rendering_is_sequences_only() {
        assert!(record().render(Format::BFile).is_ok());
        let other = OutputRecord::new(
            "riordan",
            BTreeMap::new(),
            Payload::Matrix {
                rows: vec![vec!["1".into()]],
            },
        );
        assert!(other.render(Format::BFile).is_err());
    }

    #[test]
    fn csv_sequence_has_indices() {
        let csv = record().render(Format::Csv).unwrap();
        assert_eq!(csv, "index,value\n0,1\n1,1\n2,2\n");
    }
}
