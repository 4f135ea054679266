//! Run records and their CSV / JSON serialization.
//!
//! Floats are written in their shortest round-trip form (`{:?}`), so reruns
//! of one config produce byte-identical numeric fields.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::cli::config::OutputFormat;
use crate::error::Result;

pub const DISTRIBUTION_HEADER: &str = "vertex_index,s,x,probability";
pub const SERIES_HEADER: &str = "t,running_average";
pub const SPECTRUM_HEADER: &str = "k,j,re,im,source,abs_err";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexRow {
    pub vertex_index: usize,
    pub s: u8,
    pub x: usize,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesRow {
    pub t: usize,
    pub running_average: f64,
}

/// Both long-time limits at the designated vertex. `gap` is
/// `degenerate_limit − theorem1_limit`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitSummary {
    pub theorem1_limit: f64,
    pub degenerate_limit: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenSource {
    Numeric,
    Analytic,
}

impl EigenSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenSource::Numeric => "numeric",
            EigenSource::Analytic => "analytic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub k: usize,
    /// 1-based eigenvalue index within the block.
    pub j: usize,
    pub re: f64,
    pub im: f64,
    pub source: EigenSource,
    /// `|numeric − analytic|` for the matched pair; absent without a closed
    /// form.
    pub abs_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunResults {
    Distribution {
        rows: Vec<VertexRow>,
    },
    TimeSeries {
        vertex: usize,
        rows: Vec<SeriesRow>,
        limits: LimitSummary,
    },
    Spectrum {
        rows: Vec<SpectrumRow>,
        /// Eigenvalues found in every block, as `[re, im]`.
        flat_bands: Vec<[f64; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub version: String,
    pub wall_time_s: f64,
    pub results: RunResults,
}

impl RunRecord {
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        match &self.results {
            RunResults::Distribution { rows } => {
                writeln!(w, "{DISTRIBUTION_HEADER}")?;
                for r in rows {
                    writeln!(w, "{},{},{},{:?}", r.vertex_index, r.s, r.x, r.probability)?;
                }
            }
            RunResults::TimeSeries { rows, .. } => {
                writeln!(w, "{SERIES_HEADER}")?;
                for r in rows {
                    writeln!(w, "{},{:?}", r.t, r.running_average)?;
                }
            }
            RunResults::Spectrum { rows, .. } => {
                writeln!(w, "{SPECTRUM_HEADER}")?;
                for r in rows {
                    let err = r.abs_err.map(|e| format!("{e:?}")).unwrap_or_default();
                    writeln!(w, "{},{},{:?},{:?},{},{}", r.k, r.j, r.re, r.im, r.source.as_str(), err)?;
                }
            }
        }
        Ok(())
    }

    pub fn csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    pub fn limits(&self) -> Option<LimitSummary> {
        match &self.results {
            RunResults::TimeSeries { limits, .. } => Some(*limits),
            _ => None,
        }
    }

    /// Writes the record to `path`; time series also get a
    /// `<stem>.limits.json` sidecar. Returns every file written.
    pub fn write_to(&self, path: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut written = vec![path.to_path_buf()];
        match format {
            OutputFormat::Csv => {
                let mut f = std::io::BufWriter::new(fs::File::create(path)?);
                self.write_csv(&mut f)?;
                f.flush()?;
            }
            OutputFormat::Json => fs::write(path, serde_json::to_string_pretty(self)? + "\n")?,
        }
        if let Some(limits) = self.limits() {
            let sidecar = sidecar_path(path);
            fs::write(&sidecar, serde_json::to_string_pretty(&limits)? + "\n")?;
            written.push(sidecar);
        }
        Ok(written)
    }
}

/// `out/run.csv` → `out/run.limits.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.limits.json"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series_record() -> RunRecord {
        RunRecord {
            command: "time-average".into(),
            config: BTreeMap::new(),
            version: "0".into(),
            wall_time_s: 0.0,
            results: RunResults::TimeSeries {
                vertex: 3,
                rows: vec![
                    SeriesRow {
                        t: 1,
                        running_average: 0.1,
                    },
                    SeriesRow {
                        t: 2,
                        running_average: 1.0 / 3.0,
                    },
                ],
                limits: LimitSummary {
                    theorem1_limit: 0.2,
                    degenerate_limit: 0.25,
                    gap: 0.05,
                },
            },
        }
    }

    #[test]
    fn csv_uses_shortest_round_trip_floats() {
        let csv = series_record().csv_string();
        assert_eq!(csv, "t,running_average\n1,0.1\n2,0.3333333333333333\n");
        let last = csv.lines().last().unwrap().split(',').nth(1).unwrap();
        assert_eq!(last.parse::<f64>().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn spectrum_rows_leave_missing_error_blank() {
        let rec = RunRecord {
            command: "spectrum".into(),
            config: BTreeMap::new(),
            version: "0".into(),
            wall_time_s: 0.0,
            results: RunResults::Spectrum {
                rows: vec![SpectrumRow {
                    k: 0,
                    j: 1,
                    re: -1.0,
                    im: 0.0,
                    source: EigenSource::Numeric,
                    abs_err: None,
                }],
                flat_bands: vec![],
            },
        };
        assert_eq!(rec.csv_string(), "k,j,re,im,source,abs_err\n0,1,-1.0,0.0,numeric,\n");
    }

    #[test]
    fn sidecar_is_written_next_to_series() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested/run.csv");
        let files = series_record().write_to(&path, OutputFormat::Csv).unwrap();
        assert_eq!(files, vec![path.clone(), dir.path().join("nested/run.limits.json")]);
        let side: serde_json::Value = serde_json::from_str(&fs::read_to_string(&files[1]).unwrap()).unwrap();
        let keys: Vec<_> = side.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, vec!["degenerate_limit", "gap", "theorem1_limit"]);
    }
}
