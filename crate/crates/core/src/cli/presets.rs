//! Named batches of runs that reproduce the standard figures.
//!
//! Runs inside a preset are computed in parallel; files are written by the
//! calling thread afterwards, in preset order.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::cli::commands::{cmd_distribution, cmd_time_average};
use crate::cli::config::{CoinChoice, RunConfig};
use crate::cli::record::RunRecord;
use crate::error::{Result, WalkError};

pub const PRESETS: [&str; 14] = [
    "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b", "fig4c", "fig4d", "fig5a", "fig5b", "fig5c", "fig5d",
    "fig6a", "fig6b",
];

/// Steps for the snapshot presets.
pub const SNAPSHOT_STEPS: usize = 200;
/// Horizon for the return-probability presets.
pub const AVERAGE_HORIZON: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunKind {
    Distribution,
    TimeAverage,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PresetRun {
    /// File stem of the output.
    pub label: String,
    pub kind: RunKind,
    pub config: RunConfig,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Named initial coin states used across the presets.
pub fn coin_state(name: &str) -> [Complex64; 3] {
    let r3 = 3f64.sqrt().recip();
    let r6 = 6f64.sqrt().recip();
    match name {
        "c0" => [c(1.0), c(0.0), c(0.0)],
        "c1" => [c(0.0), c(1.0), c(0.0)],
        "c2" => [c(0.0), c(0.0), c(1.0)],
        "uniform" => [c(r3), c(r3), c(r3)],
        "mixed" => [c(r6), c(-2.0 * r6), c(r6)],
        _ => panic!("unknown coin state {name}"),
    }
}

const FIG34_COINS: [&str; 4] = ["c0", "c1", "c2", "uniform"];
const FIG5_SIZES: [usize; 4] = [5, 8, 20, 30];
const FIG6B_SIZES: [usize; 4] = [5, 10, 35, 100];

fn sheet_one_start(n: usize) -> RunConfig {
    RunConfig {
        n,
        initial_position: vec![(1, 0, c(1.0))],
        ..RunConfig::default()
    }
}

fn unknown(name: &str) -> WalkError {
    WalkError::Config(format!(
        "unknown preset {name:?}; expected one of {}",
        PRESETS.join(", ")
    ))
}

fn letter_index(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    match rest {
        "a" => Some(0),
        "b" => Some(1),
        "c" => Some(2),
        "d" => Some(3),
        _ => None,
    }
}

pub fn preset_runs(name: &str) -> Result<Vec<PresetRun>> {
    if let Some(i) = letter_index(name, "fig3").or_else(|| letter_index(name, "fig4")) {
        let coin = if name.starts_with("fig3") {
            CoinChoice::Grover
        } else {
            CoinChoice::Dft
        };
        let config = RunConfig {
            coin,
            initial_coin: coin_state(FIG34_COINS[i]),
            steps: SNAPSHOT_STEPS,
            ..sheet_one_start(50)
        };
        return Ok(vec![PresetRun {
            label: name.into(),
            kind: RunKind::Distribution,
            config,
        }]);
    }
    if let Some(i) = letter_index(name, "fig5") {
        let n = FIG5_SIZES[i];
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let base = RunConfig {
            initial_coin: coin_state("uniform"),
            steps: SNAPSHOT_STEPS,
            ..sheet_one_start(n)
        };
        let superposed = RunConfig {
            initial_position: vec![(0, 0, c(h)), (1, 0, c(h))],
            ..base.clone()
        };
        return Ok(vec![
            PresetRun {
                label: format!("{name}_superposed"),
                kind: RunKind::Distribution,
                config: superposed,
            },
            PresetRun {
                label: format!("{name}_single"),
                kind: RunKind::Distribution,
                config: base,
            },
        ]);
    }
    match name {
        "fig6a" => Ok(["c0", "c1", "c2", "uniform", "mixed"]
            .iter()
            .map(|&coin| PresetRun {
                label: format!("fig6a_{coin}"),
                kind: RunKind::TimeAverage,
                config: RunConfig {
                    initial_coin: coin_state(coin),
                    horizon: AVERAGE_HORIZON,
                    ..sheet_one_start(50)
                },
            })
            .collect()),
        "fig6b" => Ok(FIG6B_SIZES
            .iter()
            .map(|&n| PresetRun {
                label: format!("fig6b_n{n}"),
                kind: RunKind::TimeAverage,
                config: RunConfig {
                    horizon: AVERAGE_HORIZON,
                    ..sheet_one_start(n)
                },
            })
            .collect()),
        _ => Err(unknown(name)),
    }
}

/// Computes every run of a preset, in preset order.
pub fn compute_preset(name: &str) -> Result<Vec<(PresetRun, RunRecord)>> {
    let runs = preset_runs(name)?;
    let records: Vec<Result<RunRecord>> = runs
        .par_iter()
        .map(|run| match run.kind {
            RunKind::Distribution => cmd_distribution(&run.config),
            RunKind::TimeAverage => cmd_time_average(&run.config),
        })
        .collect();
    runs.into_iter()
        .zip(records)
        .map(|(run, rec)| rec.map(|r| (run, r)))
        .collect()
}

/// Computes a preset and writes `<out_dir>/<label>.csv` for every run.
pub fn run_preset(name: &str, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for (run, record) in compute_preset(name)? {
        let path = out_dir.join(format!("{}.csv", run.label));
        written.extend(record.write_to(&path, run.config.format)?);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_resolves() {
        for name in PRESETS {
            let runs = preset_runs(name).unwrap();
            assert!(!runs.is_empty());
            for r in &runs {
                r.config.validate().unwrap();
            }
        }
        assert!(preset_runs("fig7").is_err());
        assert!(preset_runs("fig3e").is_err());
    }

    #[test]
    fn fig3_and_fig4_layout() {
        let r = &preset_runs("fig4c").unwrap()[0];
        assert_eq!(r.config.coin, CoinChoice::Dft);
        assert_eq!(r.config.n, 50);
        assert_eq!(r.config.steps, 200);
        assert_eq!(r.config.initial_coin, coin_state("c2"));
        assert_eq!(r.config.initial_position, vec![(1, 0, c(1.0))]);
    }

    #[test]
    fn named_coin_states_are_normalized() {
        for name in ["c0", "c1", "c2", "uniform", "mixed"] {
            let total: f64 = coin_state(name).iter().map(|z| z.norm_sqr()).sum();
            assert!((total - 1.0).abs() < 1e-15);
        }
    }
}
