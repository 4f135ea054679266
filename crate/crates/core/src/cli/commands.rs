use std::time::Instant;

use matching::best_matching;
use num_complex::Complex64;

use crate::cli::config::{Backend, RunConfig};
use crate::cli::record::{EigenSource, LimitSummary, RunRecord, RunResults, SeriesRow, SpectrumRow, VertexRow};
use crate::error::Result;
use crate::oracle::build_dense_unitary;
use crate::spectral::{analytic_eigenvalues, FourierPropagator};
use crate::walk::{self, position_distribution};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn record(command: &str, cfg: &RunConfig, started: Instant, results: RunResults) -> RunRecord {
    RunRecord {
        command: command.to_string(),
        config: cfg.to_map(),
        version: VERSION.to_string(),
        wall_time_s: started.elapsed().as_secs_f64(),
        results,
    }
}

/// `P(X_t = v)` for every vertex after `cfg.steps` steps.
pub fn cmd_distribution(cfg: &RunConfig) -> Result<RunRecord> {
    let started = Instant::now();
    cfg.validate()?;
    let p = cfg.params()?;
    let coin = cfg.coin_operator()?;
    let initial = cfg.initial_state()?;
    let state = match cfg.backend {
        Backend::Direct => walk::evolve(&initial, &coin, cfg.steps),
        Backend::Fourier => FourierPropagator::new(&coin, p)?.evolve(&initial, cfg.steps)?,
        Backend::Oracle => build_dense_unitary(&coin, p)?.evolve(&initial, cfg.steps)?,
    };
    let dist = position_distribution(&state);
    let rows = p
        .elements()
        .map(|g| {
            let v = p.encode_vertex(g);
            VertexRow {
                vertex_index: v.get(),
                s: g.s(),
                x: g.t(),
                probability: dist.get(v),
            }
        })
        .collect();
    Ok(record("distribution", cfg, started, RunResults::Distribution { rows }))
}

/// Running averages at the designated vertex for `t = 1 … cfg.horizon`,
/// plus both long-time limits.
pub fn cmd_time_average(cfg: &RunConfig) -> Result<RunRecord> {
    let started = Instant::now();
    cfg.validate()?;
    let p = cfg.params()?;
    let coin = cfg.coin_operator()?;
    let initial = cfg.initial_state()?;
    let vertex = cfg.designated_vertex()?;
    let propagator = FourierPropagator::new(&coin, p)?;

    let series = match cfg.backend {
        Backend::Direct => walk::running_average_at(&initial, &coin, cfg.horizon, vertex)?,
        Backend::Fourier => propagator.running_average_at(&initial, cfg.horizon, vertex)?,
        Backend::Oracle => build_dense_unitary(&coin, p)?.running_average(&initial, cfg.horizon, vertex)?,
    };
    let theorem1_limit = propagator.theorem1_limit(&initial)?;
    let degenerate_limit = propagator.limit_at(&initial, vertex)?;
    let rows = series
        .into_iter()
        .enumerate()
        .map(|(i, running_average)| SeriesRow {
            t: i + 1,
            running_average,
        })
        .collect();
    let results = RunResults::TimeSeries {
        vertex: vertex.get(),
        rows,
        limits: LimitSummary {
            theorem1_limit,
            degenerate_limit,
            gap: degenerate_limit - theorem1_limit,
        },
    };
    Ok(record("time-average", cfg, started, results))
}

/// Numeric spectrum of every `M_k`; for the Grover coin also the closed
/// forms and their distance to the numeric values.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<RunRecord> {
    let started = Instant::now();
    let p = cfg.params()?;
    let coin = cfg.coin_operator()?;
    let propagator = FourierPropagator::new(&coin, p)?;
    let eigen = propagator.eigensystem();
    let grover = coin.is_grover();

    let mut rows = Vec::with_capacity(12 * p.n());
    for block in eigen.blocks() {
        let numeric = block.values;
        if !grover {
            rows.extend(numeric.iter().enumerate().map(|(j, z)| SpectrumRow {
                k: block.k,
                j: j + 1,
                re: z.re,
                im: z.im,
                source: EigenSource::Numeric,
                abs_err: None,
            }));
            continue;
        }
        let analytic = analytic_eigenvalues(&coin, block.k, p)?.values;
        // perm[j] = analytic index matched to numeric j
        let perm = best_matching(&numeric, &analytic);
        let err = |j: usize| (numeric[j] - analytic[perm[j]]).norm();
        for (j, z) in numeric.iter().enumerate() {
            rows.push(SpectrumRow {
                k: block.k,
                j: j + 1,
                re: z.re,
                im: z.im,
                source: EigenSource::Numeric,
                abs_err: Some(err(j)),
            });
        }
        for (a, z) in analytic.iter().enumerate() {
            let j = perm.iter().position(|&x| x == a).expect("perm is a bijection");
            rows.push(SpectrumRow {
                k: block.k,
                j: a + 1,
                re: z.re,
                im: z.im,
                source: EigenSource::Analytic,
                abs_err: Some(err(j)),
            });
        }
    }
    let flat_bands = eigen
        .flat_bands()
        .into_iter()
        .map(|z: Complex64| [z.re, z.im])
        .collect();
    Ok(record(
        "spectrum",
        cfg,
        started,
        RunResults::Spectrum { rows, flat_bands },
    ))
}

pub(crate) mod matching {
    use itertools::Itertools;
    use num_complex::Complex64;

    /// Assignment of six numeric eigenvalues to six closed-form ones that
    /// minimises the largest distance, by exhaustive search over the 720
    /// permutations.
    pub fn best_matching(numeric: &[Complex64; 6], analytic: &[Complex64; 6]) -> [usize; 6] {
        let cost = |perm: &[usize]| {
            (0..6)
                .map(|j| (numeric[j] - analytic[perm[j]]).norm())
                .fold(0.0, f64::max)
        };
        let best = (0..6)
            .permutations(6)
            .min_by(|a, b| cost(a).total_cmp(&cost(b)))
            .expect("720 permutations");
        best.try_into().expect("length 6")
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn recovers_a_shuffle() {
            let a: [Complex64; 6] = std::array::from_fn(|i| Complex64::new(i as f64, 0.0));
            let n = [a[3], a[0], a[5], a[1], a[4], a[2]];
            assert_eq!(best_matching(&n, &a), [3, 0, 5, 1, 4, 2]);
        }
    }
}
