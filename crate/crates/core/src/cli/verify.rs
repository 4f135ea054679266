//! Self-check suite behind `dqw verify`.
//!
//! The step function is injectable so a deliberately broken walk can be run
//! through the same checks.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cli::commands::matching::best_matching;
use crate::cli::presets::coin_state;
use crate::group::{DihedralParams, GroupElement, VertexIndex};
use crate::oracle::build_dense_unitary;
use crate::spectral::{analytic_eigenvalues, FourierPropagator};
use crate::walk::{position_distribution, CoinOperator, InitialCoinState, WalkerState};

pub type StepFn<'a> = &'a dyn Fn(&WalkerState, &CoinOperator) -> WalkerState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

impl Scale {
    pub fn sizes(self) -> &'static [usize] {
        match self {
            Scale::Quick => &[3, 5, 8],
            Scale::Full => &[3, 5, 8, 20, 50],
        }
    }

    /// Horizon and tolerance of the limit-convergence check.
    fn convergence(self) -> (usize, f64) {
        match self {
            Scale::Quick => (2_000, 1e-2),
            Scale::Full => (10_000, 5e-3),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Both long-time limits at one start vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitGap {
    pub n: usize,
    pub coin_state: &'static str,
    pub vertex: usize,
    pub theorem1: f64,
    pub degenerate: f64,
    pub time_average: f64,
    pub horizon: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub gaps: Vec<LimitGap>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {:<22} {}", c.name, c.detail);
        }
        if !self.gaps.is_empty() {
            let _ = writeln!(out, "\nlong-time return probability at the start vertex (Grover):");
            let _ = writeln!(
                out,
                "{:>4} {:>8} {:>6} {:>12} {:>12} {:>12} {:>12}",
                "N", "coin", "vertex", "theorem1", "degenerate", "gap", "avg(T)"
            );
            for g in &self.gaps {
                let _ = writeln!(
                    out,
                    "{:>4} {:>8} {:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
                    g.n,
                    g.coin_state,
                    g.vertex,
                    g.theorem1,
                    g.degenerate,
                    g.degenerate - g.theorem1,
                    g.time_average
                );
            }
        }
        match self.first_failure() {
            None => out.push_str("\nall checks passed\n"),
            Some(c) => {
                let _ = writeln!(out, "\nfirst failing check: {}", c.name);
            }
        }
        out
    }
}

pub fn cmd_verify(scale: Scale) -> VerifyReport {
    verify_with_step(scale, &crate::walk::step)
}

const SEED: u64 = 0x5eed_d1ed;

fn coins(rng: &mut ChaCha8Rng) -> Vec<CoinOperator> {
    vec![
        CoinOperator::grover(),
        CoinOperator::dft(),
        CoinOperator::haar_random(rng),
        CoinOperator::haar_random(rng),
    ]
}

fn outcome(name: &'static str, worst: f64, tol: f64, what: &str) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: worst <= tol,
        detail: format!("max {what} {worst:.3e} (tol {tol:e})"),
    }
}

fn check_unitarity(step: StepFn, sizes: &[usize], rng: &mut ChaCha8Rng) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        for coin in coins(rng) {
            for _ in 0..10 {
                let psi = WalkerState::random(p, rng);
                worst = worst.max((step(&psi, &coin).norm_sqr() - 1.0).abs());
            }
        }
    }
    outcome("unitarity", worst, 1e-12, "| ||U psi||^2 - 1 |")
}

fn iterate(step: StepFn, psi: &WalkerState, coin: &CoinOperator, t: usize) -> WalkerState {
    (0..t).fold(psi.clone(), |s, _| step(&s, coin))
}

const CHECKPOINTS: [usize; 5] = [1, 2, 5, 13, 30];

fn check_oracle(step: StepFn, sizes: &[usize], rng: &mut ChaCha8Rng) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        for coin in coins(rng) {
            let dense = build_dense_unitary(&coin, p).expect("sizes are below the oracle guard");
            for _ in 0..3 {
                let psi = WalkerState::random(p, rng);
                for t in CHECKPOINTS {
                    let a = iterate(step, &psi, &coin, t);
                    let b = dense.evolve(&psi, t).expect("matching params");
                    worst = worst.max(a.max_abs_diff(&b));
                }
            }
        }
    }
    outcome("oracle-equivalence", worst, 1e-10, "amplitude difference")
}

fn check_fourier(step: StepFn, sizes: &[usize], rng: &mut ChaCha8Rng) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        for coin in coins(rng) {
            let prop = match FourierPropagator::new(&coin, p) {
                Ok(prop) => prop,
                Err(e) => {
                    return CheckOutcome {
                        name: "fourier-equivalence",
                        passed: false,
                        detail: e.to_string(),
                    };
                }
            };
            let psi = WalkerState::random(p, rng);
            for t in CHECKPOINTS {
                let a = iterate(step, &psi, &coin, t);
                let b = prop.evolve(&psi, t).expect("matching params");
                worst = worst.max(a.max_abs_diff(&b));
            }
        }
    }
    outcome("fourier-equivalence", worst, 1e-10, "amplitude difference")
}

fn check_spectrum(sizes: &[usize]) -> CheckOutcome {
    let grover = CoinOperator::grover();
    let mut worst: f64 = 0.0;
    let mut flat_ok = true;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        let prop = match FourierPropagator::new(&grover, p) {
            Ok(prop) => prop,
            Err(e) => {
                return CheckOutcome {
                    name: "grover-spectrum",
                    passed: false,
                    detail: e.to_string(),
                }
            }
        };
        flat_ok &= prop.eigensystem().flat_bands().len() == 4;
        for block in prop.eigensystem().blocks() {
            let analytic = analytic_eigenvalues(&grover, block.k, p).expect("grover").values;
            let perm = best_matching(&block.values, &analytic);
            for j in 0..6 {
                worst = worst.max((block.values[j] - analytic[perm[j]]).norm());
            }
        }
    }
    let mut c = outcome("grover-spectrum", worst, 1e-8, "|numeric - closed form|");
    if !flat_ok {
        c.passed = false;
        c.detail.push_str("; expected four flat bands");
    }
    c
}

/// Dense spectrum against the union of block spectra, nearest-unused
/// matching.
fn check_dense_spectrum(sizes: &[usize], rng: &mut ChaCha8Rng) -> CheckOutcome {
    let mut worst: f64 = 0.0;
    for &n in sizes.iter().filter(|&&n| n <= 8) {
        let p = DihedralParams::new(n).expect("n >= 3");
        for coin in coins(rng) {
            let dense = build_dense_unitary(&coin, p).expect("small n").eigenvalues();
            let prop = FourierPropagator::new(&coin, p);
            let (Ok(dense), Ok(prop)) = (dense, prop) else {
                return CheckOutcome {
                    name: "dense-spectrum",
                    passed: false,
                    detail: "eigensolver failed".into(),
                };
            };
            let mut pool: Vec<Complex64> = prop.eigensystem().blocks().iter().flat_map(|b| b.values).collect();
            for z in dense {
                let (i, d) = pool
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (i, (z - w).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .expect("pool has 6N entries");
                worst = worst.max(d);
                pool.swap_remove(i);
            }
        }
    }
    outcome("dense-spectrum", worst, 1e-8, "eigenvalue distance")
}

fn check_symmetry(step: StepFn, sizes: &[usize], horizon: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    use rand::Rng;
    let grover = CoinOperator::grover();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut worst: f64 = 0.0;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        let mut coin_states = vec![InitialCoinState::uniform()];
        for _ in 0..2 {
            let v: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
            let r = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            coin_states.push(InitialCoinState::from_real(v[0] / r, v[1] / r, v[2] / r).expect("unit vector"));
        }
        for cs in &coin_states {
            let terms = [
                (p.identity(), Complex64::new(h, 0.0)),
                (GroupElement::new(1, 0, &p).expect("valid"), Complex64::new(h, 0.0)),
            ];
            let mut psi = WalkerState::from_position_superposition(cs, &terms, p).expect("normalized");
            for _ in 0..=horizon {
                let dist = position_distribution(&psi);
                for x in 0..n {
                    let mirror = (n - x) % n;
                    worst = worst.max((dist.get(VertexIndex(x)) - dist.get(VertexIndex(n + mirror))).abs());
                }
                psi = step(&psi, &grover);
            }
        }
    }
    outcome("reflection-symmetry", worst, 1e-10, "|P(s,x) - P(1-s,-x)|")
}

fn check_convergence(sizes: &[usize], scale: Scale, gaps: &mut Vec<LimitGap>) -> CheckOutcome {
    let (horizon, tol) = scale.convergence();
    let grover = CoinOperator::grover();
    let mut worst: f64 = 0.0;
    for &n in sizes {
        let p = DihedralParams::new(n).expect("n >= 3");
        let dense = build_dense_unitary(&grover, p).expect("below guard");
        let Ok(prop) = FourierPropagator::new(&grover, p) else {
            return CheckOutcome {
                name: "limit-convergence",
                passed: false,
                detail: "eigensolver failed".into(),
            };
        };
        let start = GroupElement::new(1, 0, &p).expect("valid");
        let v = p.encode_vertex(start);
        for name in ["c0", "uniform"] {
            let [a, b, c] = coin_state(name);
            let cs = InitialCoinState::new(a, b, c).expect("normalized preset");
            let psi = WalkerState::initial(&cs, start, p);
            let avg = dense.time_average(&psi, horizon, v).expect("valid");
            let degenerate = prop.limit_at(&psi, v).expect("valid");
            let theorem1 = prop.theorem1_limit(&psi).expect("valid");
            worst = worst.max((avg - degenerate).abs());
            gaps.push(LimitGap {
                n,
                coin_state: name,
                vertex: v.get(),
                theorem1,
                degenerate,
                time_average: avg,
                horizon,
            });
        }
    }
    outcome("limit-convergence", worst, tol, &format!("|avg(T={horizon}) - limit|"))
}

/// Runs every check with `step` standing in for the walk step.
pub fn verify_with_step(scale: Scale, step: StepFn) -> VerifyReport {
    let sizes = scale.sizes();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut report = VerifyReport::default();
    let symmetry_horizon = match scale {
        Scale::Quick => 100,
        Scale::Full => 200,
    };
    report.checks.push(check_unitarity(step, sizes, &mut rng));
    report.checks.push(check_oracle(step, sizes, &mut rng));
    report.checks.push(check_fourier(step, sizes, &mut rng));
    report.checks.push(check_spectrum(sizes));
    report.checks.push(check_dense_spectrum(sizes, &mut rng));
    report
        .checks
        .push(check_symmetry(step, sizes, symmetry_horizon, &mut rng));
    let conv = check_convergence(sizes, scale, &mut report.gaps);
    report.checks.push(conv);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let report = cmd_verify(Scale::Quick);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.gaps.len(), 6);
        assert!(report.render().contains("all checks passed"));
    }

    #[test]
    fn reversed_rotation_is_caught() {
        // Coin-0 amplitude on sheet 0 moves to x-1 instead of x+1.
        let tampered = |psi: &WalkerState, coin: &CoinOperator| {
            let good = crate::walk::step(psi, coin);
            let p = psi.params();
            let n = p.n();
            let mut amps = good.into_amplitudes();
            let row: Vec<Complex64> = amps[..n].to_vec();
            for x in 0..n {
                amps[(x + n - 2) % n] = row[x];
            }
            WalkerState::from_raw(p, amps).unwrap()
        };
        let report = verify_with_step(Scale::Quick, &tampered);
        assert!(!report.passed());
        let first = report.first_failure().unwrap().name;
        assert!(first == "unitarity" || first == "oracle-equivalence", "{first}");
        assert!(report.render().contains("first failing check"));
    }
}
