//! Real-space evolution `U = S (C ⊗ I_P)`.
//!
//! The coin is applied to the coin register at every vertex, then the shift
//! moves coin-0 amplitudes one rotation hop (`x → x+1` on sheet 0,
//! `x → x−1` on sheet 1), leaves coin-1 amplitudes in place and swaps the
//! sheet of coin-2 amplitudes.

use crate::error::{Result, WalkError};
use crate::group::VertexIndex;
use crate::walk::coin::CoinOperator;
use crate::walk::state::{slot, Distribution, WalkerState};

/// Drift of `‖ψ‖²` away from 1 that is treated as a numerical fault after
/// long evolutions.
pub const NORM_DRIFT_ALARM: f64 = 1e-10;

/// One step of the walk, written into `out`.
pub fn step_into(state: &WalkerState, coin: &CoinOperator, out: &mut WalkerState) {
    let p = state.params();
    let n = p.n();
    assert_eq!(out.params(), p, "output buffer has a different N");
    let src = state.amplitudes();
    let dst = out.amplitudes_mut();
    for s in 0..2 {
        let fwd = if s == 0 { 1 } else { n - 1 };
        for x in 0..n {
            let v = [
                src[slot(0, s) * n + x],
                src[slot(1, s) * n + x],
                src[slot(2, s) * n + x],
            ];
            let [rot, stay, refl] = coin.apply(v);
            dst[slot(0, s) * n + (x + fwd) % n] = rot;
            dst[slot(1, s) * n + x] = stay;
            dst[slot(2, 1 - s) * n + x] = refl;
        }
    }
}

/// One application of `U`.
pub fn step(state: &WalkerState, coin: &CoinOperator) -> WalkerState {
    let mut out = WalkerState::zeros(state.params());
    step_into(state, coin, &mut out);
    out
}

/// `U^t |ψ⟩`.
pub fn evolve(state: &WalkerState, coin: &CoinOperator, t: usize) -> WalkerState {
    let mut cur = state.clone();
    let mut next = WalkerState::zeros(state.params());
    for _ in 0..t {
        step_into(&cur, coin, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

/// Iterator over `ψ(0), ψ(1), ψ(2), …`.
pub struct Trajectory<'a> {
    coin: &'a CoinOperator,
    current: WalkerState,
    scratch: WalkerState,
    started: bool,
}

impl<'a> Trajectory<'a> {
    pub fn new(initial: &WalkerState, coin: &'a CoinOperator) -> Self {
        Self {
            coin,
            current: initial.clone(),
            scratch: WalkerState::zeros(initial.params()),
            started: false,
        }
    }

    /// Advances and returns a borrow of the new state; avoids the clone that
    /// [`Iterator::next`] needs.
    pub fn advance(&mut self) -> &WalkerState {
        if self.started {
            step_into(&self.current, self.coin, &mut self.scratch);
            std::mem::swap(&mut self.current, &mut self.scratch);
        }
        self.started = true;
        &self.current
    }
}

impl Iterator for Trajectory<'_> {
    type Item = WalkerState;

    fn next(&mut self) -> Option<WalkerState> {
        Some(self.advance().clone())
    }
}

/// `P(X = (s, x)) = Σ_c |ψ(c, s, x)|²`, keyed by vertex index.
pub fn position_distribution(state: &WalkerState) -> Distribution {
    let n = state.params().n();
    let amps = state.amplitudes();
    let probs = (0..2 * n)
        .map(|v| {
            let (s, x) = (v / n, v % n);
            (0..3).map(|c| amps[slot(c, s) * n + x].norm_sqr()).sum()
        })
        .collect();
    Distribution::from_vec(probs)
}

/// `(1/T) Σ_{t<T} P(X_t = ·)`, accumulated along a single trajectory.
pub fn time_averaged_distribution(initial: &WalkerState, coin: &CoinOperator, horizon: usize) -> Result<Distribution> {
    if horizon == 0 {
        return Err(WalkError::EmptyHorizon);
    }
    let n = initial.params().n();
    let mut acc = vec![0.0; 2 * n];
    let mut traj = Trajectory::new(initial, coin);
    for _ in 0..horizon {
        let state = traj.advance();
        for (a, p) in acc.iter_mut().zip(position_distribution(state).probs()) {
            *a += p;
        }
    }
    let last = traj.advance();
    last.check_normalized(NORM_DRIFT_ALARM)?;
    let scale = 1.0 / horizon as f64;
    Ok(Distribution::from_vec(acc.into_iter().map(|a| a * scale).collect()))
}

/// Running averages `P̄_t(v)` for `t = 1 … T` at one vertex.
pub fn running_average_at(
    initial: &WalkerState,
    coin: &CoinOperator,
    horizon: usize,
    v: VertexIndex,
) -> Result<Vec<f64>> {
    if horizon == 0 {
        return Err(WalkError::EmptyHorizon);
    }
    let mut traj = Trajectory::new(initial, coin);
    let mut sum = 0.0;
    let mut out = Vec::with_capacity(horizon);
    for t in 1..=horizon {
        sum += traj.advance().vertex_probability(v)?;
        out.push(sum / t as f64);
    }
    Ok(out)
}
