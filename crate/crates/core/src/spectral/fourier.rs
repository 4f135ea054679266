//! Discrete Fourier transform over the position index.
//!
//! Forward: `Ψ̃(k) = Σ_x e^{+2πikx/N} Ψ(x)` (unnormalized).
//! Inverse: `Ψ(x) = (1/N) Σ_k e^{−2πikx/N} Ψ̃(k)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::group::DihedralParams;
use crate::walk::state::{WalkerState, INTERNAL_DIM};

pub type Block = [Complex64; INTERNAL_DIM];

/// Table of `e^{2πi m/N}` for `m ∈ [0, N)`. Indexing by `(k·x) mod N` keeps
/// the phase argument small and exact.
#[derive(Debug, Clone)]
pub struct PhaseTable {
    roots: Vec<Complex64>,
}

impl PhaseTable {
    pub fn new(n: usize) -> Self {
        let roots = (0..n)
            .map(|m| Complex64::from_polar(1.0, 2.0 * PI * m as f64 / n as f64))
            .collect();
        Self { roots }
    }

    /// `e^{+2πi·k·x/N}`.
    #[inline]
    pub fn plus(&self, k: usize, x: usize) -> Complex64 {
        let n = self.roots.len();
        self.roots[(k * x) % n]
    }

    /// `e^{−2πi·k·x/N}`.
    #[inline]
    pub fn minus(&self, k: usize, x: usize) -> Complex64 {
        self.plus(k, x).conj()
    }
}

/// Momentum-space state: one 6-vector per `k ∈ [0, N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierState {
    params: DihedralParams,
    blocks: Vec<Block>,
}

impl FourierState {
    pub fn new(params: DihedralParams, blocks: Vec<Block>) -> Self {
        assert_eq!(blocks.len(), params.n(), "need one block per momentum");
        Self { params, blocks }
    }

    pub fn params(&self) -> DihedralParams {
        self.params
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &Block {
        &self.blocks[k]
    }

    /// `Σ_k ‖Ψ̃(k)‖²`; equals `N·‖Ψ‖²`.
    pub fn norm_sqr(&self) -> f64 {
        self.blocks.iter().flatten().map(|z| z.norm_sqr()).sum()
    }
}

pub fn dtft_forward(state: &WalkerState) -> FourierState {
    let p = state.params();
    let n = p.n();
    let phases = PhaseTable::new(n);
    let amps = state.amplitudes();
    let blocks = (0..n)
        .map(|k| {
            std::array::from_fn(|j| {
                let row = &amps[j * n..(j + 1) * n];
                row.iter().enumerate().map(|(x, a)| phases.plus(k, x) * a).sum()
            })
        })
        .collect();
    FourierState::new(p, blocks)
}

pub fn dtft_inverse(fs: &FourierState) -> WalkerState {
    let p = fs.params();
    let n = p.n();
    let phases = PhaseTable::new(n);
    let scale = 1.0 / n as f64;
    let mut amps = vec![Complex64::new(0.0, 0.0); INTERNAL_DIM * n];
    for j in 0..INTERNAL_DIM {
        for x in 0..n {
            let sum: Complex64 = fs
                .blocks
                .iter()
                .enumerate()
                .map(|(k, b)| phases.minus(k, x) * b[j])
                .sum();
            amps[j * n + x] = sum * scale;
        }
    }
    WalkerState::from_raw(p, amps).expect("length is 6N by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;
    use crate::walk::coin::InitialCoinState;
    use crate::walk::state::slot;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn block_diff(a: &Block, b: &Block) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn delta_at_origin_is_flat_in_momentum() {
        let p = DihedralParams::new(7).unwrap();
        let w: Block = [
            c(0.1, 0.2),
            c(-0.3, 0.0),
            c(0.0, 0.5),
            c(0.4, -0.1),
            c(0.2, 0.2),
            c(-0.6, 0.1),
        ];
        let mut amps = vec![c(0.0, 0.0); 42];
        for j in 0..6 {
            amps[j * 7] = w[j];
        }
        let fs = dtft_forward(&WalkerState::from_raw(p, amps).unwrap());
        for k in 0..7 {
            assert!(block_diff(fs.block(k), &w) < 1e-15);
        }
        let back = dtft_inverse(&FourierState::new(p, vec![w; 7]));
        for (j, wj) in w.iter().enumerate() {
            assert_abs_diff_eq!((back.amplitudes()[j * 7] - wj).norm(), 0.0, epsilon = 1e-15);
            for x in 1..7 {
                assert_abs_diff_eq!(back.amplitudes()[j * 7 + x].norm(), 0.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn initial_state_transform_puts_coin_on_sheet_zero_slots() {
        let p = DihedralParams::new(6).unwrap();
        let coin = InitialCoinState::new(c(0.6, 0.0), c(0.0, 0.48), c(0.64, 0.0)).unwrap();
        let s = WalkerState::initial(&coin, GroupElement::new(0, 0, &p).unwrap(), p);
        let fs = dtft_forward(&s);
        let [a, b, g] = coin.amplitudes();
        let want = [a, c(0.0, 0.0), b, c(0.0, 0.0), g, c(0.0, 0.0)];
        for k in 0..6 {
            assert!(block_diff(fs.block(k), &want) < 1e-15);
        }
        assert_eq!(slot(1, 0), 2);
    }

    #[test]
    fn single_zero_momentum_block_is_uniform() {
        let p = DihedralParams::new(5).unwrap();
        let w: Block = std::array::from_fn(|j| c(j as f64, 1.0));
        let mut blocks = vec![[c(0.0, 0.0); 6]; 5];
        blocks[0] = w;
        let s = dtft_inverse(&FourierState::new(p, blocks));
        for x in 0..5 {
            assert!(block_diff(&s.internal_vector(x), &w.map(|z| z / 5.0)) < 1e-15);
        }
    }

    #[test]
    fn parseval_and_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for i in 0..200 {
            let n = 3 + i % 20;
            let p = DihedralParams::new(n).unwrap();
            let s = WalkerState::random(p, &mut rng);
            let fs = dtft_forward(&s);
            assert_abs_diff_eq!(fs.norm_sqr(), n as f64 * s.norm_sqr(), epsilon = 1e-10);
            assert!(dtft_inverse(&fs).max_abs_diff(&s) < 1e-12);
        }
    }
}
