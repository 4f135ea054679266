use std::f64::consts::PI;

use nalgebra::Matrix6;
use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::group::DihedralParams;
use crate::walk::coin::CoinOperator;
use crate::walk::state::slot;

/// The 6×6 evolution matrix `M_k` for one momentum index.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierBlock {
    pub k: usize,
    /// `K = e^{2πik/N}`.
    pub phase: Complex64,
    pub matrix: Matrix6<Complex64>,
}

impl FourierBlock {
    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.matrix.adjoint() * self.matrix;
        (prod - Matrix6::identity())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// `M_k = S̃_k (C ⊗ I₂)`, with `S̃_k` the momentum-space shift: phase `K` on
/// slot (0,0), `K⁻¹` on slot (0,1), identity on the coin-1 slots and a sheet
/// swap on the coin-2 slots.
pub fn build_mk(coin: &CoinOperator, k: usize, p: DihedralParams) -> Result<FourierBlock> {
    let n = p.n();
    if k >= n {
        return Err(WalkError::MomentumOutOfRange { k, n });
    }
    let phase = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);

    let mut coin_part = Matrix6::zeros();
    for r in 0..3 {
        for c in 0..3 {
            for s in 0..2 {
                coin_part[(slot(r, s), slot(c, s))] = coin.entry(r, c);
            }
        }
    }

    let one = Complex64::new(1.0, 0.0);
    let mut shift = Matrix6::zeros();
    shift[(slot(0, 0), slot(0, 0))] = phase;
    shift[(slot(0, 1), slot(0, 1))] = phase.conj();
    shift[(slot(1, 0), slot(1, 0))] = one;
    shift[(slot(1, 1), slot(1, 1))] = one;
    shift[(slot(2, 0), slot(2, 1))] = one;
    shift[(slot(2, 1), slot(2, 0))] = one;

    Ok(FourierBlock {
        k,
        phase,
        matrix: shift * coin_part,
    })
}

/// All `N` blocks, indexed by `k`.
pub fn build_all_blocks(coin: &CoinOperator, p: DihedralParams) -> Vec<FourierBlock> {
    (0..p.n()).map(|k| build_mk(coin, k, p).expect("k < N")).collect()
}
