//! Evolution and long-time limits in the eigenbasis of the momentum blocks.

use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::group::{DihedralParams, GroupElement, VertexIndex};
use crate::spectral::blocks::build_all_blocks;
use crate::spectral::eigen::{numeric_eigensystem, EigenSystem};
use crate::spectral::fourier::{dtft_forward, dtft_inverse, Block, FourierState, PhaseTable};
use crate::walk::coin::{CoinOperator, InitialCoinState};
use crate::walk::state::{slot, Distribution, WalkerState, INTERNAL_DIM};

/// Eigensystem of every `M_k` for one coin, reusable across initial states
/// and times.
#[derive(Debug, Clone)]
pub struct FourierPropagator {
    eigen: EigenSystem,
    phases: PhaseTable,
}

impl FourierPropagator {
    pub fn new(coin: &CoinOperator, p: DihedralParams) -> Result<Self> {
        let eigen = numeric_eigensystem(&build_all_blocks(coin, p), p)?;
        Ok(Self {
            eigen,
            phases: PhaseTable::new(p.n()),
        })
    }

    pub fn eigensystem(&self) -> &EigenSystem {
        &self.eigen
    }

    pub fn params(&self) -> DihedralParams {
        self.eigen.params()
    }

    fn check(&self, state: &WalkerState) -> Result<()> {
        if state.params() != self.params() {
            return Err(WalkError::DimensionMismatch {
                got: INTERNAL_DIM * state.params().n(),
                expected: INTERNAL_DIM * self.params().n(),
            });
        }
        Ok(())
    }

    /// `⟨ω_j(k) | Ψ̃(k, 0)⟩`, indexed `[k][j]`.
    pub fn expansion(&self, initial: &WalkerState) -> Result<Vec<[Complex64; INTERNAL_DIM]>> {
        self.check(initial)?;
        let fs = dtft_forward(initial);
        Ok(self
            .eigen
            .blocks()
            .iter()
            .map(|b| b.coefficients(fs.block(b.k)))
            .collect())
    }

    /// `Ψ̃(k,t) = Σ_j λ_j(k)^t ⟨ω_j|Ψ̃(k,0)⟩ ω_j`, then the inverse transform.
    pub fn evolve(&self, initial: &WalkerState, t: usize) -> Result<WalkerState> {
        let coeffs = self.expansion(initial)?;
        let power = u32::try_from(t).map_err(|_| WalkError::Config(format!("step count {t} too large")))?;
        let blocks: Vec<Block> = self
            .eigen
            .blocks()
            .iter()
            .zip(&coeffs)
            .map(|(b, c)| {
                let mut out = [Complex64::new(0.0, 0.0); INTERNAL_DIM];
                for (j, (cj, lambda)) in c.iter().zip(&b.values).enumerate() {
                    let amp = cj * lambda.powu(power);
                    for (i, o) in out.iter_mut().enumerate() {
                        *o += amp * b.vectors[(i, j)];
                    }
                }
                out
            })
            .collect();
        Ok(dtft_inverse(&FourierState::new(self.params(), blocks)))
    }

    /// Running averages `P̄_t(v)`, `t = 1 … T`, stepping the eigen
    /// coefficients instead of the full state.
    pub fn running_average_at(&self, initial: &WalkerState, horizon: usize, v: VertexIndex) -> Result<Vec<f64>> {
        if horizon == 0 {
            return Err(WalkError::EmptyHorizon);
        }
        let p = self.params();
        let g = p.decode_vertex(v)?;
        let n = p.n();
        let mut coeffs = self.expansion(initial)?;
        // weights[k][j][c] = e^{−ikx} ω_j(k)[(c, s)] / N
        let scale = 1.0 / n as f64;
        let weights: Vec<[[Complex64; 3]; INTERNAL_DIM]> = self
            .eigen
            .blocks()
            .iter()
            .map(|b| {
                let ph = self.phases.minus(b.k, g.t()) * scale;
                std::array::from_fn(|j| std::array::from_fn(|c| ph * b.vectors[(slot(c, g.s() as usize), j)]))
            })
            .collect();

        let mut out = Vec::with_capacity(horizon);
        let mut sum = 0.0;
        for t in 1..=horizon {
            let mut amp = [Complex64::new(0.0, 0.0); 3];
            for (ck, wk) in coeffs.iter().zip(&weights) {
                for j in 0..INTERNAL_DIM {
                    for c in 0..3 {
                        amp[c] += ck[j] * wk[j][c];
                    }
                }
            }
            sum += amp.iter().map(|a| a.norm_sqr()).sum::<f64>();
            out.push(sum / t as f64);
            for (ck, b) in coeffs.iter_mut().zip(self.eigen.blocks()) {
                for (cj, lambda) in ck.iter_mut().zip(&b.values) {
                    *cj *= lambda;
                }
            }
        }
        Ok(out)
    }

    /// `(1/N²) Σ_k Σ_j |⟨ω_j(k)|Ψ̃(k,0)⟩|²`, the diagonal-terms-only limit.
    ///
    /// It drops every cross term between equal eigenvalues at different
    /// `(k, j)`, so it does not depend on the vertex and equals `‖ψ‖²/N`.
    pub fn theorem1_limit(&self, initial: &WalkerState) -> Result<f64> {
        let n = self.params().n() as f64;
        let coeffs = self.expansion(initial)?;
        Ok(coeffs.iter().flatten().map(|c| c.norm_sqr()).sum::<f64>() / (n * n))
    }

    /// Long-time average of `P(X_t = v)`, keeping every pair of equal
    /// eigenvalues: `Σ_λ ‖(Π_λ ψ)(v)‖²`, with `Π_λ` the spectral projector of
    /// the full walk operator.
    pub fn limit_at(&self, initial: &WalkerState, v: VertexIndex) -> Result<f64> {
        let coeffs = self.expansion(initial)?;
        self.limit_from_coefficients(&coeffs, v)
    }

    pub fn limiting_distribution(&self, initial: &WalkerState) -> Result<Distribution> {
        let coeffs = self.expansion(initial)?;
        let probs = (0..self.params().order())
            .map(|v| self.limit_from_coefficients(&coeffs, VertexIndex(v)))
            .collect::<Result<_>>()?;
        Ok(Distribution::from_vec(probs))
    }

    fn limit_from_coefficients(&self, coeffs: &[[Complex64; INTERNAL_DIM]], v: VertexIndex) -> Result<f64> {
        let p = self.params();
        let g = p.decode_vertex(v)?;
        let s = g.s() as usize;
        let scale = 1.0 / p.n() as f64;
        let mut total = 0.0;
        for class in self.eigen.classes() {
            let mut amp = [Complex64::new(0.0, 0.0); 3];
            for &(k, j) in &class.members {
                let b = self.eigen.block(k);
                let w = coeffs[k][j] * self.phases.minus(k, g.t());
                for (c, a) in amp.iter_mut().enumerate() {
                    *a += w * b.vectors[(slot(c, s), j)];
                }
            }
            total += amp.iter().map(|a| (a * scale).norm_sqr()).sum::<f64>();
        }
        Ok(total)
    }
}

/// `U^t ψ` computed in the eigenbasis.
pub fn evolve_fourier(initial: &WalkerState, coin: &CoinOperator, t: usize) -> Result<WalkerState> {
    FourierPropagator::new(coin, initial.params())?.evolve(initial, t)
}

/// Return probability by the diagonal-only formula, for a walker started on
/// `start` with coin state `coin0`.
pub fn limiting_return_probability_theorem1(
    coin0: &InitialCoinState,
    start: GroupElement,
    coin: &CoinOperator,
    p: DihedralParams,
) -> Result<f64> {
    let initial = WalkerState::initial(coin0, start, p);
    FourierPropagator::new(coin, p)?.theorem1_limit(&initial)
}

/// Degeneracy-aware long-time average probability at vertex `x`.
pub fn limiting_distribution(
    coin0: &InitialCoinState,
    start: GroupElement,
    coin: &CoinOperator,
    p: DihedralParams,
    x: VertexIndex,
) -> Result<f64> {
    let initial = WalkerState::initial(coin0, start, p);
    FourierPropagator::new(coin, p)?.limit_at(&initial, x)
}
