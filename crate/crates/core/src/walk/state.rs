use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Result, WalkError};
use crate::group::{DihedralParams, GroupElement, VertexIndex};
use crate::walk::coin::InitialCoinState;

/// Tolerance on `Σ|ψ|² = 1` for states built from user input.
pub const STATE_NORM_TOL: f64 = 1e-10;

/// Number of internal components per position: 3 coin states × 2 sheets.
pub const INTERNAL_DIM: usize = 6;

/// Index of coin `c` on sheet `s` inside the per-position 6-vector.
///
/// The order is `(0,0), (0,1), (1,0), (1,1), (2,0), (2,1)`.
#[inline]
pub const fn slot(c: usize, s: usize) -> usize {
    2 * c + s
}

/// Pure state of the walker.
///
/// Amplitudes are stored contiguously in `(c, s, x)` order with `x` fastest,
/// i.e. at `slot(c, s) * N + x`.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerState {
    params: DihedralParams,
    amplitudes: Vec<Complex64>,
}

impl WalkerState {
    /// A walker on `start` with coin amplitudes `(α, β, γ)`.
    pub fn initial(coin: &InitialCoinState, start: GroupElement, p: DihedralParams) -> Self {
        let mut state = Self::zeros(p);
        for (c, amp) in coin.amplitudes().into_iter().enumerate() {
            *state.amplitude_mut(c, start.s() as usize, start.t()) = amp;
        }
        state
    }

    /// `Σ_g a_g |g⟩ ⊗ coin`; the combined state must be normalized.
    pub fn from_position_superposition(
        coin: &InitialCoinState,
        positions: &[(GroupElement, Complex64)],
        p: DihedralParams,
    ) -> Result<Self> {
        let mut state = Self::zeros(p);
        for &(g, a) in positions {
            if g.t() >= p.n() {
                return Err(WalkError::InvalidElement {
                    s: g.s(),
                    t: g.t(),
                    n: p.n(),
                });
            }
            for (c, amp) in coin.amplitudes().into_iter().enumerate() {
                *state.amplitude_mut(c, g.s() as usize, g.t()) += a * amp;
            }
        }
        state.check_normalized(STATE_NORM_TOL)?;
        Ok(state)
    }

    /// Takes ownership of a full amplitude vector in `(c, s, x)` layout.
    pub fn from_amplitudes(p: DihedralParams, amplitudes: Vec<Complex64>) -> Result<Self> {
        let state = Self::from_raw(p, amplitudes)?;
        state.check_normalized(STATE_NORM_TOL)?;
        Ok(state)
    }

    /// Like [`from_amplitudes`](Self::from_amplitudes) but without the norm
    /// check. Used for intermediate vectors of linear transforms.
    pub fn from_raw(p: DihedralParams, amplitudes: Vec<Complex64>) -> Result<Self> {
        let expected = INTERNAL_DIM * p.n();
        if amplitudes.len() != expected {
            return Err(WalkError::DimensionMismatch {
                got: amplitudes.len(),
                expected,
            });
        }
        Ok(Self { params: p, amplitudes })
    }

    pub(crate) fn zeros(p: DihedralParams) -> Self {
        Self {
            params: p,
            amplitudes: vec![Complex64::new(0.0, 0.0); INTERNAL_DIM * p.n()],
        }
    }

    /// Normalized state with i.i.d. complex Gaussian amplitudes.
    pub fn random<R: Rng + ?Sized>(p: DihedralParams, rng: &mut R) -> Self {
        let mut amplitudes: Vec<Complex64> = (0..INTERNAL_DIM * p.n())
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        amplitudes.iter_mut().for_each(|z| *z /= norm);
        Self { params: p, amplitudes }
    }

    #[inline]
    pub fn params(&self) -> DihedralParams {
        self.params
    }

    #[inline]
    fn index(&self, c: usize, s: usize, x: usize) -> usize {
        slot(c, s) * self.params.n() + x
    }

    #[inline]
    pub fn amplitude(&self, c: usize, s: usize, x: usize) -> Complex64 {
        self.amplitudes[self.index(c, s, x)]
    }

    #[inline]
    pub(crate) fn amplitude_mut(&mut self, c: usize, s: usize, x: usize) -> &mut Complex64 {
        let i = self.index(c, s, x);
        &mut self.amplitudes[i]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// The 6-vector `Ψ(x)` at position `x`, covering both sheets.
    pub fn internal_vector(&self, x: usize) -> [Complex64; INTERNAL_DIM] {
        let n = self.params.n();
        std::array::from_fn(|j| self.amplitudes[j * n + x])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn check_normalized(&self, tol: f64) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if norm_sqr.is_nan() || (norm_sqr - 1.0).abs() > tol {
            return Err(WalkError::NotNormalized { norm_sqr });
        }
        Ok(())
    }

    /// Largest componentwise distance to another state of the same size.
    pub fn max_abs_diff(&self, other: &WalkerState) -> f64 {
        assert_eq!(self.amplitudes.len(), other.amplitudes.len());
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Probability of finding the walker on vertex `(s, x)`.
    pub fn vertex_probability(&self, v: VertexIndex) -> Result<f64> {
        let g = self.params.decode_vertex(v)?;
        Ok((0..3)
            .map(|c| self.amplitude(c, g.s() as usize, g.t()).norm_sqr())
            .sum())
    }
}

/// Probability per vertex, indexed by [`VertexIndex`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub(crate) fn from_vec(probs: Vec<f64>) -> Self {
        Self { probs }
    }

    #[inline]
    pub fn get(&self, v: VertexIndex) -> f64 {
        self.probs[v.0]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Vertices ordered by decreasing probability (ties by index).
    pub fn ranked(&self) -> Vec<(VertexIndex, f64)> {
        let mut out: Vec<_> = self
            .probs
            .iter()
            .enumerate()
            .map(|(i, &p)| (VertexIndex(i), p))
            .collect();
        out.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        out
    }

    pub fn max_abs_diff(&self, other: &Distribution) -> f64 {
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
