use std::f64::consts::PI;

use nalgebra::Matrix3;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Result, WalkError};

/// Tolerance on `C†C = I` when a coin is constructed.
pub const COIN_UNITARITY_TOL: f64 = 1e-12;

/// A 3×3 unitary acting on the coin register `{|0⟩, |1⟩, |2⟩}`.
///
/// Coin state `|0⟩` selects the rotation hop, `|1⟩` staying put and `|2⟩` the
/// reflection hop.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinOperator {
    entries: Matrix3<Complex64>,
}

impl CoinOperator {
    pub fn new(entries: Matrix3<Complex64>) -> Result<Self> {
        let deviation = unitarity_deviation(&entries);
        if deviation.is_nan() || deviation > COIN_UNITARITY_TOL {
            return Err(WalkError::NonUnitaryCoin { deviation });
        }
        Ok(Self { entries })
    }

    /// Builds a coin from nine row-major entries.
    pub fn from_row_major(entries: &[Complex64; 9]) -> Result<Self> {
        Self::new(Matrix3::from_row_slice(entries))
    }

    /// The three-dimensional Grover diffusion `(2/3)J − I`.
    pub fn grover() -> Self {
        let d = Complex64::new(-1.0 / 3.0, 0.0);
        let o = Complex64::new(2.0 / 3.0, 0.0);
        Self {
            entries: Matrix3::new(d, o, o, o, d, o, o, o, d),
        }
    }

    /// The degree-3 DFT coin, entry `(r, c) = e^{2πi·rc/3}/√3`.
    pub fn dft() -> Self {
        let scale = 1.0 / 3f64.sqrt();
        let entries = Matrix3::from_fn(|r, c| {
            let m = ((r * c) % 3) as f64;
            Complex64::from_polar(scale, 2.0 * PI * m / 3.0)
        });
        Self { entries }
    }

    /// Haar-distributed unitary via QR of a complex Ginibre matrix, with the
    /// phases of `R`'s diagonal folded back into `Q`.
    pub fn haar_random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let g = Matrix3::from_fn(|_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let (mut q, r) = g.qr().unpack();
        for j in 0..3 {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 {
                d / d.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            for i in 0..3 {
                q[(i, j)] *= phase;
            }
        }
        Self { entries: q }
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn matrix(&self) -> &Matrix3<Complex64> {
        &self.entries
    }

    /// True when the coin equals the Grover coin to within rounding.
    pub fn is_grover(&self) -> bool {
        (self.entries - Self::grover().entries)
            .iter()
            .all(|z| z.norm() <= 1e-14)
    }

    /// Applies the coin to a coin-register vector.
    #[inline]
    pub fn apply(&self, v: [Complex64; 3]) -> [Complex64; 3] {
        let m = &self.entries;
        [
            m[(0, 0)] * v[0] + m[(0, 1)] * v[1] + m[(0, 2)] * v[2],
            m[(1, 0)] * v[0] + m[(1, 1)] * v[1] + m[(1, 2)] * v[2],
            m[(2, 0)] * v[0] + m[(2, 1)] * v[1] + m[(2, 2)] * v[2],
        ]
    }
}

fn unitarity_deviation(m: &Matrix3<Complex64>) -> f64 {
    let prod = m.adjoint() * m;
    (prod - Matrix3::identity())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Coin amplitudes `(α, β, γ)` of a walker starting on a single vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialCoinState {
    amplitudes: [Complex64; 3],
}

impl InitialCoinState {
    pub const NORM_TOL: f64 = 1e-12;

    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr() + gamma.norm_sqr();
        if norm_sqr.is_nan() || (norm_sqr - 1.0).abs() > Self::NORM_TOL {
            return Err(WalkError::NotNormalized { norm_sqr });
        }
        Ok(Self {
            amplitudes: [alpha, beta, gamma],
        })
    }

    pub fn from_real(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::new(alpha.into(), beta.into(), gamma.into())
    }

    /// Basis state `|c⟩`.
    pub fn basis(c: usize) -> Self {
        assert!(c < 3, "coin basis index must be 0, 1 or 2");
        let mut amplitudes = [Complex64::new(0.0, 0.0); 3];
        amplitudes[c] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    /// `(|0⟩ + |1⟩ + |2⟩)/√3`, the Grover fixed point.
    pub fn uniform() -> Self {
        let a = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
        Self { amplitudes: [a; 3] }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut v: [Complex64; 3] =
            std::array::from_fn(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|z| *z /= norm);
        Self { amplitudes: v }
    }

    pub fn amplitudes(&self) -> [Complex64; 3] {
        self.amplitudes
    }
}
