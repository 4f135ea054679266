//! Closed-form spectrum of the Grover blocks.
//!
//! Four eigenvalues do not depend on the momentum: `−1`, `1` and
//! `(1 ∓ 2√2 i)/3`. The remaining pair is `−A/(6K)` and `−B/(6K)` with
//!
//! ```text
//! D = K² + 10K + 1
//! A = K² + 4K + 1 − (K − 1)√D
//! B = K² + 4K + 1 + (K − 1)√D
//! ```
//!
//! The square root is taken on the branch `√D = e^{iθ/2}·√(2cos θ + 10)`
//! with `θ = 2πk/N ∈ [0, 2π)`. With that branch both values reduce to
//! `−[(cos θ + 2) ∓ i sin(θ/2)√(2cos θ + 10)]/3`, which is what is evaluated.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::group::DihedralParams;
use crate::walk::coin::CoinOperator;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticEigenvalues {
    pub k: usize,
    pub theta: f64,
    /// `K = e^{iθ}`.
    pub phase: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub d: Complex64,
    /// `λ1 … λ6` in closed-form order.
    pub values: [Complex64; 6],
}

impl AnalyticEigenvalues {
    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }

    pub fn product(&self) -> Complex64 {
        self.values.iter().product()
    }

    /// Indices of the momentum-independent eigenvalues.
    pub const FLAT: [usize; 4] = [0, 1, 2, 3];
}

/// Closed-form eigenvalues of `M_k`; only defined for the Grover coin.
pub fn analytic_eigenvalues(coin: &CoinOperator, k: usize, p: DihedralParams) -> Result<AnalyticEigenvalues> {
    if !coin.is_grover() {
        return Err(WalkError::NotGrover);
    }
    let n = p.n();
    if k >= n {
        return Err(WalkError::MomentumOutOfRange { k, n });
    }
    let theta = 2.0 * PI * k as f64 / n as f64;
    let phase = Complex64::from_polar(1.0, theta);
    let radial = (2.0 * theta.cos() + 10.0).sqrt();
    let sqrt_d = Complex64::from_polar(radial, theta / 2.0);
    let d = phase * phase + 10.0 * phase + 1.0;
    let base = phase * phase + 4.0 * phase + 1.0;
    let a = base - (phase - 1.0) * sqrt_d;
    let b = base + (phase - 1.0) * sqrt_d;

    let re = -(theta.cos() + 2.0) / 3.0;
    let im = (theta / 2.0).sin() * radial / 3.0;
    let r = 2.0 * 2f64.sqrt() / 3.0;
    let values = [
        Complex64::new(-1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0 / 3.0, -r),
        Complex64::new(1.0 / 3.0, r),
        Complex64::new(re, im),
        Complex64::new(re, -im),
    ];
    Ok(AnalyticEigenvalues {
        k,
        theta,
        phase,
        a,
        b,
        d,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn flat_values_and_moduli() {
        let p = DihedralParams::new(9).unwrap();
        for k in 0..9 {
            let ev = analytic_eigenvalues(&CoinOperator::grover(), k, p).unwrap();
            assert_eq!(ev.values[0], Complex64::new(-1.0, 0.0));
            assert_eq!(ev.values[1], Complex64::new(1.0, 0.0));
            let want = Complex64::new(1.0, -2.0 * 2f64.sqrt()) / 3.0;
            assert_abs_diff_eq!((ev.values[2] - want).norm(), 0.0, epsilon = 1e-16);
            for v in ev.values {
                assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn zero_momentum_pair_collapses_to_minus_one() {
        let p = DihedralParams::new(5).unwrap();
        let ev = analytic_eigenvalues(&CoinOperator::grover(), 0, p).unwrap();
        assert_abs_diff_eq!((ev.a - 6.0).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((ev.b - 6.0).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((ev.values[4] + 1.0).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((ev.values[5] + 1.0).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn trig_form_equals_a_b_form_on_the_chosen_branch() {
        for n in [3, 7, 16, 64] {
            let p = DihedralParams::new(n).unwrap();
            for k in 0..n {
                let ev = analytic_eigenvalues(&CoinOperator::grover(), k, p).unwrap();
                let six_k = 6.0 * ev.phase;
                assert_abs_diff_eq!((ev.values[4] + ev.a / six_k).norm(), 0.0, epsilon = 1e-13);
                assert_abs_diff_eq!((ev.values[5] + ev.b / six_k).norm(), 0.0, epsilon = 1e-13);
                // AB = 36K²
                assert_abs_diff_eq!((ev.a * ev.b - 36.0 * ev.phase * ev.phase).norm(), 0.0, epsilon = 1e-12);
                let sqrt_d = Complex64::from_polar((2.0 * ev.theta.cos() + 10.0).sqrt(), ev.theta / 2.0);
                assert_abs_diff_eq!((sqrt_d * sqrt_d - ev.d).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn rejects_other_coins() {
        let p = DihedralParams::new(5).unwrap();
        assert!(matches!(
            analytic_eigenvalues(&CoinOperator::dft(), 0, p),
            Err(WalkError::NotGrover)
        ));
        assert!(analytic_eigenvalues(&CoinOperator::grover(), 5, p).is_err());
    }
}
