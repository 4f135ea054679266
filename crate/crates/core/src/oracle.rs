//! Brute-force reference: the full `6N × 6N` walk operator as a dense matrix.
//!
//! Nothing here reuses the stepping or spectral code. `S` is assembled from
//! its six ket-bra terms as Kronecker products over coin ⊗ sheet ⊗ position,
//! which yields the same `(c, s, x)` basis order as [`WalkerState`].

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::group::{DihedralParams, VertexIndex};
use crate::walk::coin::CoinOperator;
use crate::walk::state::WalkerState;

/// Largest polygon order the oracle will build.
pub const MAX_ORACLE_N: usize = 256;

/// Deflation threshold of the dense Schur iteration. Machine epsilon stalls
/// on the highly degenerate Grover spectrum.
const SCHUR_EPS: f64 = 1e-14;

#[derive(Debug, Clone)]
pub struct DenseUnitary {
    params: DihedralParams,
    matrix: DMatrix<Complex64>,
}

fn ket_bra(dim: usize, row: usize, col: usize) -> DMatrix<Complex64> {
    let mut m = DMatrix::zeros(dim, dim);
    m[(row, col)] = Complex64::new(1.0, 0.0);
    m
}

/// `Σ_j |j + offset mod N⟩⟨j|`.
fn cyclic_shift(n: usize, offset: isize) -> DMatrix<Complex64> {
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let target = (j as isize + offset).rem_euclid(n as isize) as usize;
        m[(target, j)] = Complex64::new(1.0, 0.0);
    }
    m
}

pub fn build_dense_unitary(coin: &CoinOperator, p: DihedralParams) -> Result<DenseUnitary> {
    let n = p.n();
    if n > MAX_ORACLE_N {
        return Err(WalkError::OracleTooLarge { n, max: MAX_ORACLE_N });
    }
    let term = |c: usize, s_out: usize, s_in: usize, offset: isize| {
        ket_bra(3, c, c)
            .kronecker(&ket_bra(2, s_out, s_in))
            .kronecker(&cyclic_shift(n, offset))
    };
    let shift = term(0, 0, 0, 1)
        + term(0, 1, 1, -1)
        + term(1, 0, 0, 0)
        + term(1, 1, 1, 0)
        + term(2, 0, 1, 0)
        + term(2, 1, 0, 0);

    let coin_dense = DMatrix::from_fn(3, 3, |r, c| coin.entry(r, c));
    let coin_full = coin_dense.kronecker(&DMatrix::<Complex64>::identity(2 * n, 2 * n));

    Ok(DenseUnitary {
        params: p,
        matrix: shift * coin_full,
    })
}

impl DenseUnitary {
    pub fn params(&self) -> DihedralParams {
        self.params
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        (prod - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn to_vector(&self, state: &WalkerState) -> Result<DVector<Complex64>> {
        if state.params() != self.params {
            return Err(WalkError::DimensionMismatch {
                got: state.amplitudes().len(),
                expected: self.dim(),
            });
        }
        Ok(DVector::from_column_slice(state.amplitudes()))
    }

    pub fn evolve(&self, initial: &WalkerState, t: usize) -> Result<WalkerState> {
        let mut v = self.to_vector(initial)?;
        for _ in 0..t {
            v = &self.matrix * v;
        }
        WalkerState::from_raw(self.params, v.as_slice().to_vec())
    }

    /// Running averages of `P(X_t = x)` for `t = 1 … T`, by literal
    /// summation.
    pub fn running_average(&self, initial: &WalkerState, horizon: usize, x: VertexIndex) -> Result<Vec<f64>> {
        if horizon == 0 {
            return Err(WalkError::EmptyHorizon);
        }
        let g = self.params.decode_vertex(x)?;
        let n = self.params.n();
        let rows: Vec<usize> = (0..3).map(|c| (2 * c + g.s() as usize) * n + g.t()).collect();
        let mut v = self.to_vector(initial)?;
        let mut next = DVector::zeros(self.dim());
        let mut sum = 0.0;
        let mut out = Vec::with_capacity(horizon);
        for t in 1..=horizon {
            sum += rows.iter().map(|&r| v[r].norm_sqr()).sum::<f64>();
            out.push(sum / t as f64);
            next.gemv(Complex64::new(1.0, 0.0), &self.matrix, &v, Complex64::new(0.0, 0.0));
            std::mem::swap(&mut v, &mut next);
        }
        Ok(out)
    }

    pub fn time_average(&self, initial: &WalkerState, horizon: usize, x: VertexIndex) -> Result<f64> {
        Ok(*self.running_average(initial, horizon, x)?.last().expect("horizon >= 1"))
    }

    /// All `6N` eigenvalues via a dense complex Schur decomposition.
    pub fn eigenvalues(&self) -> Result<Vec<Complex64>> {
        let schur = nalgebra::linalg::Schur::try_new(self.matrix.clone(), SCHUR_EPS, 100_000).ok_or_else(|| {
            WalkError::Eigensolver {
                k: usize::MAX,
                reason: "dense Schur iteration did not converge".into(),
            }
        })?;
        let (_, t) = schur.unpack();
        Ok((0..self.dim()).map(|i| t[(i, i)]).collect())
    }
}

/// `U^t ψ` by repeated dense matrix-vector products.
pub fn oracle_evolve(initial: &WalkerState, coin: &CoinOperator, t: usize) -> Result<WalkerState> {
    build_dense_unitary(coin, initial.params())?.evolve(initial, t)
}

/// `(1/T) Σ_{t<T} P(X_t = x)` by literal summation.
pub fn oracle_time_average(initial: &WalkerState, coin: &CoinOperator, horizon: usize, x: VertexIndex) -> Result<f64> {
    build_dense_unitary(coin, initial.params())?.time_average(initial, horizon, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;
    use crate::walk::coin::InitialCoinState;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dimensions_and_unitarity() {
        let p = DihedralParams::new(5).unwrap();
        for coin in [CoinOperator::grover(), CoinOperator::dft()] {
            let u = build_dense_unitary(&coin, p).unwrap();
            assert_eq!((u.matrix().nrows(), u.matrix().ncols()), (30, 30));
            assert!(u.unitarity_deviation() < 1e-12);
        }
    }

    #[test]
    fn size_guard() {
        let p = DihedralParams::new(MAX_ORACLE_N + 1).unwrap();
        assert!(matches!(
            build_dense_unitary(&CoinOperator::grover(), p),
            Err(WalkError::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn origin_column_for_grover() {
        let p = DihedralParams::new(5).unwrap();
        let u = build_dense_unitary(&CoinOperator::grover(), p).unwrap();
        let col = u.matrix().column(0);
        let idx = |c: usize, s: usize, x: usize| (2 * c + s) * 5 + x;
        assert_abs_diff_eq!((col[idx(0, 0, 1)] + 1.0 / 3.0).norm(), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!((col[idx(1, 0, 0)] - 2.0 / 3.0).norm(), 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!((col[idx(2, 1, 0)] - 2.0 / 3.0).norm(), 0.0, epsilon = 1e-16);
        assert_eq!(col.iter().filter(|z| z.norm() > 0.0).count(), 3);
    }

    #[test]
    fn zero_steps_and_single_step_average() {
        let p = DihedralParams::new(4).unwrap();
        let s = WalkerState::initial(&InitialCoinState::uniform(), GroupElement::new(1, 2, &p).unwrap(), p);
        let coin = CoinOperator::grover();
        assert_eq!(oracle_evolve(&s, &coin, 0).unwrap(), s);
        assert_abs_diff_eq!(
            oracle_time_average(&s, &coin, 1, VertexIndex(6)).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert!(oracle_time_average(&s, &coin, 0, VertexIndex(6)).is_err());
    }

    #[test]
    fn time_average_settles() {
        let p = DihedralParams::new(5).unwrap();
        let s = WalkerState::initial(&InitialCoinState::basis(0), p.identity(), p);
        let u = build_dense_unitary(&CoinOperator::grover(), p).unwrap();
        let series = u.running_average(&s, 4000, VertexIndex(0)).unwrap();
        for t in [250usize, 500, 1000, 2000] {
            let gap = (series[2 * t - 1] - series[t - 1]).abs();
            assert!(gap <= 20.0 / t as f64, "T={t} gap {gap}");
        }
    }
}
