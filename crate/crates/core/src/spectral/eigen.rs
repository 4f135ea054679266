//! Eigen-decomposition of the momentum blocks.
//!
//! Each `M_k` is unitary, hence normal, so its complex Schur form is diagonal
//! up to rounding and the Schur vectors already form an orthonormal
//! eigenbasis, including inside degenerate eigenspaces.

use nalgebra::{linalg::Schur, Matrix6, Vector6};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, WalkError};
use crate::group::DihedralParams;
use crate::spectral::blocks::FourierBlock;
use crate::walk::state::INTERNAL_DIM;

/// Absolute tolerance under which two eigenvalues are treated as equal.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Maximum residual / off-diagonal Schur mass accepted from the solver.
const SOLVER_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct BlockEigen {
    pub k: usize,
    /// Eigenvalues sorted by argument in `(−π, π]`.
    pub values: [Complex64; INTERNAL_DIM],
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: Matrix6<Complex64>,
}

impl BlockEigen {
    pub fn vector(&self, j: usize) -> Vector6<Complex64> {
        self.vectors.column(j).into_owned()
    }

    /// `⟨ω_j | v⟩` for every `j`.
    pub fn coefficients(&self, v: &[Complex64; INTERNAL_DIM]) -> [Complex64; INTERNAL_DIM] {
        std::array::from_fn(|j| (0..INTERNAL_DIM).map(|i| self.vectors[(i, j)].conj() * v[i]).sum())
    }
}

/// Set of `(k, j)` pairs sharing one eigenvalue.
#[derive(Debug, Clone)]
pub struct DegeneracyClass {
    pub value: Complex64,
    pub members: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct EigenSystem {
    params: DihedralParams,
    blocks: Vec<BlockEigen>,
    classes: Vec<DegeneracyClass>,
}

impl EigenSystem {
    pub fn params(&self) -> DihedralParams {
        self.params
    }

    pub fn blocks(&self) -> &[BlockEigen] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &BlockEigen {
        &self.blocks[k]
    }

    pub fn classes(&self) -> &[DegeneracyClass] {
        &self.classes
    }

    /// The class whose eigenvalue lies within [`DEGENERACY_TOL`] of `value`.
    pub fn class_of(&self, value: Complex64) -> Option<&DegeneracyClass> {
        self.classes.iter().find(|c| (c.value - value).norm() <= DEGENERACY_TOL)
    }

    /// Eigenvalues present in every block (flat bands), one per class.
    pub fn flat_bands(&self) -> Vec<Complex64> {
        let n = self.params.n();
        self.classes
            .iter()
            .filter(|c| {
                let mut seen = vec![false; n];
                c.members.iter().for_each(|&(k, _)| seen[k] = true);
                seen.into_iter().all(|b| b)
            })
            .map(|c| c.value)
            .collect()
    }
}

/// Eigen-decomposition of one block.
pub fn block_eigen(block: &FourierBlock) -> Result<BlockEigen> {
    let fail = |reason: String| WalkError::Eigensolver { k: block.k, reason };
    let schur = Schur::try_new(block.matrix, f64::EPSILON, 10_000)
        .ok_or_else(|| fail("Schur iteration did not converge".into()))?;
    let (q, t) = schur.unpack();

    let mut off_diag: f64 = 0.0;
    for i in 0..INTERNAL_DIM {
        for j in i + 1..INTERNAL_DIM {
            off_diag = off_diag.max(t[(i, j)].norm());
        }
    }
    if off_diag > SOLVER_TOL {
        return Err(fail(format!(
            "Schur form not diagonal (off-diagonal {off_diag:e}); block is not normal"
        )));
    }

    let mut order: Vec<usize> = (0..INTERNAL_DIM).collect();
    order.sort_by(|&a, &b| t[(a, a)].arg().total_cmp(&t[(b, b)].arg()));
    let values = std::array::from_fn(|j| t[(order[j], order[j])]);
    let vectors = Matrix6::from_fn(|i, j| q[(i, order[j])]);

    let out = BlockEigen {
        k: block.k,
        values,
        vectors,
    };
    for j in 0..INTERNAL_DIM {
        let v = out.vector(j);
        let residual = (block.matrix * v - v * out.values[j]).norm();
        if residual.is_nan() || residual > SOLVER_TOL {
            return Err(fail(format!("eigenpair {j} residual {residual:e}")));
        }
    }
    Ok(out)
}

/// Solves every block (concurrently) and groups all eigenvalues into
/// degeneracy classes.
pub fn numeric_eigensystem(blocks: &[FourierBlock], p: DihedralParams) -> Result<EigenSystem> {
    assert_eq!(blocks.len(), p.n(), "need one block per momentum");
    let solved: Vec<BlockEigen> = blocks.par_iter().map(block_eigen).collect::<Result<_>>()?;

    let mut classes: Vec<DegeneracyClass> = Vec::new();
    for b in &solved {
        for (j, &lam) in b.values.iter().enumerate() {
            match classes.iter_mut().find(|c| (c.value - lam).norm() <= DEGENERACY_TOL) {
                Some(c) => c.members.push((b.k, j)),
                None => classes.push(DegeneracyClass {
                    value: lam,
                    members: vec![(b.k, j)],
                }),
            }
        }
    }

    Ok(EigenSystem {
        params: p,
        blocks: solved,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::blocks::{build_all_blocks, build_mk};
    use crate::walk::coin::CoinOperator;
    use approx::assert_abs_diff_eq;

    fn flat_values() -> [Complex64; 4] {
        let r = 2.0 * 2f64.sqrt() / 3.0;
        [
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0 / 3.0, -r),
            Complex64::new(1.0 / 3.0, r),
        ]
    }

    #[test]
    fn grover_blocks_contain_flat_bands() {
        for n in [3, 4, 7, 12] {
            let p = DihedralParams::new(n).unwrap();
            for k in 0..n {
                let e = block_eigen(&build_mk(&CoinOperator::grover(), k, p).unwrap()).unwrap();
                for want in flat_values() {
                    assert!(
                        e.values.iter().any(|v| (v - want).norm() < 1e-8),
                        "k={k} missing {want}"
                    );
                }
                for v in e.values {
                    assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn zero_momentum_has_triple_minus_one() {
        let p = DihedralParams::new(6).unwrap();
        let e = block_eigen(&build_mk(&CoinOperator::grover(), 0, p).unwrap()).unwrap();
        let count = e.values.iter().filter(|v| (*v + 1.0).norm() < 1e-8).count();
        assert_eq!(count, 3);
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let p = DihedralParams::new(10).unwrap();
        for coin in [CoinOperator::grover(), CoinOperator::dft()] {
            let sys = numeric_eigensystem(&build_all_blocks(&coin, p), p).unwrap();
            for b in sys.blocks() {
                let gram = b.vectors.adjoint() * b.vectors;
                assert!((gram - Matrix6::identity()).iter().all(|z| z.norm() < 1e-10));
            }
        }
    }

    #[test]
    fn grover_degeneracy_classes() {
        for n in [3, 5, 8, 16] {
            let p = DihedralParams::new(n).unwrap();
            let sys = numeric_eigensystem(&build_all_blocks(&CoinOperator::grover(), p), p).unwrap();
            let minus = sys.class_of(Complex64::new(-1.0, 0.0)).unwrap();
            let plus = sys.class_of(Complex64::new(1.0, 0.0)).unwrap();
            assert!(minus.members.len() >= n + 2);
            assert!(plus.members.len() >= n);
            let total: usize = sys.classes().iter().map(|c| c.members.len()).sum();
            assert_eq!(total, 6 * n);
            assert_eq!(sys.flat_bands().len(), 4);
        }
    }

    #[test]
    fn coefficients_expand_the_input() {
        let p = DihedralParams::new(5).unwrap();
        let e = block_eigen(&build_mk(&CoinOperator::dft(), 2, p).unwrap()).unwrap();
        let v: [Complex64; 6] = std::array::from_fn(|i| Complex64::new(i as f64, 1.0 - i as f64));
        let coeffs = e.coefficients(&v);
        let rebuilt = e.vectors * Vector6::from_column_slice(&coeffs);
        for i in 0..6 {
            assert_abs_diff_eq!((rebuilt[i] - v[i]).norm(), 0.0, epsilon = 1e-12);
        }
    }
}
