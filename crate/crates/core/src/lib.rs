//! Three-state discrete-time quantum walk on the Cayley graph of the
//! dihedral group `D_N`.
//!
//! The walker lives on the `2N` elements of `D_N` and carries a three-level
//! coin. Coin `|0⟩` moves it by left multiplication with the rotation `σ`,
//! coin `|1⟩` keeps it in place and coin `|2⟩` applies the reflection `τ`.
//! One step is `U = S (C ⊗ I)`.
//!
//! The crate offers three independent routes to the dynamics:
//!
//! - [`walk`]: direct stepping in position space,
//! - [`spectral`]: Fourier block-diagonalisation into `N` 6×6 blocks, with
//!   closed-form Grover eigenvalues and long-time limits,
//! - [`oracle`]: the dense `6N × 6N` matrix, used as a reference.
//!
//! [`cli`] wraps them into reproducible experiments that write CSV and JSON.
//!
//! ```
//! use dihedral_walk::prelude::*;
//!
//! let p = DihedralParams::new(5).unwrap();
//! let psi0 = WalkerState::initial(&InitialCoinState::basis(0), p.identity(), p);
//! let psi1 = step(&psi0, &CoinOperator::grover());
//! let dist = position_distribution(&psi1);
//! assert!((dist.get(VertexIndex(0)) - 4.0 / 9.0).abs() < 1e-15);
//! ```

pub mod cli;
pub mod error;
pub mod group;
pub mod oracle;
pub mod spectral;
pub mod walk;

pub use error::{Result, WalkError};

pub mod prelude {
    pub use crate::error::{Result, WalkError};
    pub use crate::group::{DihedralParams, Generator, GroupElement, VertexIndex};
    pub use crate::oracle::{build_dense_unitary, oracle_evolve, oracle_time_average, DenseUnitary};
    pub use crate::spectral::{
        analytic_eigenvalues, build_mk, dtft_forward, dtft_inverse, evolve_fourier, limiting_distribution,
        limiting_return_probability_theorem1, numeric_eigensystem, FourierPropagator,
    };
    pub use crate::walk::{
        evolve, position_distribution, step, time_averaged_distribution, CoinOperator, Distribution, InitialCoinState,
        WalkerState,
    };
    pub use num_complex::Complex64;
}
