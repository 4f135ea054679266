//! Momentum-space analysis of the walk.
//!
//! The walk operator commutes with translations along each sheet, so the
//! Fourier transform over position splits it into `N` independent 6×6
//! blocks `M_k`. Evolution, spectra and long-time limits are all computed
//! block by block.

pub mod analytic;
pub mod blocks;
pub mod eigen;
pub mod fourier;
pub mod propagator;

pub use analytic::{analytic_eigenvalues, AnalyticEigenvalues};
pub use blocks::{build_all_blocks, build_mk, FourierBlock};
pub use eigen::{block_eigen, numeric_eigensystem, BlockEigen, DegeneracyClass, EigenSystem, DEGENERACY_TOL};
pub use fourier::{dtft_forward, dtft_inverse, FourierState};
pub use propagator::{evolve_fourier, limiting_distribution, limiting_return_probability_theorem1, FourierPropagator};
