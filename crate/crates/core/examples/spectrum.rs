//! Eigenvalues of the Grover momentum blocks: closed form against the
//! numeric solver.

use dihedral_walk::prelude::*;
use dihedral_walk::spectral::block_eigen;

fn main() -> dihedral_walk::Result<()> {
    let n = 8;
    let p = DihedralParams::new(n)?;
    let coin = CoinOperator::grover();
    for k in 0..n {
        let numeric = block_eigen(&build_mk(&coin, k, p)?)?.values;
        let closed = analytic_eigenvalues(&coin, k, p)?;
        let worst = closed
            .values
            .iter()
            .map(|z| numeric.iter().map(|w| (z - w).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max);
        let (l5, l6) = (closed.values[4], closed.values[5]);
        println!(
            "k={k}  lambda5={:+.4}{:+.4}i  lambda6={:+.4}{:+.4}i  max gap {worst:.1e}",
            l5.re, l5.im, l6.re, l6.im
        );
    }
    let eigen = numeric_eigensystem(&dihedral_walk::spectral::build_all_blocks(&coin, p), p)?;
    println!("flat bands: {:?}", eigen.flat_bands());
    Ok(())
}
