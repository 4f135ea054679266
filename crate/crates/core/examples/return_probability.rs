//! Time-averaged return probability at the start vertex, against both
//! long-time formulas: the diagonal-only one and the degeneracy-aware one.

use dihedral_walk::prelude::*;
use dihedral_walk::walk::running_average_at;

fn main() -> dihedral_walk::Result<()> {
    let coin = CoinOperator::grover();
    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10}",
        "N", "avg(100)", "avg(5000)", "limit", "diag-only"
    );
    for n in [5, 10, 35, 100] {
        let p = DihedralParams::new(n)?;
        let start = GroupElement::new(1, 0, &p)?;
        let v = p.encode_vertex(start);
        let psi = WalkerState::initial(&InitialCoinState::basis(0), start, p);
        let series = running_average_at(&psi, &coin, 5000, v)?;
        let prop = FourierPropagator::new(&coin, p)?;
        println!(
            "{n:>4} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            series[99],
            series[4999],
            prop.limit_at(&psi, v)?,
            prop.theorem1_limit(&psi)?
        );
    }
    Ok(())
}
