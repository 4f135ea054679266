//! One Grover step from the origin with coin |0>: the walker splits 4/9, 1/9,
//! 4/9 over the origin, its rotation neighbour and its reflection partner.

use dihedral_walk::prelude::*;

fn main() -> dihedral_walk::Result<()> {
    let p = DihedralParams::new(5)?;
    let coin = CoinOperator::grover();
    let mut psi = WalkerState::initial(&InitialCoinState::basis(0), p.identity(), p);

    for t in 0..=3 {
        let dist = position_distribution(&psi);
        let row: Vec<String> = dist.probs().iter().map(|x| format!("{x:.4}")).collect();
        println!("t={t}  {}", row.join(" "));
        psi = step(&psi, &coin);
    }
    Ok(())
}
