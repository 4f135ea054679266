//! Grover walk on D_50 after 200 steps from (1, 0): the largest
//! probabilities for each initial coin state.

use dihedral_walk::prelude::*;

fn main() -> dihedral_walk::Result<()> {
    let p = DihedralParams::new(50)?;
    let start = GroupElement::new(1, 0, &p)?;
    let r = 3f64.sqrt().recip();
    let states = [
        ("|0>", InitialCoinState::basis(0)),
        ("|1>", InitialCoinState::basis(1)),
        ("|2>", InitialCoinState::basis(2)),
        ("uniform", InitialCoinState::from_real(r, r, r)?),
    ];
    println!("uniform level 1/(2N) = {:.4}", 1.0 / 100.0);
    for (name, cs) in states {
        let psi = WalkerState::initial(&cs, start, p);
        let dist = position_distribution(&evolve(&psi, &CoinOperator::grover(), 200));
        let top: Vec<String> = dist.ranked()[..3]
            .iter()
            .map(|(v, x)| format!("v{}={x:.4}", v.get()))
            .collect();
        println!("{name:<8} {}", top.join("  "));
    }
    Ok(())
}
