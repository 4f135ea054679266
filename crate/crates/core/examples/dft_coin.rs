//! Grover and DFT coins side by side: probability left at the start vertex
//! (1, 0) and its partner (0, 0) after 200 steps on D_50.

use dihedral_walk::prelude::*;

fn main() -> dihedral_walk::Result<()> {
    let p = DihedralParams::new(50)?;
    let start = GroupElement::new(1, 0, &p)?;
    let r = 3f64.sqrt().recip();
    let states = [
        ("|0>", InitialCoinState::basis(0)),
        ("uniform", InitialCoinState::from_real(r, r, r)?),
    ];
    for (coin_name, coin) in [("grover", CoinOperator::grover()), ("dft", CoinOperator::dft())] {
        for (name, cs) in &states {
            let psi = WalkerState::initial(cs, start, p);
            let dist = position_distribution(&evolve(&psi, &coin, 200));
            println!(
                "{coin_name:<7}{name:<8} P(v50)={:.4}  P(v0)={:.4}",
                dist.get(VertexIndex(50)),
                dist.get(VertexIndex(0))
            );
        }
    }
    Ok(())
}
