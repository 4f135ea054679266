//! Equal superposition of (0, 0) and (1, 0) stays mirror symmetric:
//! P(s, x) = P(1 - s, -x) at every step.

use dihedral_walk::prelude::*;

fn main() -> dihedral_walk::Result<()> {
    let n = 20;
    let p = DihedralParams::new(n)?;
    let r = 3f64.sqrt().recip();
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let terms = [(p.identity(), h), (GroupElement::new(1, 0, &p)?, h)];
    let mut psi = WalkerState::from_position_superposition(&InitialCoinState::from_real(r, r, r)?, &terms, p)?;

    let coin = CoinOperator::grover();
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        psi = step(&psi, &coin);
        let dist = position_distribution(&psi);
        for x in 0..n {
            worst = worst.max((dist.get(VertexIndex(x)) - dist.get(VertexIndex(n + (n - x) % n))).abs());
        }
    }
    let dist = position_distribution(&psi);
    println!(
        "t=200 sheet 0: {:?}",
        dist.probs()[..6].iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>()
    );
    println!(
        "t=200 sheet 1: {:?}",
        [0, 19, 18, 17, 16, 15].map(|x| format!("{:.4}", dist.get(VertexIndex(n + x))))
    );
    println!("max asymmetry over 200 steps: {worst:.1e}");
    Ok(())
}
