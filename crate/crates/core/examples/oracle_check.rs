//! Direct stepping, the Fourier propagator and the dense matrix agree; the
//! quick verify suite reports the same.

use dihedral_walk::cli::{cmd_verify, Scale};
use dihedral_walk::prelude::*;
use rand::SeedableRng;

fn main() -> dihedral_walk::Result<()> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let p = DihedralParams::new(8)?;
    let coin = CoinOperator::haar_random(&mut rng);
    let psi = WalkerState::random(p, &mut rng);

    let direct = evolve(&psi, &coin, 40);
    let fourier = evolve_fourier(&psi, &coin, 40)?;
    let dense = oracle_evolve(&psi, &coin, 40)?;
    println!("direct vs fourier: {:.1e}", direct.max_abs_diff(&fourier));
    println!("direct vs dense:   {:.1e}", direct.max_abs_diff(&dense));

    println!();
    print!("{}", cmd_verify(Scale::Quick).render());
    Ok(())
}
