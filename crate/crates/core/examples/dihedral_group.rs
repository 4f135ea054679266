//! Group arithmetic in D_N and the walk's Cayley-graph neighbourhoods.

use dihedral_walk::prelude::*;

fn main() -> dihedral_walk::Result<()> {
    let p = DihedralParams::new(6)?;
    let sigma = p.generator_element(Generator::Rotation);
    let tau = p.generator_element(Generator::Reflection);

    println!("|D_6| = {}", p.order());
    println!("sigma^6 = e: {}", p.pow(sigma, 6) == p.identity());
    println!(
        "tau sigma tau = sigma^-1: {}",
        p.multiply(p.multiply(tau, sigma), tau) == p.inverse(sigma)
    );

    println!("\nvertex  element  neighbours (sigma, e, tau)");
    for g in p.elements() {
        let v = p.encode_vertex(g);
        let nbrs: Vec<usize> = p.cayley_neighbors(v)?.iter().map(|(_, w)| w.get()).collect();
        let name = if g.is_reflection() {
            format!("tau sigma^{}", g.t())
        } else {
            format!("sigma^{}", g.t())
        };
        println!("{:>6}  {:<11} {:?}", v.get(), name, nbrs);
    }
    Ok(())
}
