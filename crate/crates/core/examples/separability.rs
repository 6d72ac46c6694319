//! Hunts for separable states below the ½ bound with each generator.

use entlaser::oracle::expectation;
use entlaser::stokes::build_fock_operators;
use entlaser::witness::{extremal_product, sample_separable, SeparableGenerator};
use entlaser::Tolerances;

fn main() -> entlaser::Result<()> {
    let tol = Tolerances::default();
    let seed = 7;
    for g in SeparableGenerator::ALL {
        let samples = sample_separable(g, seed, 5000, 4, &tol)?;
        let worst = samples.iter().min_by(|a, b| a.ratio.total_cmp(&b.ratio)).unwrap();
        println!("{:<22} min ratio {:.12} (sample {})", g.name(), worst.ratio, worst.index);
    }
    let ops = build_fock_operators(4, tol.max_fock_dim)?;
    for photons in 1..=4 {
        let s = extremal_product(photons, ops.basis);
        let ratio = expectation(&s, &ops.j2, &tol)? / expectation(&s, &ops.n, &tol)?;
        println!("|{photons},0,0,{photons}⟩ ratio {ratio}");
    }
    Ok(())
}
