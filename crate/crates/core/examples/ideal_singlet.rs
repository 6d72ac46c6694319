//! The lossless source: ⟨N⟩ = 4sinh²τ and ⟨J²⟩ = 0, computed by the Gaussian
//! engine and by exact Fock-space propagation of the vacuum.

use entlaser::engine::{evolve_analytic_balanced, witness, DriftSpec};
use entlaser::oracle::{build_hamiltonian, build_ideal_state, evolve_exact, expectation, FockState};
use entlaser::stokes::build_fock_operators;
use entlaser::Tolerances;

fn main() -> entlaser::Result<()> {
    let tol = Tolerances::default();
    let cutoff = 12;
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let h = build_hamiltonian(1.0, 0.0, 1.0, cutoff, tol.max_fock_dim)?;
    println!("{:>5} {:>12} {:>12} {:>12} {:>11} {:>11}", "τ", "4sinh²τ", "engine N", "oracle N", "engine J²", "oracle J²");
    for tau in [0.1, 0.3, 0.5] {
        let gaussian = witness(&evolve_analytic_balanced(&DriftSpec::lossless(1.0), tau, &tol)?, &tol)?;
        let exact = evolve_exact(&FockState::vacuum(ops.basis), &h, tau, &tol)?;
        println!(
            "{tau:>5} {:>12.9} {:>12.9} {:>12.9} {:>11.2e} {:>11.2e}",
            4.0 * tau.sinh().powi(2),
            gaussian.n,
            expectation(&exact, &ops.n, &tol)?,
            gaussian.j2,
            expectation(&exact, &ops.j2, &tol)?,
        );
    }
    // the two truncate differently, so their distance is set by the weight
    // beyond the cutoff; 16 photons per mode pushes that below 1e-8
    let fine = 16;
    let closed = build_ideal_state(0.3, fine, tol.max_fock_dim)?;
    let h = build_hamiltonian(1.0, 0.0, 1.0, fine, tol.max_fock_dim)?;
    let evolved = evolve_exact(&FockState::vacuum(closed.basis), &h, 0.3, &tol)?;
    println!("\nclosed form vs propagated state at τ = 0.3, cutoff {fine}: distance {:.2e}", closed.distance(&evolved));
    Ok(())
}
