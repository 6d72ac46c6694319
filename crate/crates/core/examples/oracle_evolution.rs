//! Exact propagation with a phase-mismatched second source, compared with
//! the Gaussian engine step by step.

use entlaser::engine::{apply_phase_mismatch, evolve_rk4, witness, CovarianceState, DriftSpec};
use entlaser::oracle::{build_hamiltonian, evolve_exact, expectation, spin_vector, FockState};
use entlaser::stokes::build_fock_operators;
use entlaser::Tolerances;

fn main() -> entlaser::Result<()> {
    let tol = Tolerances::default();
    let (phi, cutoff) = (0.5, 12);
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let h = build_hamiltonian(1.0, phi, 1.0, cutoff, tol.max_fock_dim)?;
    let spec = DriftSpec { phase_mismatch: phi, ..DriftSpec::lossless(1.0) };
    let mut exact = FockState::vacuum(ops.basis);
    let mut gaussian = CovarianceState::vacuum();
    println!("{:>4} {:>12} {:>12} {:>12} {:>12} {:>10}", "τ", "oracle J²", "engine J²", "oracle N", "engine N", "|⟨J⟩|");
    for k in 1..=5 {
        let tau = 0.1 * k as f64;
        exact = evolve_exact(&exact, &h, 0.1, &tol)?;
        gaussian = evolve_rk4(&gaussian, &spec, tau, 1e-4)?;
        let w = witness(&apply_phase_mismatch(&gaussian, phi), &tol)?;
        let j = spin_vector(&exact, &ops, &tol)?;
        println!(
            "{tau:>4.1} {:>12.9} {:>12.9} {:>12.9} {:>12.9} {:>10.1e}",
            expectation(&exact, &ops.j2, &tol)?,
            w.j2,
            expectation(&exact, &ops.n, &tol)?,
            w.n,
            j.iter().map(|x| x * x).sum::<f64>().sqrt()
        );
    }
    Ok(())
}
