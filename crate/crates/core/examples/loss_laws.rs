//! Detector transmission applied to the ideal state: the balanced law
//! 3(1−η)/4 with its critical point η = ⅓, and unequal arm transmissions
//! against the analytic transform.

use entlaser::engine::{apply_loss, evolve_analytic_balanced, witness, DriftSpec};
use entlaser::oracle::{apply_loss_channel, build_ideal_state, expectation, FockDensity};
use entlaser::stokes::build_fock_operators;
use entlaser::witness::loss_transform_analytic;
use entlaser::Tolerances;

fn main() -> entlaser::Result<()> {
    let tol = Tolerances::default();
    let ideal = evolve_analytic_balanced(&DriftSpec::lossless(1.0), 2.0, &tol)?;
    println!("balanced transmission, τ = 2 (⟨N⟩ = {:.2})", witness(&ideal, &tol)?.n);
    for eta in [0.2, 1.0 / 3.0, 0.5, 0.9] {
        let w = witness(&apply_loss(&ideal, [eta; 4])?, &tol)?;
        println!(
            "  η = {eta:.4}: ratio {:.6} (3(1−η)/4 = {:.6}) entangled: {}",
            w.ratio.unwrap(),
            0.75 * (1.0 - eta),
            w.entangled
        );
    }

    let ops = build_fock_operators(6, tol.max_fock_dim)?;
    let rho = FockDensity::from_pure(&build_ideal_state(0.3, 6, tol.max_fock_dim)?);
    let n = expectation(&rho, &ops.n, &tol)?;
    let j2_arm = expectation(&rho, &ops.ja_sq, &tol)?;
    println!("\narm transmissions on the Fock oracle, τ = 0.3");
    println!("{:>5} {:>5} {:>14} {:>14}", "η_A", "η_B", "channel J²", "analytic J²");
    for (ea, eb) in [(0.9, 0.9), (0.9, 0.5), (1.0, 0.2), (0.4, 0.8)] {
        let lossy = apply_loss_channel(&rho, [ea, ea, eb, eb])?;
        let (want, _) = loss_transform_analytic(j2_arm, n, ea, eb)?;
        println!("{ea:>5} {eb:>5} {:>14.10} {:>14.10}", expectation(&lossy, &ops.j2, &tol)?, want);
    }
    Ok(())
}
