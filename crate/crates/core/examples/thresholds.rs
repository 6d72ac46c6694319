//! Imperfection tolerances for a range of target photon numbers.

use entlaser::witness::thresholds;

fn main() -> entlaser::Result<()> {
    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "⟨N⟩", "Δη", "Δλ/κ", "φ (√N)", "φ (N)");
    for exp in 2..=8 {
        let r = thresholds(10f64.powi(exp), 1.0)?;
        println!(
            "{:>8.0e} {:>10.3e} {:>10.3e} {:>10.3e} {:>10.3e}",
            r.n_mean, r.delta_eta_max, r.delta_lambda_over_kappa_max, r.phi_max_sqrt, r.phi_max_linear
        );
    }
    Ok(())
}
