use super::state::FockState;
use crate::stokes::FockBasis;
use crate::{Error, Result};
use num_complex::Complex64;

/// The lossless source output `e^{−iHt}|0⟩` at `τ = κt`,
///
/// ```text
/// Σₙ Σₘ (−1)^m tanhⁿτ / cosh²τ · |n−m, m, m, n−m⟩
/// ```
///
/// keeping only complete photon-number blocks `n ≤ cutoff`. Each kept block
/// is an exact singlet, so the truncation only lowers the norm.
pub fn build_ideal_state(tau: f64, cutoff: usize, max_dim: usize) -> Result<FockState> {
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::param("tau", format!("must be ≥ 0, got {tau}")));
    }
    let basis = FockBasis::new(cutoff, max_dim)?;
    let t = tau.tanh();
    let c2 = tau.cosh().powi(2);
    let mut state = FockState::zero(basis);
    for n in 0..=cutoff {
        let amp = t.powi(n as i32) / c2;
        for m in 0..=n {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            state.amplitudes[basis.index([n - m, m, m, n - m])] = Complex64::new(sign * amp, 0.0);
        }
    }
    let deficit = state.truncation_deficit();
    if deficit > 1e-9 {
        log::warn!("ideal state at tau={tau} truncated at cutoff {cutoff}: norm deficit {deficit:e}");
    }
    Ok(state)
}

/// Normalized `n`-photon-pair singlet `|ψⁿ₋⟩`.
pub fn singlet_block(basis: FockBasis, n: usize) -> Result<FockState> {
    if n > basis.cutoff() {
        return Err(Error::param("n", format!("{n} exceeds cutoff {}", basis.cutoff())));
    }
    let mut state = FockState::zero(basis);
    let amp = 1.0 / ((n + 1) as f64).sqrt();
    for m in 0..=n {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        state.amplitudes[basis.index([n - m, m, m, n - m])] = Complex64::new(sign * amp, 0.0);
    }
    Ok(state)
}

/// Smallest cutoff at which the photons lost with the discarded blocks of
/// the ideal state are below `rel_tol · 4 sinh²τ`.
pub fn ideal_cutoff(tau: f64, rel_tol: f64) -> usize {
    let t2 = tau.tanh().powi(2);
    let norm = tau.cosh().powi(4);
    let total = 4.0 * tau.sinh().powi(2);
    if total == 0.0 {
        return 1;
    }
    // block n carries probability (n+1) t^{2n}/cosh⁴τ and 2n photons
    let term = |n: usize| (n + 1) as f64 * t2.powi(n as i32) / norm * 2.0 * n as f64;
    let mut cutoff = 1;
    loop {
        let mut tail = 0.0;
        let mut n = cutoff + 1;
        loop {
            let x = term(n);
            tail += x;
            if x < 1e-18 * total || n > 10_000 {
                break;
            }
            n += 1;
        }
        if tail < rel_tol * total {
            return cutoff;
        }
        cutoff += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::expectation;
    use crate::stokes::build_fock_operators;
    use crate::Tolerances;

    #[test]
    fn tau_zero_is_vacuum() {
        let s = build_ideal_state(0.0, 4, 10_000).unwrap();
        assert_eq!(s, FockState::vacuum(s.basis));
    }

    #[test]
    fn photon_number_by_summation() {
        // Independent summation: Σₙ (n+1) tanh^{2n}τ / cosh⁴τ · 2n → 4 sinh²τ
        for tau in [0.2f64, 0.5, 0.8] {
            let t = tau.tanh();
            let sum: f64 = (0..2000)
                .map(|n| (n + 1) as f64 * t.powi(2 * n) / tau.cosh().powi(4) * 2.0 * n as f64)
                .sum();
            assert!((sum - 4.0 * tau.sinh().powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_and_photons() {
        let tol = Tolerances::default();
        let ops = build_fock_operators(10, 100_000).unwrap();
        let s = build_ideal_state(0.3, 10, 100_000).unwrap();
        assert!(s.truncation_deficit() < 1e-9);
        let n = expectation(&s, &ops.n, &tol).unwrap();
        assert!((n / (4.0 * 0.3f64.sinh().powi(2)) - 1.0).abs() < 1e-8);
        assert!(expectation(&s, &ops.j2, &tol).unwrap().abs() < 1e-14);
    }

    #[test]
    fn cutoff_rule() {
        assert!(ideal_cutoff(0.3, 1e-9) <= 12);
        let c = ideal_cutoff(0.8, 1e-7);
        assert!(c > 12 && c < 40, "{c}");
    }
}
