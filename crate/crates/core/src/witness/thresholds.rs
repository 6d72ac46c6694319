use crate::{Error, Result};
use serde::Serialize;

/// Order-of-magnitude tolerances on each imperfection for a target ⟨N⟩.
///
/// The conditions are of the "≲" kind and are reported as equalities with
/// no safety factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub n_mean: f64,
    pub kappa: f64,
    /// `2√2/√⟨N⟩`
    pub delta_eta_max: f64,
    /// `4/√⟨N⟩`
    pub delta_lambda_over_kappa_max: f64,
    /// `κ · 4/√⟨N⟩`
    pub delta_lambda_max: f64,
    /// `4/(√3·√⟨N⟩)`, from correction `φ²⟨N⟩/16` reaching ½ up to a factor.
    pub phi_max_sqrt: f64,
    /// `4/(√3·⟨N⟩)`, the bound as literally printed.
    pub phi_max_linear: f64,
    /// Balanced transmission above which the ideal state stays certifiable.
    pub eta_critical: f64,
}

pub fn thresholds(n_mean: f64, kappa: f64) -> Result<ThresholdReport> {
    if !(n_mean > 0.0) || !n_mean.is_finite() {
        return Err(Error::param("n_mean", format!("must be positive, got {n_mean}")));
    }
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(Error::param("kappa", format!("must be positive, got {kappa}")));
    }
    let root = n_mean.sqrt();
    let sqrt3 = 3f64.sqrt();
    Ok(ThresholdReport {
        n_mean,
        kappa,
        delta_eta_max: 2.0 * 2f64.sqrt() / root,
        delta_lambda_over_kappa_max: 4.0 / root,
        delta_lambda_max: kappa * 4.0 / root,
        phi_max_sqrt: 4.0 / (sqrt3 * root),
        phi_max_linear: 4.0 / (sqrt3 * n_mean),
        eta_critical: 1.0 / 3.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn million_photons() {
        let r = thresholds(1e6, 1.0).unwrap();
        assert!((r.phi_max_sqrt - 2.3094e-3).abs() < 1e-7);
        assert!(r.phi_max_sqrt < std::f64::consts::PI / 1000.0);
        assert!((r.delta_eta_max - 2.8284e-3).abs() < 1e-7);
        assert_eq!(r.delta_lambda_over_kappa_max, 4e-3);
    }

    #[test]
    fn small_n() {
        assert!((thresholds(8.0, 1.0).unwrap().delta_eta_max - 1.0).abs() < 1e-15);
        assert_eq!(thresholds(4.0, 1.0).unwrap().delta_lambda_over_kappa_max, 2.0);
        assert_eq!(thresholds(4.0, 0.5).unwrap().delta_lambda_max, 1.0);
    }

    #[test]
    fn monotone_in_n() {
        let mut prev = thresholds(1.0, 1.0).unwrap();
        for k in 1..40 {
            let r = thresholds(1.5f64.powi(k), 1.0).unwrap();
            assert!(r.delta_eta_max <= prev.delta_eta_max);
            assert!(r.delta_lambda_over_kappa_max <= prev.delta_lambda_over_kappa_max);
            assert!(r.phi_max_sqrt <= prev.phi_max_sqrt);
            assert!(r.phi_max_linear <= prev.phi_max_linear);
            assert!(r.phi_max_linear > 0.0);
            prev = r;
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(thresholds(0.0, 1.0).is_err());
        assert!(thresholds(1.0, 0.0).is_err());
    }
}
