use crate::engine::{
    apply_loss, apply_phase_mismatch, evolve_rk4, expect_j2, expect_quadratic, CovarianceState,
    DriftSpec,
};
use crate::oracle::{
    apply_loss_channel, build_hamiltonian, build_ideal_state, check_j_bound, evolve_exact,
    expectation, random_spin_state, seeded_rng, FockDensity, FockExpect, FockState,
};
use crate::stokes::{build_fock_operators, number_quadratic_form, FockOperatorSet};
use crate::witness::{extremal_product, loss_transform_analytic, sample_separable, SeparableGenerator, SEPARABLE_BOUND};
use crate::{Result, Tolerances};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleSuite {
    /// Gaussian engine against exact Fock evolution and loss channels.
    EngineVsOracle,
    /// Sampled separable states never undercut the bound.
    Separability,
    /// `|⟨J⟩| ≤ √(⟨J²⟩ + ¼) − ½` on random states.
    JBound,
    /// Post-hoc loss on the ideal state against the analytic transform.
    LossLaw,
    All,
}

impl OracleSuite {
    pub fn name(self) -> &'static str {
        match self {
            Self::EngineVsOracle => "engine_vs_oracle",
            Self::Separability => "separability",
            Self::JBound => "j_bound",
            Self::LossLaw => "loss_law",
            Self::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        [Self::EngineVsOracle, Self::Separability, Self::JBound, Self::LossLaw, Self::All]
            .into_iter()
            .find(|s| s.name() == name)
    }
}

/// Knobs of the property suites. `None` picks each suite's default.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OracleCheckOptions {
    pub seed: u64,
    pub cutoff: Option<usize>,
    pub samples: Option<usize>,
    pub tau: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyLine {
    pub suite: &'static str,
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl PropertyLine {
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

impl fmt::Display for PropertyLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{} deviation={:.3e} tolerance={:.1e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            self.deviation,
            self.tolerance
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OracleReport {
    pub lines: Vec<PropertyLine>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(PropertyLine::passed)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

pub fn run_oracle_check(suite: OracleSuite, opts: &OracleCheckOptions, tol: &Tolerances) -> Result<OracleReport> {
    let mut report = OracleReport::default();
    let suites = match suite {
        OracleSuite::All => vec![
            OracleSuite::EngineVsOracle,
            OracleSuite::Separability,
            OracleSuite::JBound,
            OracleSuite::LossLaw,
        ],
        s => vec![s],
    };
    for s in suites {
        let lines = match s {
            OracleSuite::EngineVsOracle => engine_vs_oracle(opts, tol)?,
            OracleSuite::Separability => separability(opts, tol)?,
            OracleSuite::JBound => j_bound(opts, tol)?,
            OracleSuite::LossLaw => loss_law(opts, tol)?,
            OracleSuite::All => unreachable!(),
        };
        report.lines.extend(lines);
    }
    Ok(report)
}

/// Relative deviation from `b`, absolute where `b` is exactly zero.
fn relative(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

/// Engine `(⟨N⟩, ⟨J²⟩)`.
fn engine_moments(state: &CovarianceState, tol: &Tolerances) -> Result<(f64, f64)> {
    Ok((expect_quadratic(state, &number_quadratic_form()), expect_j2(state, tol)?))
}

fn oracle_moments<S: FockExpect>(state: &S, ops: &FockOperatorSet, tol: &Tolerances) -> Result<(f64, f64)> {
    Ok((expectation(state, &ops.n, tol)?, expectation(state, &ops.j2, tol)?))
}

/// Compares `⟨N⟩` relatively and `⟨J²⟩/⟨N⟩` absolutely.
fn compare(name: &str, engine: (f64, f64), oracle: (f64, f64), tolerance: f64) -> [PropertyLine; 2] {
    let suite = OracleSuite::EngineVsOracle.name();
    [
        PropertyLine { suite, name: format!("{name}/N"), deviation: relative(engine.0, oracle.0), tolerance },
        PropertyLine {
            suite,
            name: format!("{name}/ratio"),
            deviation: (engine.1 / engine.0 - oracle.1 / oracle.0).abs(),
            tolerance,
        },
    ]
}

/// Pure-state evolution at `τ` (default 0.5, cutoff 12) with and without
/// source mismatch, then mixed states after per-mode loss at `τ = 0.2`,
/// cutoff 6.
fn engine_vs_oracle(opts: &OracleCheckOptions, tol: &Tolerances) -> Result<Vec<PropertyLine>> {
    const TOLERANCE: f64 = 1e-6;
    let tau = opts.tau.unwrap_or(0.5);
    let cutoff = opts.cutoff.unwrap_or(12);
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let mut lines = Vec::new();

    let cases = [("ideal", 0.0, 1.0), ("phase_mismatch", 0.3, 1.0), ("amplitude_mismatch", 0.0, 0.8)];
    let results: Vec<Result<[PropertyLine; 2]>> = cases
        .par_iter()
        .map(|&(name, phi, f)| {
            let spec = DriftSpec { phase_mismatch: phi, amplitude_ratio: f, ..DriftSpec::lossless(1.0) };
            let engine = apply_phase_mismatch(&evolve_rk4(&CovarianceState::vacuum(), &spec, tau, 1e-4)?, phi);
            let h = build_hamiltonian(1.0, phi, f, cutoff, tol.max_fock_dim)?;
            let exact = evolve_exact(&FockState::vacuum(ops.basis), &h, tau, tol)?;
            Ok(compare(&format!("{name}_tau{tau}"), engine_moments(&engine, tol)?, oracle_moments(&exact, &ops, tol)?, TOLERANCE))
        })
        .collect();
    for r in results {
        lines.extend(r?);
    }

    let (loss_tau, loss_cutoff) = (0.2, 6);
    let small = build_fock_operators(loss_cutoff, tol.max_fock_dim)?;
    let rho = FockDensity::from_pure(&build_ideal_state(loss_tau, loss_cutoff, tol.max_fock_dim)?);
    let gaussian = evolve_rk4(&CovarianceState::vacuum(), &DriftSpec::lossless(1.0), loss_tau, 1e-4)?;
    for eta in [[0.5; 4], [0.9, 0.9, 0.6, 0.6], [0.9, 0.7, 0.8, 0.6]] {
        let engine = engine_moments(&apply_loss(&gaussian, eta)?, tol)?;
        let oracle = oracle_moments(&apply_loss_channel(&rho, eta)?, &small, tol)?;
        lines.extend(compare(&format!("loss_{eta:?}"), engine, oracle, TOLERANCE));
    }
    Ok(lines)
}

/// Samples every generator (default 10⁴ states each, cutoff 4) and the
/// extremal product family.
fn separability(opts: &OracleCheckOptions, tol: &Tolerances) -> Result<Vec<PropertyLine>> {
    const SLACK: f64 = 1e-9;
    let cutoff = opts.cutoff.unwrap_or(4);
    let count = opts.samples.unwrap_or(10_000);
    let suite = OracleSuite::Separability.name();
    let mut lines = Vec::new();
    for generator in SeparableGenerator::ALL {
        let samples = sample_separable(generator, opts.seed, count, cutoff, tol)?;
        let min = samples.iter().map(|s| s.ratio).fold(f64::INFINITY, f64::min);
        lines.push(PropertyLine {
            suite,
            name: format!("{}_min_ratio_below_bound", generator.name()),
            deviation: (SEPARABLE_BOUND - min).max(0.0),
            tolerance: SLACK,
        });
    }
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let mut worst: f64 = 0.0;
    for photons in 1..=cutoff {
        let (n, j2) = oracle_moments(&extremal_product(photons, ops.basis), &ops, tol)?;
        worst = worst.max((j2 / n - SEPARABLE_BOUND).abs());
    }
    lines.push(PropertyLine { suite, name: "extremal_family_at_bound".into(), deviation: worst, tolerance: SLACK });
    Ok(lines)
}

/// Default 10³ random states at cutoff 4.
fn j_bound(opts: &OracleCheckOptions, tol: &Tolerances) -> Result<Vec<PropertyLine>> {
    let cutoff = opts.cutoff.unwrap_or(4);
    let count = opts.samples.unwrap_or(1000);
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let excess: Vec<Result<f64>> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let state = random_spin_state(ops.basis, &mut seeded_rng(opts.seed, i));
            let check = check_j_bound(&state, &ops, tol)?;
            Ok(check.lhs - check.rhs)
        })
        .collect();
    let mut worst: f64 = 0.0;
    for e in excess {
        worst = worst.max(e?);
    }
    Ok(vec![PropertyLine {
        suite: OracleSuite::JBound.name(),
        name: format!("{count}_random_states"),
        deviation: worst,
        tolerance: 1e-10,
    }])
}

/// Ideal state at `τ` (default 0.3, cutoff 6): balanced transmissions give
/// ratio `3(1−η)/4`, a 5×5 arm grid follows the analytic transform.
fn loss_law(opts: &OracleCheckOptions, tol: &Tolerances) -> Result<Vec<PropertyLine>> {
    const TOLERANCE: f64 = 1e-6;
    let tau = opts.tau.unwrap_or(0.3);
    let cutoff = opts.cutoff.unwrap_or(6);
    let suite = OracleSuite::LossLaw.name();
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    let rho = FockDensity::from_pure(&build_ideal_state(tau, cutoff, tol.max_fock_dim)?);
    let (n0, _) = oracle_moments(&rho, &ops, tol)?;
    let j2_arm = expectation(&rho, &ops.ja_sq, tol)?;

    let mut lines = Vec::new();
    let mut worst: f64 = 0.0;
    for eta in [0.2, 1.0 / 3.0, 0.5, 0.9] {
        let (n, j2) = oracle_moments(&apply_loss_channel(&rho, [eta; 4])?, &ops, tol)?;
        worst = worst.max((j2 / n - 0.75 * (1.0 - eta)).abs());
    }
    lines.push(PropertyLine { suite, name: "balanced_ratio".into(), deviation: worst, tolerance: TOLERANCE });

    let grid = [0.2, 0.4, 0.6, 0.8, 1.0];
    let pairs: Vec<(f64, f64)> = grid.iter().flat_map(|&a| grid.iter().map(move |&b| (a, b))).collect();
    let devs: Vec<Result<f64>> = pairs
        .par_iter()
        .map(|&(ea, eb)| {
            let (n, j2) = oracle_moments(&apply_loss_channel(&rho, [ea, ea, eb, eb])?, &ops, tol)?;
            let (j2_want, n_want) = loss_transform_analytic(j2_arm, n0, ea, eb)?;
            Ok(relative(j2, j2_want).max(relative(n, n_want)))
        })
        .collect();
    let mut worst: f64 = 0.0;
    for d in devs {
        worst = worst.max(d?);
    }
    lines.push(PropertyLine { suite, name: "arm_grid_5x5".into(), deviation: worst, tolerance: TOLERANCE });
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [OracleSuite::EngineVsOracle, OracleSuite::JBound, OracleSuite::All] {
            assert_eq!(OracleSuite::parse(s.name()), Some(s));
        }
        assert_eq!(OracleSuite::parse("nope"), None);
    }

    #[test]
    fn small_j_bound_suite_passes() {
        let opts = OracleCheckOptions { samples: Some(50), cutoff: Some(3), ..Default::default() };
        let report = run_oracle_check(OracleSuite::JBound, &opts, &Tolerances::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().starts_with("PASS j_bound/"));
    }
}
