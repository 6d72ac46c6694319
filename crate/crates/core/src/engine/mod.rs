//! Gaussian second-moment dynamics of the four down-converted modes.
//!
//! The operator Langevin equations are linear with delta-correlated noise, so
//! a zero-mean Gaussian state stays Gaussian and is fully described by its
//! symmetrized covariance `Σ`, which obeys `Σ̇ = AΣ + ΣAᵀ + D`.

mod channels;
mod drift;
mod evolve;
mod observables;
mod state;

pub use channels::{apply_loss, apply_phase_mismatch};
pub use drift::{drift_and_diffusion, DriftSpec};
pub use evolve::{adaptive_simpson, evolve_analytic_balanced, evolve_rk4, evolve_rk4_with};
pub(crate) use observables::checked_real;
pub use observables::{expect_j2, expect_product, expect_quadratic, witness, WitnessReport};
pub use state::CovarianceState;
