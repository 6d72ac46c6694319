/// Numerical tolerances and budgets used across the crate.
///
/// Every default lives here; callers override individual fields with
/// struct-update syntax.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Default fixed RK4 step, in passes.
    pub rk4_step: f64,
    /// Absolute target of the adaptive Simpson rule.
    pub quadrature_abs: f64,
    /// Relative target of the adaptive Simpson rule.
    pub quadrature_rel: f64,
    /// Maximum recursion depth of the adaptive Simpson rule.
    pub quadrature_max_depth: u32,
    /// Error target of the Krylov propagator over the whole interval.
    pub krylov: f64,
    /// Largest Krylov subspace built per substep.
    pub krylov_max_dim: usize,
    /// Allowed imaginary part of an expectation value of a Hermitian operator.
    pub imaginary_residue: f64,
    /// Smallest eigenvalue of Σ + iΩ/2 still accepted as physical.
    pub uncertainty_floor: f64,
    /// ⟨N⟩ at or below this is treated as vacuum by the witness.
    pub vacuum_photons: f64,
    /// A ratio must undercut ½ by more than this to count as entangled.
    pub boundary: f64,
    /// Largest truncated Fock dimension (basis states) the oracle will build.
    pub max_fock_dim: usize,
    /// Largest number of runs a sweep may request.
    pub max_sweep_runs: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rk4_step: 1e-3,
            quadrature_abs: 1e-10,
            quadrature_rel: 1e-12,
            quadrature_max_depth: 48,
            krylov: 1e-10,
            krylov_max_dim: 30,
            imaginary_residue: 1e-10,
            uncertainty_floor: -1e-9,
            vacuum_photons: 1e-12,
            boundary: 1e-10,
            max_fock_dim: 1_000_000,
            max_sweep_runs: 10_000,
        }
    }
}
