use crate::stokes::{symplectic_form, Mat8, NQ};
use nalgebra::SMatrix;
use num_complex::Complex64;

/// Zero-mean Gaussian state of the four modes: the symmetrized covariance
/// `Σ_ij = ⟨{q_i, q_j}⟩/2` in c-basis quadrature order, at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceState {
    pub sigma: Mat8,
    pub t: f64,
}

impl CovarianceState {
    pub fn vacuum() -> Self {
        Self { sigma: Mat8::identity() * 0.5, t: 0.0 }
    }

    pub fn new(sigma: Mat8, t: f64) -> Self {
        Self { sigma, t }
    }

    /// Operator second moments `⟨q_i q_j⟩ = Σ_ij + (i/2) Ω_ij`.
    pub fn moment_matrix(&self) -> SMatrix<Complex64, NQ, NQ> {
        let omega = symplectic_form();
        SMatrix::from_fn(|i, j| Complex64::new(self.sigma[(i, j)], 0.5 * omega[(i, j)]))
    }

    /// Smallest eigenvalue of the Hermitian matrix `Σ + (i/2)Ω`. Negative
    /// values mean the uncertainty relation is violated.
    pub fn uncertainty_floor(&self) -> f64 {
        self.moment_matrix()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// `det(2Σ)`; equals 1 exactly for pure Gaussian states.
    pub fn purity_det(&self) -> f64 {
        (self.sigma * 2.0).determinant()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.sigma - self.sigma.transpose()).amax() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.sigma.iter().all(|v| v.is_finite())
    }
}
