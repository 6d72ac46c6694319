use super::state::{Ensemble, FockDensity, FockState};
use crate::engine::checked_real;
use crate::stokes::{fock::sandwich, FockBasis, FockOperatorSet, SpMat};
use crate::{Error, Result, Tolerances};
use num_complex::Complex64;

/// A state that can be traced against a sparse operator.
pub trait FockExpect {
    fn basis(&self) -> FockBasis;
    /// `Tr(ρ O)` without normalization.
    fn raw_expect(&self, op: &SpMat) -> Complex64;
    /// `Tr ρ`.
    fn weight(&self) -> f64;
}

impl FockExpect for FockState {
    fn basis(&self) -> FockBasis {
        self.basis
    }
    fn raw_expect(&self, op: &SpMat) -> Complex64 {
        sandwich(op, &self.amplitudes)
    }
    fn weight(&self) -> f64 {
        self.norm_sqr()
    }
}

impl FockExpect for FockDensity {
    fn basis(&self) -> FockBasis {
        self.basis
    }
    fn raw_expect(&self, op: &SpMat) -> Complex64 {
        let dim = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, row) in op.outer_iterator().enumerate() {
            for (c, &v) in row.iter() {
                acc += v * self.data[c * dim + r];
            }
        }
        acc
    }
    fn weight(&self) -> f64 {
        self.trace()
    }
}

impl FockExpect for Ensemble {
    fn basis(&self) -> FockBasis {
        self.basis
    }
    fn raw_expect(&self, op: &SpMat) -> Complex64 {
        self.weights.iter().zip(&self.states).map(|(w, s)| s.raw_expect(op) * *w).sum()
    }
    fn weight(&self) -> f64 {
        self.weights.iter().zip(&self.states).map(|(w, s)| w * s.norm_sqr()).sum()
    }
}

/// `Tr(ρO)/Tr(ρ)`, i.e. the expectation conditioned on the truncated space.
/// Fails if the imaginary part exceeds tolerance.
pub fn expectation<S: FockExpect + ?Sized>(state: &S, op: &SpMat, tol: &Tolerances) -> Result<f64> {
    if op.rows() != state.basis().dim() {
        return Err(Error::param(
            "operator",
            format!("dimension {} does not match state dimension {}", op.rows(), state.basis().dim()),
        ));
    }
    let w = state.weight();
    if !(w > 0.0) {
        return Err(Error::param("state", "zero norm"));
    }
    checked_real(state.raw_expect(op) / w, tol)
}

/// `(⟨J_x⟩, ⟨J_y⟩, ⟨J_z⟩)`.
pub fn spin_vector<S: FockExpect + ?Sized>(
    state: &S,
    ops: &FockOperatorSet,
    tol: &Tolerances,
) -> Result<[f64; 3]> {
    Ok([
        expectation(state, &ops.j[0], tol)?,
        expectation(state, &ops.j[1], tol)?,
        expectation(state, &ops.j[2], tol)?,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JBoundCheck {
    /// `|⟨J⟩|`
    pub lhs: f64,
    /// `√(⟨J²⟩ + ¼) − ½`
    pub rhs: f64,
    pub ok: bool,
}

/// Checks `|⟨J⟩| ≤ √(⟨J²⟩ + ¼) − ½` with slack `1e-10`.
pub fn check_j_bound<S: FockExpect + ?Sized>(
    state: &S,
    ops: &FockOperatorSet,
    tol: &Tolerances,
) -> Result<JBoundCheck> {
    let [x, y, z] = spin_vector(state, ops, tol)?;
    let lhs = (x * x + y * y + z * z).sqrt();
    let j2 = expectation(state, &ops.j2, tol)?;
    let rhs = (j2 + 0.25).sqrt() - 0.5;
    Ok(JBoundCheck { lhs, rhs, ok: lhs <= rhs + 1e-10 })
}
