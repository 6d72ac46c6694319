use super::state::CovarianceState;
use crate::error::NumericalFailure;
use crate::stokes::{jay_quadratic_forms, number_quadratic_form, QuadraticForm, NQ};
use crate::witness::{criterion, Verdict};
use crate::{Error, Result, Tolerances};
use nalgebra::SMatrix;
use num_complex::Complex64;

/// `⟨½ qᵀGq + c₀⟩ = ½ tr(GΣ) + c₀` for a zero-mean state.
pub fn expect_quadratic(state: &CovarianceState, form: &QuadraticForm) -> f64 {
    0.5 * (form.matrix * state.sigma).trace() + form.constant
}

/// `⟨O₁ O₂⟩` for two quadratic observables on a zero-mean Gaussian state.
///
/// Quartic moments are expanded by Wick pairing over the ordered two-point
/// function `M = Σ + (i/2)Ω`:
/// `⟨q_a q_b q_c q_d⟩ = M_ab M_cd + M_ac M_bd + M_ad M_bc`.
/// The result is complex when the observables do not commute.
pub fn expect_product(
    state: &CovarianceState,
    first: &QuadraticForm,
    second: &QuadraticForm,
) -> Complex64 {
    let m = state.moment_matrix();
    let g1: SMatrix<Complex64, NQ, NQ> = first.matrix.map(Complex64::from);
    let g2: SMatrix<Complex64, NQ, NQ> = second.matrix.map(Complex64::from);
    let pair = |g: &SMatrix<Complex64, NQ, NQ>| g.component_mul(&m).sum();
    let crossed = m * g2 * m.transpose();
    let mut quartic = pair(&g1) * pair(&g2);
    for a in 0..NQ {
        for b in 0..NQ {
            quartic += g1[(a, b)] * (crossed[(a, b)] + crossed[(b, a)]);
        }
    }
    let mean1 = expect_quadratic(state, first);
    let mean2 = expect_quadratic(state, second);
    // ⟨(Q₁ + c₁)(Q₂ + c₂)⟩ with ⟨Q_i⟩ = mean_i − c_i
    0.25 * quartic + first.constant * (mean2 - second.constant)
        + second.constant * (mean1 - first.constant)
        + first.constant * second.constant
}

pub(crate) fn checked_real(value: Complex64, tol: &Tolerances) -> Result<f64> {
    let residue = value.im.abs();
    if residue > tol.imaginary_residue * value.re.abs().max(1.0) {
        return Err(Error::Numerical(NumericalFailure::ImaginaryResidue { residue }));
    }
    Ok(value.re)
}

/// `⟨J²⟩ = Σᵢ ⟨Jᵢ²⟩` on a zero-mean Gaussian state.
pub fn expect_j2(state: &CovarianceState, tol: &Tolerances) -> Result<f64> {
    let (jz, jx, jy) = jay_quadratic_forms();
    let total = [jz, jx, jy]
        .iter()
        .map(|form| expect_product(state, form, form))
        .sum::<Complex64>();
    checked_real(total, tol)
}

/// The polarization entanglement witness evaluated on one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessReport {
    pub j2: f64,
    pub n: f64,
    /// `⟨J²⟩/⟨N⟩`; `None` for the vacuum.
    pub ratio: Option<f64>,
    /// `½ − ratio`.
    pub margin: Option<f64>,
    pub entangled: bool,
}

impl WitnessReport {
    pub fn from_moments(j2: f64, n: f64, tol: &Tolerances) -> Result<Self> {
        let outcome = criterion(j2, n, tol)?;
        Ok(Self {
            j2,
            n,
            ratio: outcome.ratio,
            margin: outcome.margin,
            entangled: outcome.verdict == Verdict::Entangled,
        })
    }
}

pub fn witness(state: &CovarianceState, tol: &Tolerances) -> Result<WitnessReport> {
    let j2 = expect_j2(state, tol)?;
    let n = expect_quadratic(state, &number_quadratic_form());
    WitnessReport::from_moments(j2, n.max(0.0), tol)
}
