use super::state::CovarianceState;
use crate::stokes::{ab_quadrature_transform, CMode, Mat8, Mode, Quadrature};
use crate::{Error, Result};

/// Beam-splitter loss `m → √η m + √(1−η) vacuum` on each physical mode.
///
/// `eta` is indexed in Fock order `(a_h, a_v, b_h, b_v)`. In the physical
/// basis diagonal blocks map to `ηΣ + (1−η)/2·I` and cross blocks pick up
/// `√(η_m η_n)`.
pub fn apply_loss(state: &CovarianceState, eta: [f64; 4]) -> Result<CovarianceState> {
    if let Some(bad) = eta.iter().find(|e| !(0.0..=1.0).contains(*e)) {
        return Err(Error::param("eta", format!("transmissions must lie in [0, 1], got {bad}")));
    }
    let s = ab_quadrature_transform();
    let mut amp = Mat8::zeros();
    let mut noise = Mat8::zeros();
    for m in Mode::ALL {
        let e = eta[m.fock_slot()];
        let k = m.paired_slot();
        for q in [2 * k, 2 * k + 1] {
            amp[(q, q)] = e.sqrt();
            noise[(q, q)] = 0.5 * (1.0 - e);
        }
    }
    let physical = s * state.sigma * s;
    let lossy = amp * physical * amp + noise;
    Ok(CovarianceState::new(s * lossy * s, state.t))
}

/// Applies `c₃ → e^{iφ/2} c₃`, `c₄ → e^{iφ/2} c₄`, which maps the
/// phase-mismatched source onto the ideal one. On quadratures this is
/// `x → cos(φ/2) x − sin(φ/2) p`, `p → sin(φ/2) x + cos(φ/2) p`.
pub fn apply_phase_mismatch(state: &CovarianceState, phi: f64) -> CovarianceState {
    if phi == 0.0 {
        return *state;
    }
    let (sin, cos) = (0.5 * phi).sin_cos();
    let mut r = Mat8::identity();
    for c in [CMode::C3, CMode::C4] {
        let (x, p) = (Quadrature::X(c).index(), Quadrature::P(c).index());
        r[(x, x)] = cos;
        r[(x, p)] = -sin;
        r[(p, x)] = sin;
        r[(p, p)] = cos;
    }
    CovarianceState::new(r * state.sigma * r.transpose(), state.t)
}
