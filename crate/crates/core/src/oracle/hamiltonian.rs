use crate::stokes::fock::{adjoint, scale};
use crate::stokes::{FockBasis, Mode, SpMat};
use crate::{Error, Result};
use num_complex::Complex64;

/// `H = iκ(a_h† b_v† − f e^{iφ} a_v† b_h†) + h.c.` on the truncated space.
pub fn build_hamiltonian(
    kappa: f64,
    phi: f64,
    amplitude_ratio: f64,
    cutoff: usize,
    max_dim: usize,
) -> Result<SpMat> {
    if !kappa.is_finite() || !phi.is_finite() || !amplitude_ratio.is_finite() {
        return Err(Error::param("hamiltonian", "parameters must be finite"));
    }
    let basis = FockBasis::new(cutoff, max_dim)?;
    let first = basis.pair_create(Mode::Ah, Mode::Bv);
    let second = basis.pair_create(Mode::Av, Mode::Bh);
    let i_kappa = Complex64::new(0.0, kappa);
    let creation = &scale(&first, i_kappa)
        - &scale(&second, i_kappa * Complex64::from_polar(amplitude_ratio, phi));
    Ok(&creation + &adjoint(&creation))
}
