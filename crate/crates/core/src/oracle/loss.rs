use super::state::FockDensity;
use crate::stokes::Mode;
use crate::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;

/// `c_k(n)` with `K_k |n+k⟩ = c_k(n) |n⟩`, i.e. `√(C(n+k, k) ηⁿ (1−η)ᵏ)`.
fn kraus_table(cutoff: usize, eta: f64) -> Vec<Vec<f64>> {
    (0..=cutoff)
        .map(|n| {
            let mut binom = 1.0f64;
            (0..=cutoff - n)
                .map(|k| {
                    if k > 0 {
                        binom *= (n + k) as f64 / k as f64;
                    }
                    (binom * eta.powi(n as i32) * (1.0 - eta).powi(k as i32)).sqrt()
                })
                .collect()
        })
        .collect()
}

fn damp_mode(rho: &FockDensity, mode: Mode, eta: f64) -> FockDensity {
    let basis = rho.basis;
    let dim = basis.dim();
    let levels = basis.cutoff() + 1;
    let stride = basis.stride(mode);
    let table = kraus_table(basis.cutoff(), eta);
    let occ = |i: usize| (i / stride) % levels;
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    data.par_chunks_mut(dim).enumerate().for_each(|(r, row)| {
        let nr = occ(r);
        for (s, out) in row.iter_mut().enumerate() {
            let ns = occ(s);
            let kmax = basis.cutoff() - nr.max(ns);
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..=kmax {
                let w = table[nr][k] * table[ns][k];
                if w != 0.0 {
                    acc += rho.data[(r + k * stride) * dim + s + k * stride] * w;
                }
            }
            *out = acc;
        }
    });
    FockDensity { basis, data }
}

/// Independent amplitude damping of each mode with transmissions `eta`
/// (Fock order `a_h, a_v, b_h, b_v`), Kraus operators
/// `K_k = √((1−η)ᵏ/k!) η^{n̂/2} cᵏ` summed up to `k = cutoff`.
pub fn apply_loss_channel(rho: &FockDensity, eta: [f64; 4]) -> Result<FockDensity> {
    if let Some(bad) = eta.iter().find(|e| !(0.0..=1.0).contains(*e)) {
        return Err(Error::param("eta", format!("transmissions must lie in [0, 1], got {bad}")));
    }
    let before = rho.trace();
    let mut out = rho.clone();
    for mode in Mode::ALL {
        let e = eta[mode.fock_slot()];
        if e != 1.0 {
            out = damp_mode(&out, mode, e);
        }
    }
    let drift = (out.trace() - before).abs();
    if drift > 1e-10 * before.max(1.0) {
        return Err(Error::Numerical(crate::error::NumericalFailure::TraceDrift { drift }));
    }
    Ok(out)
}
