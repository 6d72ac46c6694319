use super::state::FockState;
use crate::error::NumericalFailure;
use crate::stokes::{fock::apply, SpMat};
use crate::{Error, Result, Tolerances};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

struct Lanczos {
    basis: Vec<Vec<Complex64>>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    /// `β_m` coupling the last basis vector out of the subspace; zero on
    /// breakdown (the subspace is invariant).
    leak: f64,
}

/// Lanczos with full reorthogonalization, started from unit vector `v`.
fn lanczos(h: &SpMat, v: Vec<Complex64>, max_dim: usize) -> Lanczos {
    let mut basis = vec![v];
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    loop {
        let j = basis.len() - 1;
        let mut w = apply(h, &basis[j]);
        alpha.push(dot(&basis[j], &w).re);
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let b = norm(&w);
        let scale = alpha.iter().chain(&beta).fold(1.0f64, |m, x| m.max(x.abs()));
        if b <= 1e-13 * scale {
            return Lanczos { basis, alpha, beta, leak: 0.0 };
        }
        if basis.len() == max_dim {
            return Lanczos { basis, alpha, beta, leak: b };
        }
        beta.push(b);
        w.iter_mut().for_each(|x| *x /= b);
        basis.push(w);
    }
}

/// `exp(−i T dt) e₁` for the Lanczos tridiagonal `T`.
fn small_propagator(alpha: &[f64], beta: &[f64], dt: f64) -> Vec<Complex64> {
    let m = alpha.len();
    let t = DMatrix::from_fn(m, m, |r, c| {
        if r == c {
            alpha[r]
        } else if r + 1 == c {
            beta[r]
        } else if c + 1 == r {
            beta[c]
        } else {
            0.0
        }
    });
    let eig = t.symmetric_eigen();
    (0..m)
        .map(|r| {
            (0..m)
                .map(|k| {
                    let q = eig.eigenvectors[(r, k)] * eig.eigenvectors[(0, k)];
                    Complex64::from_polar(q, -eig.eigenvalues[k] * dt)
                })
                .sum()
        })
        .collect()
}

/// `e^{−iHt} v` by Krylov subspace projection with adaptive substeps.
///
/// Each substep accepts when the a-posteriori estimate `β_m |[e^{−iTdt}e₁]_m|`
/// is below its share of `tol.krylov`.
pub fn propagate(h: &SpMat, v: &[Complex64], t: f64, tol: &Tolerances) -> Result<Vec<Complex64>> {
    if !t.is_finite() {
        return Err(Error::param("t", "must be finite"));
    }
    let mut current = v.to_vec();
    if t == 0.0 {
        return Ok(current);
    }
    let total = t.abs();
    let direction = t.signum();
    let mut done = 0.0;
    let mut dt = total;
    while done < total {
        let b0 = norm(&current);
        if b0 == 0.0 {
            return Ok(current);
        }
        let unit = current.iter().map(|x| x / b0).collect();
        let k = lanczos(h, unit, tol.krylov_max_dim);
        dt = dt.min(total - done);
        loop {
            let y = small_propagator(&k.alpha, &k.beta, direction * dt);
            let err = k.leak * y.last().map_or(0.0, |c| c.norm());
            if err <= tol.krylov * dt / total || k.leak == 0.0 {
                let mut next = vec![Complex64::new(0.0, 0.0); current.len()];
                for (coef, vec) in y.iter().zip(&k.basis) {
                    let c = coef * b0;
                    next.iter_mut().zip(vec).for_each(|(n, x)| *n += c * x);
                }
                current = next;
                done += dt;
                if err < 0.1 * tol.krylov * dt / total {
                    dt *= 1.5;
                }
                break;
            }
            dt *= 0.5;
            if dt < total * 1e-12 {
                return Err(Error::Numerical(NumericalFailure::KrylovNotConverged {
                    residual: err,
                }));
            }
        }
    }
    Ok(current)
}

/// Evolves a pure state under Hermitian `h` for time `t`.
pub fn evolve_exact(state: &FockState, h: &SpMat, t: f64, tol: &Tolerances) -> Result<FockState> {
    if h.rows() != state.basis.dim() {
        return Err(Error::param("hamiltonian", "dimension does not match state"));
    }
    Ok(FockState { basis: state.basis, amplitudes: propagate(h, &state.amplitudes, t, tol)? })
}
