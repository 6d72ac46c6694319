use super::drift::{drift_and_diffusion, DriftSpec};
use super::state::CovarianceState;
use crate::error::NumericalFailure;
use crate::stokes::{CMode, Mat8, Quadrature};
use crate::{Error, Result, Tolerances};

fn moment_rhs(spec: &DriftSpec, t: f64, sigma: &Mat8) -> Mat8 {
    let (a, d) = drift_and_diffusion(spec, t);
    let a_sigma = a * sigma;
    a_sigma + a_sigma.transpose() + d
}

/// Integrates `Σ̇ = AΣ + ΣAᵀ + D` with classical fixed-step RK4.
///
/// The interval is split into the smallest number of equal steps no longer
/// than `h`. `Σ` is symmetrized after every step.
pub fn evolve_rk4(
    state: &CovarianceState,
    spec: &DriftSpec,
    t_end: f64,
    h: f64,
) -> Result<CovarianceState> {
    evolve_rk4_with(state, spec, t_end, h, |_| {})
}

/// As [`evolve_rk4`], calling `observe` on the state after every step.
pub fn evolve_rk4_with(
    state: &CovarianceState,
    spec: &DriftSpec,
    t_end: f64,
    h: f64,
    mut observe: impl FnMut(&CovarianceState),
) -> Result<CovarianceState> {
    spec.validate()?;
    let span = t_end - state.t;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::param("step", format!("must be positive and finite, got {h}")));
    }
    if span < 0.0 {
        return Err(Error::param(
            "t_end",
            format!("{t_end} precedes the state time {}", state.t),
        ));
    }
    if span == 0.0 {
        return Ok(*state);
    }
    if h > span {
        return Err(Error::param(
            "step",
            format!("{h} exceeds the integration span {span}"),
        ));
    }
    let n = (span / h - 1e-9).ceil().max(1.0) as usize;
    let dt = span / n as f64;
    let mut sigma = state.sigma;
    for k in 0..n {
        let t = state.t + k as f64 * dt;
        let k1 = moment_rhs(spec, t, &sigma);
        let k2 = moment_rhs(spec, t + 0.5 * dt, &(sigma + k1 * (0.5 * dt)));
        let k3 = moment_rhs(spec, t + 0.5 * dt, &(sigma + k2 * (0.5 * dt)));
        let k4 = moment_rhs(spec, t + dt, &(sigma + k3 * dt));
        sigma += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        sigma = (sigma + sigma.transpose()) * 0.5;
        let t_next = if k + 1 == n { t_end } else { state.t + (k + 1) as f64 * dt };
        let current = CovarianceState::new(sigma, t_next);
        if !current.is_finite() {
            return Err(Error::Numerical(NumericalFailure::NonFinite { t: t_next }));
        }
        observe(&current);
    }
    Ok(CovarianceState::new(sigma, t_end))
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// Refinement stops once the Richardson error estimate of a panel is below
/// `max(abs_tol, rel_tol·|I|)` scaled to the panel width. Returns the integral
/// and the accumulated error estimate.
pub fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: &Tolerances,
) -> Result<(f64, f64)> {
    fn simpson(fa: f64, fm: f64, fb: f64, w: f64) -> f64 {
        w / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
        err: &mut f64,
        converged: &mut bool,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * eps || depth == 0 {
            if depth == 0 && delta.abs() > 15.0 * eps {
                *converged = false;
            }
            *err += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, err, converged)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, err, converged)
    }

    if a == b {
        return Ok((0.0, 0.0));
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    // a coarse composite pass sets the scale for the relative target
    let scale = {
        let n = 64;
        let w = (b - a) / n as f64;
        (0..n)
            .map(|k| {
                let x0 = a + k as f64 * w;
                simpson(f(x0), f(x0 + 0.5 * w), f(x0 + w), w)
            })
            .sum::<f64>()
            .abs()
    };
    let eps = tol.quadrature_abs.max(tol.quadrature_rel * scale);
    let mut err = 0.0;
    let mut converged = true;
    let value = recurse(
        f,
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        eps,
        tol.quadrature_max_depth,
        &mut err,
        &mut converged,
    );
    if !converged || !value.is_finite() {
        return Err(Error::Numerical(NumericalFailure::QuadratureNotConverged {
            error_estimate: err,
        }));
    }
    Ok((value, err))
}

/// Closed-form evolution of the vacuum under balanced loss, no mismatch.
///
/// Each quadrature evolves independently as `q̇ = ±κ(t) q − λ q + noise`, so
/// with `K(t) = ±∫κ − λt`
///
/// ```text
/// ⟨q²⟩(t) = ½ e^{2K(t)} + λ ∫₀ᵗ e^{2(K(t) − K(t′))} dt′.
/// ```
///
/// The noise integral is closed-form without pump decay and computed by
/// adaptive Simpson otherwise.
pub fn evolve_analytic_balanced(
    spec: &DriftSpec,
    t_end: f64,
    tol: &Tolerances,
) -> Result<CovarianceState> {
    spec.validate()?;
    if !spec.is_balanced() || spec.phase_mismatch != 0.0 || spec.amplitude_ratio != 1.0 {
        return Err(Error::Precondition(
            "closed-form evolution needs equal arm losses and no mismatch".into(),
        ));
    }
    if !(t_end >= 0.0) {
        return Err(Error::param("t_end", format!("must be ≥ 0, got {t_end}")));
    }
    let loss = spec.loss_a;
    let variance = |sign: f64| -> Result<f64> {
        let growth = |t: f64| sign * spec.kappa_integral(t) - loss * t;
        let k_end = growth(t_end);
        let noise = if loss == 0.0 {
            0.0
        } else if spec.pump_decay == 0.0 {
            let rate = sign * spec.kappa0 - loss;
            if rate == 0.0 {
                loss * t_end
            } else {
                loss * (2.0 * rate * t_end).exp_m1() / (2.0 * rate)
            }
        } else {
            let integrand = |t: f64| (2.0 * (k_end - growth(t))).exp();
            loss * adaptive_simpson(&integrand, 0.0, t_end, tol)?.0
        };
        Ok(0.5 * (2.0 * k_end).exp() + noise)
    };
    let grow = variance(1.0)?;
    let shrink = variance(-1.0)?;
    let mut sigma = Mat8::zeros();
    for c in CMode::ALL {
        let (x, p) = if c.squeeze_sign() > 0.0 { (grow, shrink) } else { (shrink, grow) };
        sigma[(Quadrature::X(c).index(), Quadrature::X(c).index())] = x;
        sigma[(Quadrature::P(c).index(), Quadrature::P(c).index())] = p;
    }
    Ok(CovarianceState::new(sigma, t_end))
}
