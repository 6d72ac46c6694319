use crate::stokes::{c_basis_transform, CMode, Mat8, Mode, Quadrature};
use crate::{Error, Result};
use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

/// Physical parameters of the driven, lossy four-mode system. Rates are in
/// inverse passes through the crystal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriftSpec {
    /// Initial pair-creation rate κ₀.
    pub kappa0: f64,
    /// Pump decay rate; κ(t) = κ₀ e^{−pump_decay·t}.
    #[serde(default)]
    pub pump_decay: f64,
    /// Amplitude loss rate of the a-arm modes.
    pub loss_a: f64,
    /// Amplitude loss rate of the b-arm modes.
    pub loss_b: f64,
    /// Relative phase between the two twin-beam sources, radians.
    #[serde(default)]
    pub phase_mismatch: f64,
    /// Relative amplitude of the second twin-beam source (1 is ideal).
    #[serde(default = "one")]
    pub amplitude_ratio: f64,
}

fn one() -> f64 {
    1.0
}

impl DriftSpec {
    /// Equal loss on both arms, no mismatch.
    pub fn balanced(kappa0: f64, pump_decay: f64, loss: f64) -> Self {
        Self {
            kappa0,
            pump_decay,
            loss_a: loss,
            loss_b: loss,
            phase_mismatch: 0.0,
            amplitude_ratio: 1.0,
        }
    }

    /// Arm losses from their mean and difference, `loss_a − loss_b = delta`.
    pub fn with_loss_imbalance(mut self, mean: f64, delta: f64) -> Self {
        self.loss_a = mean + 0.5 * delta;
        self.loss_b = mean - 0.5 * delta;
        self
    }

    pub fn lossless(kappa0: f64) -> Self {
        Self::balanced(kappa0, 0.0, 0.0)
    }

    pub fn mean_loss(&self) -> f64 {
        0.5 * (self.loss_a + self.loss_b)
    }

    pub fn loss_imbalance(&self) -> f64 {
        self.loss_a - self.loss_b
    }

    pub fn kappa(&self, t: f64) -> f64 {
        self.kappa0 * (-self.pump_decay * t).exp()
    }

    /// `∫₀ᵗ κ(t′) dt′`.
    pub fn kappa_integral(&self, t: f64) -> f64 {
        if self.pump_decay == 0.0 {
            self.kappa0 * t
        } else {
            self.kappa0 / self.pump_decay * (-(-self.pump_decay * t).exp_m1())
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.loss_a == self.loss_b
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.kappa0,
            self.pump_decay,
            self.loss_a,
            self.loss_b,
            self.phase_mismatch,
            self.amplitude_ratio,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !finite {
            return Err(Error::param("spec", "all parameters must be finite"));
        }
        if self.kappa0 <= 0.0 {
            return Err(Error::param("kappa0", format!("must be > 0, got {}", self.kappa0)));
        }
        if self.pump_decay < 0.0 {
            return Err(Error::param("pump_decay", format!("must be ≥ 0, got {}", self.pump_decay)));
        }
        if self.loss_a < 0.0 || self.loss_b < 0.0 {
            return Err(Error::param(
                "loss_a/loss_b",
                format!("must be ≥ 0, got {} and {}", self.loss_a, self.loss_b),
            ));
        }
        if self.amplitude_ratio <= 0.0 {
            return Err(Error::param(
                "amplitude_ratio",
                format!("must be > 0, got {}", self.amplitude_ratio),
            ));
        }
        Ok(())
    }

    /// Loss-rate matrix in the c basis; acts identically on `x` and `p`.
    fn loss_matrix(&self) -> Matrix4<f64> {
        let u = c_basis_transform();
        let mut rates = Matrix4::zeros();
        for m in Mode::ALL {
            let k = m.paired_slot();
            rates[(k, k)] = if m.is_arm_a() { self.loss_a } else { self.loss_b };
        }
        u * rates * u
    }
}

fn lift(m: &Matrix4<f64>) -> Mat8 {
    let mut out = Mat8::zeros();
    for i in 0..4 {
        for j in 0..4 {
            out[(2 * i, 2 * j)] = m[(i, j)];
            out[(2 * i + 1, 2 * j + 1)] = m[(i, j)];
        }
    }
    out
}

/// Drift `A(t)` and diffusion `D` of the moment equation.
///
/// Modes c1, c2 squeeze at κ(t) and c3, c4 at `amplitude_ratio·κ(t)`. Each
/// physical mode damps at its own arm rate and injects vacuum noise at the
/// same rate, so `D = L ⊗ I₂` with `L` the loss matrix in the c basis. The
/// phase mismatch does not enter here; see [`crate::engine::apply_phase_mismatch`].
pub fn drift_and_diffusion(spec: &DriftSpec, t: f64) -> (Mat8, Mat8) {
    let kappa = spec.kappa(t);
    let loss = lift(&spec.loss_matrix());
    let mut a = -loss;
    for c in CMode::ALL {
        let rate = match c {
            CMode::C1 | CMode::C2 => kappa,
            CMode::C3 | CMode::C4 => spec.amplitude_ratio * kappa,
        };
        let s = c.squeeze_sign() * rate;
        a[(Quadrature::X(c).index(), Quadrature::X(c).index())] += s;
        a[(Quadrature::P(c).index(), Quadrature::P(c).index())] -= s;
    }
    (a, loss)
}
