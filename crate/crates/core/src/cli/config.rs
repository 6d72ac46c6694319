use crate::engine::DriftSpec;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Quantities a scenario can record at each sample time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Observable {
    #[serde(rename = "N")]
    PhotonNumber,
    #[serde(rename = "J2")]
    J2,
    #[serde(rename = "ratio")]
    Ratio,
    /// The eight diagonal covariance entries.
    #[serde(rename = "variances")]
    Variances,
    /// Smallest eigenvalue of Σ + iΩ/2.
    #[serde(rename = "uncertainty_floor")]
    UncertaintyFloor,
}

fn default_step() -> f64 {
    1e-3
}

fn default_sample_every() -> f64 {
    0.1
}

fn default_outputs() -> Vec<Observable> {
    vec![Observable::PhotonNumber, Observable::J2, Observable::Ratio]
}

/// One evolution run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub spec: DriftSpec,
    /// Final time in passes.
    pub t_end: f64,
    #[serde(default = "default_step")]
    pub step: f64,
    #[serde(default = "default_sample_every")]
    pub sample_every: f64,
    /// Per-mode transmissions `(a_h, a_v, b_h, b_v)` applied to every sample
    /// before measurement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub post_loss: Option<[f64; 4]>,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<Observable>,
}

impl ScenarioConfig {
    pub fn new(spec: DriftSpec, t_end: f64) -> Self {
        Self {
            spec,
            t_end,
            step: default_step(),
            sample_every: default_sample_every(),
            post_loss: None,
            outputs: default_outputs(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.spec.validate()?;
        if !(self.t_end >= 0.0) || !self.t_end.is_finite() {
            return Err(Error::param("t_end", format!("must be finite and ≥ 0, got {}", self.t_end)));
        }
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::param("step", format!("must be > 0, got {}", self.step)));
        }
        if !(self.sample_every >= self.step) || !self.sample_every.is_finite() {
            return Err(Error::param(
                "sample_every",
                format!("must be ≥ step ({}), got {}", self.step, self.sample_every),
            ));
        }
        if let Some(eta) = self.post_loss {
            if eta.iter().any(|e| !(0.0..=1.0).contains(e)) {
                return Err(Error::param("post_loss", "transmissions must lie in [0, 1]"));
            }
        }
        if self.outputs.is_empty() {
            return Err(Error::param("outputs", "at least one observable is required"));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(config_error)?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

pub(crate) fn config_error(e: serde_json::Error) -> Error {
    Error::Config(format!("line {}, column {}: {e}", e.line(), e.column()))
}

/// A `DriftSpec` field (or run setting) a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepField {
    Kappa0,
    PumpDecay,
    LossA,
    LossB,
    /// Mean arm loss, keeping the current imbalance.
    LossMean,
    /// `loss_a − loss_b`, keeping the current mean.
    LossImbalance,
    PhaseMismatch,
    AmplitudeRatio,
    TEnd,
    /// Balanced post-hoc transmission on all four modes.
    Eta,
}

impl SweepField {
    pub fn name(self) -> &'static str {
        match self {
            Self::Kappa0 => "kappa0",
            Self::PumpDecay => "pump_decay",
            Self::LossA => "loss_a",
            Self::LossB => "loss_b",
            Self::LossMean => "loss_mean",
            Self::LossImbalance => "loss_imbalance",
            Self::PhaseMismatch => "phase_mismatch",
            Self::AmplitudeRatio => "amplitude_ratio",
            Self::TEnd => "t_end",
            Self::Eta => "eta",
        }
    }

    pub(crate) fn apply(self, config: &mut ScenarioConfig, value: f64) {
        let spec = &mut config.spec;
        match self {
            Self::Kappa0 => spec.kappa0 = value,
            Self::PumpDecay => spec.pump_decay = value,
            Self::LossA => spec.loss_a = value,
            Self::LossB => spec.loss_b = value,
            Self::LossMean => *spec = spec.with_loss_imbalance(value, spec.loss_imbalance()),
            Self::LossImbalance => *spec = spec.with_loss_imbalance(spec.mean_loss(), value),
            Self::PhaseMismatch => spec.phase_mismatch = value,
            Self::AmplitudeRatio => spec.amplitude_ratio = value,
            Self::TEnd => config.t_end = value,
            Self::Eta => config.post_loss = Some([value; 4]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridAxis {
    pub field: SweepField,
    pub values: Vec<f64>,
}

/// Cartesian-product sweep around a base scenario. Axes vary in declared
/// order, the first slowest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub base: ScenarioConfig,
    pub grid: Vec<GridAxis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(config_error)?;
        config.base.validate()?;
        if config.grid.is_empty() || config.grid.iter().any(|a| a.values.is_empty()) {
            return Err(Error::param("grid", "needs at least one axis, each with values"));
        }
        Ok(config)
    }

    pub fn point_count(&self) -> usize {
        self.grid.iter().map(|a| a.values.len()).product()
    }

    /// Every grid point in lexicographic order, as `(coordinates, config)`.
    pub fn points(&self) -> Vec<(Vec<f64>, ScenarioConfig)> {
        let mut out = vec![(Vec::new(), self.base.clone())];
        for axis in &self.grid {
            out = out
                .into_iter()
                .flat_map(|(coords, config)| {
                    axis.values.iter().map(move |&v| {
                        let mut c = config.clone();
                        axis.field.apply(&mut c, v);
                        let mut k = coords.clone();
                        k.push(v);
                        (k, c)
                    })
                })
                .collect();
        }
        out
    }
}
