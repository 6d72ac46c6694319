//! The ⟨J²⟩/⟨N⟩ < ½ entanglement criterion, adversarial separable-state
//! sampling against it, and the analytic tolerances for each imperfection.

mod criterion;
mod loss;
mod sampling;
mod thresholds;

pub use criterion::{criterion, CriterionOutcome, Verdict, SEPARABLE_BOUND};
pub use loss::loss_transform_analytic;
pub use sampling::{
    extremal_product, sample_separable, SeparableGenerator, SeparableSample,
};
pub use thresholds::{thresholds, ThresholdReport};
