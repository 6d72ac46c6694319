use crate::{Error, Result, Tolerances};

/// Every separable state has `⟨J²⟩/⟨N⟩ ≥ ½`.
pub const SEPARABLE_BOUND: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Ratio below ½: the state is certified entangled.
    Entangled,
    /// Ratio at or above ½: the criterion says nothing.
    Inconclusive,
    /// No photons, no ratio.
    Vacuous,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionOutcome {
    pub verdict: Verdict,
    pub ratio: Option<f64>,
    pub margin: Option<f64>,
}

/// Applies the criterion to `⟨J²⟩` and `⟨N⟩`.
///
/// A ratio within `tol.boundary` of ½ is inconclusive, so states sitting on
/// the bound (up to rounding) are never reported as entangled.
pub fn criterion(j2: f64, n: f64, tol: &Tolerances) -> Result<CriterionOutcome> {
    if !j2.is_finite() || !n.is_finite() || n < 0.0 {
        return Err(Error::param("n", format!("need finite j2 and n ≥ 0, got ({j2}, {n})")));
    }
    if n <= tol.vacuum_photons {
        return Ok(CriterionOutcome { verdict: Verdict::Vacuous, ratio: None, margin: None });
    }
    let ratio = j2 / n;
    let margin = SEPARABLE_BOUND - ratio;
    let verdict = if margin > tol.boundary { Verdict::Entangled } else { Verdict::Inconclusive };
    Ok(CriterionOutcome { verdict, ratio: Some(ratio), margin: Some(margin) })
}
