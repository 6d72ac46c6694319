use crate::{Error, Result};

/// `⟨J²⟩` and `⟨N⟩` after arm transmissions `(η_A, η_B)` applied to an ideal
/// (singlet-like) state with `⟨(J^A)²⟩ = j2_arm` and `⟨N⟩ = n`:
///
/// ```text
/// ⟨J²⟩ → (η_A − η_B)² ⟨(J^A)²⟩ + ⅜ [η_A(1−η_A) + η_B(1−η_B)] ⟨N⟩
/// ⟨N⟩  → ½ (η_A + η_B) ⟨N⟩
/// ```
///
/// Only valid when the input satisfies `⟨(J^A)²⟩ = ⟨(J^B)²⟩ = −⟨J^A·J^B⟩`
/// and `⟨N_A⟩ = ⟨N_B⟩`, as the lossless source output does.
pub fn loss_transform_analytic(j2_arm: f64, n: f64, eta_a: f64, eta_b: f64) -> Result<(f64, f64)> {
    for (name, eta) in [("eta_a", eta_a), ("eta_b", eta_b)] {
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::param(name, format!("transmission must lie in [0, 1], got {eta}")));
        }
    }
    let delta = eta_a - eta_b;
    let j2 = delta * delta * j2_arm + 0.375 * (eta_a * (1.0 - eta_a) + eta_b * (1.0 - eta_b)) * n;
    Ok((j2, 0.5 * (eta_a + eta_b) * n))
}
