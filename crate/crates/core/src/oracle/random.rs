use super::arm::ArmState;
use super::state::FockState;
use crate::stokes::FockBasis;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Deterministic generator for draw `stream` of a run seeded with `seed`.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian_amp(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-like random pure state on the subspace where each arm holds at most
/// `cutoff` photons. Not necessarily separable.
pub fn random_spin_state(basis: FockBasis, rng: &mut impl Rng) -> FockState {
    let mut s = FockState::zero(basis);
    for k in 0..basis.dim() {
        if basis.in_spin_subspace(basis.occupations(k)) {
            s.amplitudes[k] = gaussian_amp(rng);
        }
    }
    s.normalized()
}

impl ArmState {
    /// Random pure arm state, spherically symmetric over the arm subspace.
    pub fn random(cutoff: usize, rng: &mut impl Rng) -> ArmState {
        let terms: Vec<_> = (0..=cutoff)
            .flat_map(|h| (0..=cutoff - h).map(move |v| (h, v)))
            .map(|(h, v)| (h, v, gaussian_amp(rng)))
            .collect();
        ArmState::from_terms(cutoff, terms).expect("terms lie in the arm subspace").normalized()
    }
}
