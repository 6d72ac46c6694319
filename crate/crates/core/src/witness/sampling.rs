use crate::oracle::{expectation, seeded_rng, ArmState, Ensemble, FockState};
use crate::stokes::{build_fock_operators, FockBasis, FockOperatorSet};
use crate::{Result, Tolerances};
use rand::Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Families of separable states drawn to probe the ½ bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparableGenerator {
    /// `|n_h, n_v⟩_A ⊗ |n_h, n_v⟩_B`, occupations uniform over each arm's
    /// spin subspace.
    ProductFock,
    /// Spin-coherent states on each arm, spin length uniform, direction
    /// uniform on the sphere.
    ProductCoherentSpin,
    /// Dirichlet-uniform mixtures of up to eight product states, each factor
    /// drawn from the other two families or uniformly at random.
    MixedProduct,
}

impl SeparableGenerator {
    pub const ALL: [SeparableGenerator; 3] = [
        SeparableGenerator::ProductFock,
        SeparableGenerator::ProductCoherentSpin,
        SeparableGenerator::MixedProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ProductFock => "product_fock",
            Self::ProductCoherentSpin => "product_coherent_spin",
            Self::MixedProduct => "mixed_product",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableSample {
    pub generator: SeparableGenerator,
    pub seed: u64,
    /// Stream index within the seed; the sample is reproducible from
    /// `(generator, seed, index)`.
    pub index: u64,
    pub ratio: f64,
}

fn fock_arm(cutoff: usize, rng: &mut impl Rng) -> ArmState {
    let pairs = (cutoff + 1) * (cutoff + 2) / 2;
    let mut pick = rng.gen_range(0..pairs);
    for nh in 0..=cutoff {
        let row = cutoff - nh + 1;
        if pick < row {
            return ArmState::number(cutoff, nh, pick).expect("inside arm subspace");
        }
        pick -= row;
    }
    unreachable!()
}

fn coherent_arm(cutoff: usize, rng: &mut impl Rng) -> ArmState {
    let photons = rng.gen_range(0..=cutoff);
    let theta = rng.gen_range(-1.0f64..=1.0).acos();
    let phi = rng.gen_range(0.0..2.0 * PI);
    ArmState::spin_coherent(cutoff, photons, theta, phi).expect("inside arm subspace")
}

fn any_arm(cutoff: usize, rng: &mut impl Rng) -> ArmState {
    match rng.gen_range(0..3) {
        0 => fock_arm(cutoff, rng),
        1 => coherent_arm(cutoff, rng),
        _ => ArmState::random(cutoff, rng),
    }
}

fn draw(
    generator: SeparableGenerator,
    basis: FockBasis,
    rng: &mut impl Rng,
) -> Result<Ensemble> {
    let c = basis.cutoff();
    let (weights, states) = match generator {
        SeparableGenerator::ProductFock => {
            (vec![1.0], vec![fock_arm(c, rng).product(&fock_arm(c, rng), basis)?])
        }
        SeparableGenerator::ProductCoherentSpin => {
            (vec![1.0], vec![coherent_arm(c, rng).product(&coherent_arm(c, rng), basis)?])
        }
        SeparableGenerator::MixedProduct => {
            let k = rng.gen_range(1..=8);
            let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
            let total: f64 = raw.iter().sum();
            let states = (0..k)
                .map(|_| any_arm(c, rng).product(&any_arm(c, rng), basis))
                .collect::<Result<Vec<_>>>()?;
            (raw.iter().map(|w| w / total).collect(), states)
        }
    };
    Ok(Ensemble { basis, weights, states })
}

fn sample_one(
    generator: SeparableGenerator,
    seed: u64,
    index: u64,
    ops: &FockOperatorSet,
    tol: &Tolerances,
) -> Result<SeparableSample> {
    let mut rng = seeded_rng(seed, index);
    loop {
        let state = draw(generator, ops.basis, &mut rng)?;
        let n = expectation(&state, &ops.n, tol)?;
        // the ratio is undefined on the vacuum; redraw
        if n <= tol.vacuum_photons {
            continue;
        }
        let j2 = expectation(&state, &ops.j2, tol)?;
        return Ok(SeparableSample { generator, seed, index, ratio: j2 / n });
    }
}

/// Draws `count` separable states at the given per-mode cutoff and returns
/// their ⟨J²⟩/⟨N⟩ ratios, evaluated on the Fock oracle. Samples run in
/// parallel; output order and values depend only on `seed`.
pub fn sample_separable(
    generator: SeparableGenerator,
    seed: u64,
    count: usize,
    cutoff: usize,
    tol: &Tolerances,
) -> Result<Vec<SeparableSample>> {
    let ops = build_fock_operators(cutoff, tol.max_fock_dim)?;
    (0..count as u64)
        .into_par_iter()
        .map(|i| sample_one(generator, seed, i, &ops, tol))
        .collect()
}

/// `|2j, 0⟩_A ⊗ |0, 2j⟩_B`: spin `j` up on arm a, down on arm b. Separable,
/// with ratio exactly ½.
pub fn extremal_product(photons: usize, basis: FockBasis) -> FockState {
    FockState::number_state(basis, [photons, 0, 0, photons])
}
