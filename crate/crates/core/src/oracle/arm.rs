use super::state::FockState;
use crate::stokes::FockBasis;
use crate::{Error, Result};
use num_complex::Complex64;

/// Pure polarization state of one arm (`h` and `v` modes), supported on
/// `n_h + n_v ≤ cutoff`, where the arm's spin operators are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmState {
    cutoff: usize,
    amplitudes: Vec<Complex64>,
}

impl ArmState {
    fn slot(cutoff: usize, nh: usize, nv: usize) -> usize {
        nh * (cutoff + 1) + nv
    }

    /// Builds an arm state from `(n_h, n_v, amplitude)` triples.
    pub fn from_terms(
        cutoff: usize,
        terms: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Result<Self> {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); (cutoff + 1) * (cutoff + 1)];
        for (nh, nv, a) in terms {
            if nh + nv > cutoff {
                return Err(Error::param(
                    "arm occupation",
                    format!("n_h + n_v = {} exceeds cutoff {cutoff}", nh + nv),
                ));
            }
            amplitudes[Self::slot(cutoff, nh, nv)] += a;
        }
        Ok(Self { cutoff, amplitudes })
    }

    pub fn number(cutoff: usize, nh: usize, nv: usize) -> Result<Self> {
        Self::from_terms(cutoff, [(nh, nv, Complex64::new(1.0, 0.0))])
    }

    /// Spin-coherent state `|j; θ, ϕ⟩` with `2j = photons`, pointing along
    /// the Stokes direction `(sinθ cosϕ, sinθ sinϕ, cosθ)`.
    pub fn spin_coherent(cutoff: usize, photons: usize, theta: f64, phi: f64) -> Result<Self> {
        let (s, c) = (0.5 * theta).sin_cos();
        let mut binom = 1.0f64;
        let terms: Vec<_> = (0..=photons)
            .map(|k| {
                if k > 0 {
                    binom *= (photons - k + 1) as f64 / k as f64;
                }
                let amp = binom.sqrt() * c.powi((photons - k) as i32) * s.powi(k as i32);
                (photons - k, k, Complex64::from_polar(amp, k as f64 * phi))
            })
            .collect();
        Self::from_terms(cutoff, terms)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn amplitude(&self, nh: usize, nv: usize) -> Complex64 {
        self.amplitudes[Self::slot(self.cutoff, nh, nv)]
    }

    pub fn mean_photons(&self) -> f64 {
        let mut total = 0.0;
        let mut norm = 0.0;
        for nh in 0..=self.cutoff {
            for nv in 0..=self.cutoff - nh {
                let p = self.amplitude(nh, nv).norm_sqr();
                total += p * (nh + nv) as f64;
                norm += p;
            }
        }
        total / norm
    }

    pub fn normalized(mut self) -> Self {
        let n: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if n > 0.0 {
            self.amplitudes.iter_mut().for_each(|a| *a /= n);
        }
        self
    }

    /// `|ψ_A⟩ ⊗ |ψ_B⟩` on the four-mode space, with `b` given as `(n_bh, n_bv)`.
    pub fn product(&self, b: &ArmState, basis: FockBasis) -> Result<FockState> {
        if self.cutoff != b.cutoff || self.cutoff != basis.cutoff() {
            return Err(Error::param("cutoff", "arm and basis cutoffs must agree"));
        }
        let c = self.cutoff;
        let mut out = FockState::zero(basis);
        for ah in 0..=c {
            for av in 0..=c - ah {
                let x = self.amplitude(ah, av);
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for bh in 0..=c {
                    for bv in 0..=c - bh {
                        out.amplitudes[basis.index([ah, av, bh, bv])] = x * b.amplitude(bh, bv);
                    }
                }
            }
        }
        Ok(out)
    }
}
