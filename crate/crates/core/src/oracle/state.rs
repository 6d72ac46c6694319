use crate::stokes::FockBasis;
use num_complex::Complex64;

/// Pure state on the truncated space. Truncated constructions carry norm
/// below one; the deficit is the probability lost past the cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    pub basis: FockBasis,
    pub amplitudes: Vec<Complex64>,
}

impl FockState {
    pub fn zero(basis: FockBasis) -> Self {
        Self { basis, amplitudes: vec![Complex64::new(0.0, 0.0); basis.dim()] }
    }

    pub fn vacuum(basis: FockBasis) -> Self {
        Self::number_state(basis, [0; 4])
    }

    pub fn number_state(basis: FockBasis, occ: [usize; 4]) -> Self {
        let mut s = Self::zero(basis);
        s.amplitudes[basis.index(occ)] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn truncation_deficit(&self) -> f64 {
        1.0 - self.norm_sqr()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm_sqr().sqrt();
        if n > 0.0 {
            self.amplitudes.iter_mut().for_each(|a| *a /= n);
        }
        self
    }

    pub fn inner(&self, other: &FockState) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn distance(&self, other: &FockState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Probability of every basis state.
    pub fn populations(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Dense density matrix on the truncated space, row-major. Its trace falls
/// short of one by the truncation loss.
#[derive(Debug, Clone, PartialEq)]
pub struct FockDensity {
    pub basis: FockBasis,
    pub data: Vec<Complex64>,
}

impl FockDensity {
    pub fn from_pure(state: &FockState) -> Self {
        let dim = state.basis.dim();
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (r, a) in state.amplitudes.iter().enumerate() {
            if *a == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (c, b) in state.amplitudes.iter().enumerate() {
                data[r * dim + c] = a * b.conj();
            }
        }
        Self { basis: state.basis, data }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim() + c]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|k| self.get(k, k).re).sum()
    }

    /// Largest `|ρ − ρ†|` entry.
    pub fn hermiticity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst = 0.0f64;
        for r in 0..dim {
            for c in r..dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue, by dense diagonalization. Only sensible for
    /// small cutoffs.
    pub fn min_eigenvalue(&self) -> f64 {
        let dim = self.dim();
        let m = nalgebra::DMatrix::from_fn(dim, dim, |r, c| self.get(r, c));
        m.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_diff(&self, other: &FockDensity) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// A convex mixture of pure states, `ρ = Σ wᵢ |ψᵢ⟩⟨ψᵢ|`, kept unexpanded.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    pub basis: FockBasis,
    pub weights: Vec<f64>,
    pub states: Vec<FockState>,
}

impl Ensemble {
    pub fn to_density(&self) -> FockDensity {
        let mut out = FockDensity {
            basis: self.basis,
            data: vec![Complex64::new(0.0, 0.0); self.basis.dim().pow(2)],
        };
        for (w, s) in self.weights.iter().zip(&self.states) {
            let d = FockDensity::from_pure(s);
            out.data.iter_mut().zip(&d.data).for_each(|(o, v)| *o += v * *w);
        }
        out
    }
}
