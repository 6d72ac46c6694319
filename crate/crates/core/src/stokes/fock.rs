use super::modes::Mode;
use crate::{Error, Result};
use num_complex::Complex64;
use sprs::{CsMat, TriMat};

/// Compressed sparse row matrix over complex amplitudes.
pub type SpMat = CsMat<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Truncated four-mode Fock space. Each mode holds `0..=cutoff` photons;
/// basis states are indexed row-major in `(n_ah, n_av, n_bh, n_bv)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockBasis {
    cutoff: usize,
    dim: usize,
}

impl FockBasis {
    pub fn new(cutoff: usize, max_dim: usize) -> Result<Self> {
        if cutoff < 1 {
            return Err(Error::param("cutoff", "must be at least 1"));
        }
        let dim = (cutoff + 1)
            .checked_pow(4)
            .ok_or(Error::DimensionBudget { dim: usize::MAX, budget: max_dim })?;
        if dim > max_dim {
            return Err(Error::DimensionBudget { dim, budget: max_dim });
        }
        Ok(Self { cutoff, dim })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn levels(&self) -> usize {
        self.cutoff + 1
    }

    pub fn stride(&self, mode: Mode) -> usize {
        self.levels().pow(3 - mode.fock_slot() as u32)
    }

    pub fn index(&self, occ: [usize; 4]) -> usize {
        debug_assert!(occ.iter().all(|&n| n <= self.cutoff));
        occ.iter().fold(0, |acc, &n| acc * self.levels() + n)
    }

    pub fn occupations(&self, mut index: usize) -> [usize; 4] {
        let mut occ = [0; 4];
        for slot in (0..4).rev() {
            occ[slot] = index % self.levels();
            index /= self.levels();
        }
        occ
    }

    /// Whether both arms hold at most `cutoff` photons. On this subspace the
    /// Stokes operators act without truncation artifacts.
    pub fn in_spin_subspace(&self, occ: [usize; 4]) -> bool {
        occ[0] + occ[1] <= self.cutoff && occ[2] + occ[3] <= self.cutoff
    }

    fn diagonal(&self, f: impl Fn([usize; 4]) -> f64) -> SpMat {
        let mut t = TriMat::new((self.dim, self.dim));
        for k in 0..self.dim {
            let v = f(self.occupations(k));
            if v != 0.0 {
                t.add_triplet(k, k, Complex64::new(v, 0.0));
            }
        }
        t.to_csr()
    }

    /// `n̂` of one mode.
    pub fn number(&self, mode: Mode) -> SpMat {
        self.diagonal(|occ| occ[mode.fock_slot()] as f64)
    }

    /// `a_to† a_from`, dropping transitions past the cutoff.
    pub fn hop(&self, to: Mode, from: Mode) -> SpMat {
        assert_ne!(to, from);
        let (t_slot, f_slot) = (to.fock_slot(), from.fock_slot());
        let mut t = TriMat::new((self.dim, self.dim));
        for k in 0..self.dim {
            let mut occ = self.occupations(k);
            if occ[f_slot] == 0 || occ[t_slot] == self.cutoff {
                continue;
            }
            let amp = ((occ[f_slot] * (occ[t_slot] + 1)) as f64).sqrt();
            occ[f_slot] -= 1;
            occ[t_slot] += 1;
            t.add_triplet(self.index(occ), k, Complex64::new(amp, 0.0));
        }
        t.to_csr()
    }

    /// `a_i† a_j†` for distinct modes, dropping transitions past the cutoff.
    pub fn pair_create(&self, i: Mode, j: Mode) -> SpMat {
        assert_ne!(i, j);
        let (si, sj) = (i.fock_slot(), j.fock_slot());
        let mut t = TriMat::new((self.dim, self.dim));
        for k in 0..self.dim {
            let mut occ = self.occupations(k);
            if occ[si] == self.cutoff || occ[sj] == self.cutoff {
                continue;
            }
            let amp = (((occ[si] + 1) * (occ[sj] + 1)) as f64).sqrt();
            occ[si] += 1;
            occ[sj] += 1;
            t.add_triplet(self.index(occ), k, Complex64::new(amp, 0.0));
        }
        t.to_csr()
    }
}

pub(crate) fn scale(m: &SpMat, c: Complex64) -> SpMat {
    m.map(|&v| v * c)
}

pub(crate) fn adjoint(m: &SpMat) -> SpMat {
    m.transpose_view().to_csr().map(|v| v.conj())
}

/// `op · v` for a dense vector.
pub(crate) fn apply(op: &SpMat, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); op.rows()];
    for (row, vec) in op.outer_iterator().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (col, &x) in vec.iter() {
            acc += x * v[col];
        }
        out[row] = acc;
    }
    out
}

/// `⟨v| op |v⟩` without normalization.
pub(crate) fn sandwich(op: &SpMat, v: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (row, vec) in op.outer_iterator().enumerate() {
        if v[row] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut r = Complex64::new(0.0, 0.0);
        for (col, &x) in vec.iter() {
            r += x * v[col];
        }
        acc += v[row].conj() * r;
    }
    acc
}

/// Stokes and photon-number operators on a truncated Fock space.
///
/// Vector components are stored in `[x, y, z]` order. All products are
/// formed after truncation, so states must keep each arm at or below the
/// cutoff for the angular-momentum algebra to hold exactly.
#[derive(Debug, Clone)]
pub struct FockOperatorSet {
    pub basis: FockBasis,
    pub j: [SpMat; 3],
    pub ja: [SpMat; 3],
    pub jb: [SpMat; 3],
    pub n_a: SpMat,
    pub n_b: SpMat,
    pub n: SpMat,
    pub j2: SpMat,
    pub ja_sq: SpMat,
    pub jb_sq: SpMat,
}

fn arm_spin(basis: &FockBasis, h: Mode, v: Mode) -> [SpMat; 3] {
    let half = Complex64::new(0.5, 0.0);
    let up = basis.hop(h, v);
    let down = basis.hop(v, h);
    let jx = scale(&(&up + &down), half);
    let jy = scale(&(&scale(&up, I) - &scale(&down, I)), half);
    let jz = scale(&(&basis.number(h) - &basis.number(v)), half);
    [jx, jy, jz]
}

fn square_sum(components: &[SpMat; 3]) -> SpMat {
    let sq: Vec<SpMat> = components.iter().map(|c| c * c).collect();
    &(&sq[0] + &sq[1]) + &sq[2]
}

/// Builds every observable used by the oracle at the given per-mode cutoff.
pub fn build_fock_operators(cutoff: usize, max_dim: usize) -> Result<FockOperatorSet> {
    let basis = FockBasis::new(cutoff, max_dim)?;
    let ja = arm_spin(&basis, Mode::Ah, Mode::Av);
    let jb = arm_spin(&basis, Mode::Bh, Mode::Bv);
    let j = [&ja[0] + &jb[0], &ja[1] + &jb[1], &ja[2] + &jb[2]];
    let n_a = &basis.number(Mode::Ah) + &basis.number(Mode::Av);
    let n_b = &basis.number(Mode::Bh) + &basis.number(Mode::Bv);
    let n = &n_a + &n_b;
    Ok(FockOperatorSet {
        basis,
        j2: square_sum(&j),
        ja_sq: square_sum(&ja),
        jb_sq: square_sum(&jb),
        j,
        ja,
        jb,
        n_a,
        n_b,
        n,
    })
}
