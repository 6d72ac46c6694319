use nalgebra::{Matrix4, SMatrix};
use std::f64::consts::FRAC_1_SQRT_2;

/// Number of quadratures of the four-mode system.
pub const NQ: usize = 8;

pub type Mat8 = SMatrix<f64, NQ, NQ>;

/// Physical down-conversion modes, in Fock-index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Ah,
    Av,
    Bh,
    Bv,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Ah, Mode::Av, Mode::Bh, Mode::Bv];

    /// Position in Fock occupation tuples `(n_ah, n_av, n_bh, n_bv)`.
    pub fn fock_slot(self) -> usize {
        self as usize
    }

    /// Position in the paired ordering `(a_h, b_v, a_v, b_h)` on which
    /// [`c_basis_transform`] acts.
    pub fn paired_slot(self) -> usize {
        match self {
            Mode::Ah => 0,
            Mode::Bv => 1,
            Mode::Av => 2,
            Mode::Bh => 3,
        }
    }

    pub fn is_arm_a(self) -> bool {
        matches!(self, Mode::Ah | Mode::Av)
    }
}

/// Squeezer modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CMode {
    C1,
    C2,
    C3,
    C4,
}

impl CMode {
    pub const ALL: [CMode; 4] = [CMode::C1, CMode::C2, CMode::C3, CMode::C4];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Sign of the squeezing term: +1 where `x` grows and `p` is squeezed.
    pub fn squeeze_sign(self) -> f64 {
        match self {
            CMode::C1 | CMode::C4 => 1.0,
            CMode::C2 | CMode::C3 => -1.0,
        }
    }
}

/// A quadrature slot in the fixed ordering `(x1, p1, x2, p2, x3, p3, x4, p4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    X(CMode),
    P(CMode),
}

impl Quadrature {
    pub fn index(self) -> usize {
        match self {
            Quadrature::X(c) => 2 * c.index(),
            Quadrature::P(c) => 2 * c.index() + 1,
        }
    }
}

/// The real orthogonal map from physical to squeezer modes, acting on the
/// paired ordering `(a_h, b_v, a_v, b_h)`. It is symmetric, hence
/// self-inverse.
pub fn c_basis_transform() -> Matrix4<f64> {
    let s = FRAC_1_SQRT_2;
    Matrix4::new(
        s, s, 0.0, 0.0, //
        s, -s, 0.0, 0.0, //
        0.0, 0.0, s, s, //
        0.0, 0.0, s, -s,
    )
}

/// The mode transform lifted to quadratures (each mode's `x` and `p` mix
/// identically). Maps paired a/b quadratures to c quadratures and back.
pub fn ab_quadrature_transform() -> Mat8 {
    let u = c_basis_transform();
    let mut s = Mat8::zeros();
    for i in 0..4 {
        for j in 0..4 {
            s[(2 * i, 2 * j)] = u[(i, j)];
            s[(2 * i + 1, 2 * j + 1)] = u[(i, j)];
        }
    }
    s
}

/// Standard symplectic form with `[q_i, q_j] = i Ω_ij`.
pub fn symplectic_form() -> Mat8 {
    let mut omega = Mat8::zeros();
    for m in 0..4 {
        omega[(2 * m, 2 * m + 1)] = 1.0;
        omega[(2 * m + 1, 2 * m)] = -1.0;
    }
    omega
}
