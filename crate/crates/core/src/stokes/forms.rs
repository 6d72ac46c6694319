use super::modes::{ab_quadrature_transform, CMode, Mat8, Mode, Quadrature, NQ};
use nalgebra::SVector;

/// An observable that is quadratic in the c-basis quadratures,
/// `O = ½ qᵀ G q + c₀`, with symmetric `G` and symmetric operator ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    pub matrix: Mat8,
    pub constant: f64,
}

impl QuadraticForm {
    pub fn zero() -> Self {
        Self { matrix: Mat8::zeros(), constant: 0.0 }
    }

    /// Value at a classical phase-space point.
    pub fn evaluate(&self, q: &SVector<f64, NQ>) -> f64 {
        0.5 * (q.transpose() * self.matrix * q)[(0, 0)] + self.constant
    }

    /// Adds `coeff · a·b` to the observable, keeping `G` symmetric.
    fn add_product(&mut self, coeff: f64, a: Quadrature, b: Quadrature) {
        let (i, j) = (a.index(), b.index());
        if i == j {
            self.matrix[(i, i)] += 2.0 * coeff;
        } else {
            self.matrix[(i, j)] += coeff;
            self.matrix[(j, i)] += coeff;
        }
    }
}

/// The total Stokes operators `(J_z, J_x, J_y)` as quadratic forms:
///
/// ```text
/// J_z = ½( x1x2 + p1p2 − x3x4 − p3p4)
/// J_x = ½( x1x3 + p1p3 + x2x4 + p2p4)
/// J_y = ½(−x1p4 + x4p1 − x2p3 + x3p2)
/// ```
pub fn jay_quadratic_forms() -> (QuadraticForm, QuadraticForm, QuadraticForm) {
    use CMode::*;
    use Quadrature::{P, X};
    let build = |terms: &[(f64, Quadrature, Quadrature)]| {
        let mut form = QuadraticForm::zero();
        for &(c, a, b) in terms {
            form.add_product(0.5 * c, a, b);
        }
        form
    };
    let jz = build(&[
        (1.0, X(C1), X(C2)),
        (1.0, P(C1), P(C2)),
        (-1.0, X(C3), X(C4)),
        (-1.0, P(C3), P(C4)),
    ]);
    let jx = build(&[
        (1.0, X(C1), X(C3)),
        (1.0, P(C1), P(C3)),
        (1.0, X(C2), X(C4)),
        (1.0, P(C2), P(C4)),
    ]);
    let jy = build(&[
        (-1.0, X(C1), P(C4)),
        (1.0, X(C4), P(C1)),
        (-1.0, X(C2), P(C3)),
        (1.0, X(C3), P(C2)),
    ]);
    (jz, jx, jy)
}

/// Total photon number `N = ½ Σ (x² + p² − 1)`.
pub fn number_quadratic_form() -> QuadraticForm {
    QuadraticForm { matrix: Mat8::identity(), constant: -2.0 }
}

/// Per-arm photon numbers `(N_A, N_B)` expressed in c-basis quadratures.
pub fn arm_number_forms() -> (QuadraticForm, QuadraticForm) {
    let s = ab_quadrature_transform();
    let arm = |in_a: bool| {
        let mut g = Mat8::zeros();
        for m in Mode::ALL.into_iter().filter(|m| m.is_arm_a() == in_a) {
            let k = m.paired_slot();
            g[(2 * k, 2 * k)] = 1.0;
            g[(2 * k + 1, 2 * k + 1)] = 1.0;
        }
        QuadraticForm { matrix: s * g * s, constant: -1.0 }
    };
    (arm(true), arm(false))
}
