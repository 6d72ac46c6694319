//! Mode conventions and the polarization observables shared by the Gaussian
//! engine and the Fock-space oracle.
//!
//! Two mode bases appear throughout. The physical modes are `a_h, a_v, b_h,
//! b_v` (arm a or b, horizontal or vertical polarization). The squeezer
//! modes are
//!
//! ```text
//! c1 = (a_h + b_v)/√2    c2 = (a_h − b_v)/√2
//! c3 = (a_v + b_h)/√2    c4 = (a_v − b_h)/√2
//! ```
//!
//! in which the pair-creation Hamiltonian splits into four independent
//! single-mode squeezers. Quadratures are `x = (c + c†)/√2`,
//! `p = −i(c − c†)/√2`, so `[x, p] = i` and the vacuum variance is ½.

pub(crate) mod fock;
mod forms;
mod modes;

pub use fock::{build_fock_operators, FockBasis, FockOperatorSet, SpMat};
pub use forms::{arm_number_forms, jay_quadratic_forms, number_quadratic_form, QuadraticForm};
pub use modes::{
    ab_quadrature_transform, c_basis_transform, symplectic_form, CMode, Mode, Quadrature, Mat8,
    NQ,
};
