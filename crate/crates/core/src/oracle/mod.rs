//! Exact simulation of the four modes in a truncated Fock space.
//!
//! Everything here is brute force: states are full amplitude vectors or
//! dense density matrices, operators are sparse matrices built from ladder
//! operators. It only reaches a few photons per mode, which is enough to
//! check every closed-form statement the Gaussian engine relies on.

mod arm;
mod expect;
mod hamiltonian;
mod ideal;
mod krylov;
mod loss;
mod random;
mod state;

pub use arm::ArmState;
pub use expect::{check_j_bound, expectation, spin_vector, FockExpect, JBoundCheck};
pub use hamiltonian::build_hamiltonian;
pub use ideal::{build_ideal_state, ideal_cutoff, singlet_block};
pub use krylov::{evolve_exact, propagate};
pub use loss::apply_loss_channel;
pub use random::{random_spin_state, seeded_rng};
pub use state::{Ensemble, FockDensity, FockState};
