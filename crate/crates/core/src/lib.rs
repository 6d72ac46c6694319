//! Simulation and verification toolkit for polarization-entangled light
//! produced by cavity-enhanced parametric down-conversion.
//!
//! The crate has two independent ways of computing the same physics:
//!
//! * [`engine`] propagates the 8×8 quadrature covariance of the four
//!   down-converted modes under time-dependent squeezing and loss, and
//!   evaluates the polarization witness ⟨J²⟩/⟨N⟩ on the resulting Gaussian
//!   state. It scales to millions of photons.
//! * [`oracle`] simulates the same modes exactly in a truncated Fock space.
//!   It is only usable at small photon numbers, and exists to check the
//!   engine.
//!
//! [`stokes`] holds the mode conventions and observables shared by both,
//! [`witness`] the separability criterion and the imperfection thresholds,
//! and [`cli`] the scenario runner behind the `entlaser` binary.

pub mod cli;
pub mod engine;
mod error;
pub mod oracle;
pub mod stokes;
mod tolerances;
pub mod witness;

pub use error::{Error, Result};
pub use tolerances::Tolerances;
