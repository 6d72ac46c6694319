use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Fock space of dimension {dim} exceeds the budget of {budget} basis states")]
    DimensionBudget { dim: usize, budget: usize },

    #[error("{count} runs requested, budget is {budget}")]
    RunBudget { count: usize, budget: usize },

    #[error("numerical failure: {0}")]
    Numerical(NumericalFailure),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Diagnostics attached to a numerical failure.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericalFailure {
    NonFinite { t: f64 },
    QuadratureNotConverged { error_estimate: f64 },
    KrylovNotConverged { residual: f64 },
    ImaginaryResidue { residue: f64 },
    TraceDrift { drift: f64 },
}

impl fmt::Display for NumericalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonFinite { t } => write!(f, "non-finite covariance entry at t = {t}"),
            Self::QuadratureNotConverged { error_estimate } => {
                write!(f, "adaptive quadrature did not converge (error estimate {error_estimate:e})")
            }
            Self::KrylovNotConverged { residual } => {
                write!(f, "Krylov propagation did not converge (residual {residual:e})")
            }
            Self::ImaginaryResidue { residue } => write!(
                f,
                "expectation value has imaginary residue {residue:e}; operator not Hermitian or state invalid"
            ),
            Self::TraceDrift { drift } => write!(f, "loss channel changed the trace by {drift:e}"),
        }
    }
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Self::InvalidParameter { name, reason: reason.into() }
    }
}
