use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point is not a declared state of the tabulated statistic")]
    UndeclaredState,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported model: {0}")]
    Unsupported(String),

    #[error("infeasible constraint: {0}")]
    Infeasible(String),

    #[error("no root in bracket: {0}")]
    NoRoot(String),

    #[error("maximum iterations ({0}) exceeded")]
    MaxIterations(usize),

    #[error("quadrature failed to converge within the configured depth")]
    QuadratureNonConvergence,

    #[error("support violation: {0}")]
    SupportViolation(String),

    #[error("zero total mass after reweighting")]
    ZeroMass,

    #[error("equal-statistic pair precondition violated: {0}")]
    PairMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
