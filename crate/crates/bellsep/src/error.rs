//! Error types shared by every module in the crate.

/// Errors produced by state construction, linear algebra, and analysis.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument violates a documented precondition (range, dimension,
    /// index shape, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation is defined only for a different party size `p`.
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    /// The coefficients do not describe a positive-semidefinite unit-trace
    /// operator.
    #[error("not a state: {0}")]
    NotAState(String),

    /// A separable decomposition was requested for coefficients outside the
    /// criterion bound.
    #[error("criterion violated: {0}")]
    CriterionViolated(String),

    /// An iterative numeric routine failed to converge.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// A runtime self-check failed; indicates a bug, not bad input.
    #[error("internal consistency: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
