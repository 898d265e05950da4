use thiserror::Error;

/// Failures raised by the exact algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,

    /// The construction needs an invertible `[n]_q!` but `[k/2]_q = 0`.
    #[error("degenerate parameter at k = {k}: {detail}")]
    DegenerateParameter { k: u32, detail: String },

    #[error("cannot add scalars with different radical monomials ({left} vs {right})")]
    IncompatibleRadicals { left: String, right: String },

    /// The q-difference quotient divides by `q - q^-1`, which vanishes at k = 2.
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two routes to the same quantity produced different exact results.
    #[error("identity mismatch: {0}")]
    IdentityMismatch(String),
}

impl AlgebraError {
    pub(crate) fn degenerate(k: u32, detail: impl Into<String>) -> Self {
        AlgebraError::DegenerateParameter {
            k,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
