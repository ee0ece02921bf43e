use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CableError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero while evaluating continued fraction {0:?}")]
    DivisionByZero(Vec<i64>),
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("trivial torus knot (bounds a disk): {0}")]
    TrivialKnot(String),
    #[error("invalid cable coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("invalid stabilization: {0}")]
    InvalidStabilization(String),
    #[error("resolution slope error: {0}")]
    ResolutionSlope(String),
    #[error("surgery destroys the fibration: {0}")]
    FibrationDestroyed(String),
    #[error("unresolved curve `{0}`")]
    UnresolvedCurve(String),
    #[error("generator cannot be expanded into nonseparating twists: {0}")]
    NonExpandable(String),
    #[error("relation `{0}` fails the homology oracle")]
    OracleGate(String),
    #[error("rewrite step {step} failed: {reason}")]
    Rewrite { step: usize, reason: String },
    #[error("intersection data inconsistent: {0}")]
    Inconsistent(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("page mismatch: {0}")]
    PageMismatch(String),
    #[error("data error: {0}")]
    Data(String),
}

impl CableError {
    /// Validation-class errors map to CLI exit code 2, the rest to 1.
    pub fn is_validation(&self) -> bool {
        !matches!(self, CableError::Data(_) | CableError::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, CableError>;
