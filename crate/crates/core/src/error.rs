use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid minor selector: {0}")]
    InvalidSelector(String),

    #[error("invalid minor order {order} for a matrix of dimension {n}")]
    InvalidOrder { order: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be at least {min}x{min}, got {n}x{n}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("entry ({row}, {col}) is negative")]
    NonnegativityViolated { row: usize, col: usize },

    #[error("parameter {0} must be strictly positive")]
    PositivityViolated(String),

    #[error("the zero polynomial has no twist")]
    ZeroPolynomial,

    #[error("polynomial has degree zero")]
    DegreeZero,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("matrix is not of class n+ (certified within power cap {power_cap})")]
    NotClassNPlus { power_cap: usize },

    #[error("eigenvalue moduli are not strictly decreasing")]
    ModulusTie,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("tolerance must be strictly positive")]
    InvalidTolerance,

    #[error("cannot parse number {0:?}")]
    ParseNumber(String),

    #[error("stage {stage} failed: {detail}")]
    StageFailed { stage: String, detail: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
