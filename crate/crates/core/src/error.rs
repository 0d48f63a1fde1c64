use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not self-reciprocal")]
    NotSelfReciprocal,
    #[error("polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("bound H must exceed 1, got {0}")]
    BoundTooSmall(String),
    #[error("root layout violation: {0}")]
    LayoutViolation(String),
    #[error("angle intervals overlap")]
    OverlappingIntervals,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("unsupported Jacobi parameters a={a}, b={b}")]
    UnsupportedParams { a: i64, b: i64 },
    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("correlation points must be distinct")]
    DuplicatePoints,
    #[error("point {0} outside (-1, 1)")]
    OutOfDomain(f64),
    #[error("need 1 <= k <= m, got k={k}, m={m}")]
    BadPointCount { m: usize, k: usize },
    #[error("closed form only printed for m in {{2,3,4}}, got {0}")]
    UnsupportedM(usize),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("finite-difference step {0} is too small")]
    SingularStencil(f64),
    #[error("quadrature did not reach {tol:e} (last difference {diff:e})")]
    ToleranceNotMet { tol: f64, diff: f64 },
    #[error("census for m={m}, H={bound} has no Salem numbers")]
    EmptyCensus { m: usize, bound: String },
    #[error("coefficient does not fit in 64 bits")]
    CoefficientOverflow,
    #[error("census cache {path}: {reason}")]
    BadCache { path: String, reason: String },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
