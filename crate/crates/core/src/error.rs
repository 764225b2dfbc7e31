use thiserror::Error;

/// Errors raised by the exact arithmetic layers and the closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,
    #[error("both polynomials are zero; gcd is undefined")]
    ZeroGcd,
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),
    #[error("elements belong to different cyclotomic fields (conductors {0} and {1})")]
    FieldMismatch(usize, usize),
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("truncation order {have} is too small, need at least {need}")]
    OrderTooSmall { have: usize, need: usize },
    #[error("invalid constant term: {0}")]
    ConstantTerm(String),
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("quotient is not integral: {0}")]
    NonIntegral(String),
    #[error("sequence is not non-increasing positive integers")]
    NonMonotone,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix order {n} exceeds the brute-force limit {limit}")]
    SizeOverLimit { n: usize, limit: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("coincident roots x_{row} = y_{col}: entry is singular")]
    SingularEntry { row: usize, col: usize },
    #[error("zeta is not a primitive {0}-th root of unity")]
    ZetaOrderMismatch(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("jet budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("twisted values with different alpha exponents cannot be added ({0} vs {1})")]
    MixedTwist(usize, usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
