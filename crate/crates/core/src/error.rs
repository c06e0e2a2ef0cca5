use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("algebra has no identity element")]
    NotUnital,
    #[error("subspace is not closed under the Lie bracket")]
    NotLieClosed,
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared identity does not act as identity on basis vector {0}")]
    BadIdentity(usize),
    #[error("element does not lie in the radical")]
    NotInRadical,
    #[error("subspace is not a torus")]
    NotTorus,
    #[error("algebra is not central simple: {0}")]
    NotCentralSimple(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("enumeration of {size} elements exceeds the limit of {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },
    #[error("operation requires a finite base field")]
    NotFiniteField,
    #[error("invalid group order {0}")]
    InvalidOrder(usize),
    #[error("index set is not a subgroup")]
    NotSubgroup,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("bipartitions need n >= 2, got {0}")]
    InvalidN(usize),
    #[error("instance is outside the brute-force oracle bounds")]
    TooLarge,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}
