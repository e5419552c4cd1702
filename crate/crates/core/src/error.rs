use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by validated constructors and operations.
///
/// `ErrorKind` separates unparsable text from violated mathematical
/// preconditions so callers (the CLI in particular) can map them to
/// distinct exit statuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("determinant must be +1 or -1, got {0}")]
    NotUnimodular(BigInt),

    #[error("determinant must be +1, got {0}")]
    NotSpecialLinear(BigInt),

    #[error("not an involution: {0}")]
    NotInvolution(String),

    #[error("zero vector has no primitive class")]
    ZeroVector,

    #[error("entries must be coprime, gcd is {0}")]
    NotPrimitive(BigInt),

    #[error("classes must be distinct")]
    DegeneratePair,

    #[error("matrix is not hyperbolic: trace {0}")]
    NotHyperbolic(BigInt),

    #[error("no quadratic fixed point: {0}")]
    NoQuadraticFixedPoint(String),

    #[error("invalid quadratic surd: {0}")]
    InvalidSurd(&'static str),

    #[error("invalid cutting word: {0}")]
    BadCycleWord(String),

    #[error("bound must be at least 1")]
    BadBound,

    #[error("degree {deg} is incompatible with the matrix: expected {expected} mod 12")]
    DegreeMismatch { deg: i64, expected: u8 },

    #[error("closed-fiber bundle has no boundary open book")]
    ClosedFiber,

    #[error("factorization must have exactly two twists, got {0}")]
    LengthNotTwo(usize),

    #[error("factorizations have different total monodromy")]
    ProductMismatch,

    #[error("move position {index} out of range 1..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("internal reduction failure: {0}")]
    ReductionFailed(String),
}

/// Coarse classification used for CLI exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Text that does not parse.
    BadInput,
    /// Well-formed input that violates an operation's precondition.
    Precondition,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::BadInput,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
