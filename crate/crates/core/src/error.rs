use thiserror::Error;

/// Everything that can go wrong while building fields, elements and matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible over the prime field")]
    Reducible(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of size {0} exceeds the supported ceiling of 2^40 elements")]
    FieldTooLarge(String),
    #[error("operands belong to different fields ({0} and {1})")]
    MixedFields(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("x^2 = 1, so x^2 - 1 has no inverse")]
    SingularParameter,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension must be at least {min}, got {n}")]
    DimensionTooSmall { n: usize, min: usize },
    #[error("matrix is not upper triangular (nonzero entry at row {0}, column {1})")]
    NotTriangular(usize, usize),
    #[error("field is infinite")]
    InfiniteField,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for malformed textual input, as opposed to well-formed input
    /// violating a mathematical precondition.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::NotPrime(_)
                | Error::Reducible(_)
                | Error::InvalidModulus(_)
                | Error::FieldTooLarge(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
