use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed field spec {0:?}: expected `Q` or `Q(sqrt <d>)`")]
    MalformedSpec(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("Q(sqrt {0}) is not totally real (need d > 1)")]
    NotTotallyReal(i64),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("place above {0} listed more than once")]
    DuplicatePlace(u64),
    #[error("invalid selector for {prime}: {reason}")]
    InvalidSelector { prime: u64, reason: String },
    #[error("tolerance {0:e} is below the supported precision")]
    ToleranceTooTight(f64),
    #[error("no rational with denominator <= {max_denominator} within {tol:e} of {x}")]
    NoConvergent { x: f64, max_denominator: u64, tol: f64 },
    #[error("more than one rational with denominator <= {max_denominator} lies within {tol:e} of {x}")]
    Ambiguous { x: f64, max_denominator: u64, tol: f64 },
    #[error("|S| = {0} is odd; a quaternion ramification set has even cardinality")]
    OddCardinality(usize),
    #[error("expected {expected} local data, got {got}")]
    MissingDatum { expected: usize, got: usize },
    #[error("local datum {index} does not match its place: {reason}")]
    DatumPlaceMismatch { index: usize, reason: String },
    #[error("invalid local datum: {0}")]
    InvalidDatum(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedSpec(_) => "MALFORMED_SPEC",
            Error::NotSquarefree(_) => "NOT_SQUAREFREE",
            Error::NotTotallyReal(_) => "NOT_TOTALLY_REAL",
            Error::UnsupportedField(_) => "UNSUPPORTED_FIELD",
            Error::NotPrime(_) => "NOT_PRIME",
            Error::DuplicatePlace(_) => "DUPLICATE_PLACE",
            Error::InvalidSelector { .. } => "INVALID_SELECTOR",
            Error::ToleranceTooTight(_) => "TOLERANCE_TOO_TIGHT",
            Error::NoConvergent { .. } => "NO_CONVERGENT",
            Error::Ambiguous { .. } => "AMBIGUOUS",
            Error::OddCardinality(_) => "ODD_CARDINALITY",
            Error::MissingDatum { .. } => "MISSING_DATUM",
            Error::DatumPlaceMismatch { .. } => "DATUM_PLACE_MISMATCH",
            Error::InvalidDatum(_) => "INVALID_DATUM",
            Error::InternalInconsistency(_) => "INTERNAL_INCONSISTENCY",
        }
    }
}
