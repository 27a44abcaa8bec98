use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dart count {0} is odd")]
    OddDartCount(usize),
    #[error("rotation is not a permutation of the darts: {0}")]
    NonPermutation(String),
    #[error("edge pairing is invalid: {0}")]
    BadPairing(String),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("edge {0} listed twice")]
    DuplicateEdge(usize),
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid corpus specification: {0}")]
    InvalidSpec(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("orientation has {found} entries but the graph has {expected} edges")]
    GraphMismatch { expected: usize, found: usize },
    #[error("enumeration guard exceeded: {0}")]
    TooLarge(String),
    #[error("modulus must be at least 1, got {0}")]
    BadModulus(i64),
    #[error("interpolated coefficients are not integral: {0}")]
    NonIntegerCoefficients(String),
    #[error("no quasipolynomial with period <= {max_period} fits the samples")]
    NoFit { max_period: usize },
    #[error("orientation is not boundary acyclic")]
    NotBoundaryAcyclic,
    #[error("malformed orientation string: {0}")]
    BadOrientation(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed or inconsistent input data.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::TooLarge(_) | Error::Io(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
