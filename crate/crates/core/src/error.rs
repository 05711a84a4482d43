use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid decorated permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Grassmann necklace: {0}")]
    InvalidNecklace(String),
    #[error("empty input")]
    EmptyInput,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a matroid: {0}")]
    NotMatroid(String),
    #[error("not a positroid")]
    NotPositroid,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not perfectly orientable")]
    NotOrientable,
    #[error("closed strand through half-edges {0:?}")]
    ClosedStrand(Vec<usize>),
    #[error("graph is not reduced: {0}")]
    NotReduced(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("move pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("enumeration cap of {0} graphs exceeded")]
    CapExceeded(usize),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("collection is not weakly separated: {0}")]
    NotWeaklySeparated(String),
    #[error("collection is not maximal: {0}")]
    NotMaximal(String),
    #[error("invalid vertex data: {0}")]
    InvalidVertexData(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("nonpositive torus scalar on edge {0}")]
    NonPositiveScalar(usize),
    #[error("graph is not complete of type ({k},{n})")]
    NotComplete { k: usize, n: usize },
    #[error("decorated permutation has fixed points {0:?}")]
    FixedPointsPresent(Vec<usize>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error envelope.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidNecklace(_) => "InvalidNecklace",
            Error::EmptyInput => "EmptyInput",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::NotMatroid(_) => "NotMatroid",
            Error::NotPositroid => "NotPositroid",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::NotOrientable => "NotOrientable",
            Error::ClosedStrand(_) => "ClosedStrand",
            Error::NotReduced(_) => "NotReduced",
            Error::TypeMismatch(_) => "TypeMismatch",
            Error::PatternMismatch(_) => "PatternMismatch",
            Error::CapExceeded(_) => "CapExceeded",
            Error::BoundExceeded(_) => "BoundExceeded",
            Error::NotWeaklySeparated(_) => "NotWS",
            Error::NotMaximal(_) => "NotMaximal",
            Error::InvalidVertexData(_) => "InvalidVertexData",
            Error::IndexMismatch(_) => "IndexMismatch",
            Error::NonPositiveScalar(_) => "NonPositiveScalar",
            Error::NotComplete { .. } => "NotComplete",
            Error::FixedPointsPresent(_) => "FixedPointsPresent",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
