use thiserror::Error;

/// Errors produced by the group engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("empty generator list")]
    NoGenerators,

    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: String,
        cap: usize,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("element is not in the group")]
    NotInGroup,

    #[error("class index {index} out of range (group has {count} classes)")]
    ClassIndexOutOfRange { index: usize, count: usize },

    #[error("unknown class label `{0}`")]
    UnknownClassLabel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("catalog line {line}: {reason}")]
    CatalogParse { line: usize, reason: String },

    #[error("catalog entry {name}: expected order {expected}, generators give {actual}")]
    OrderMismatch {
        name: String,
        expected: String,
        actual: String,
    },

    #[error("catalog has no entry named `{0}`")]
    UnknownGroup(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: impl ToString, cap: usize) -> Self {
        Error::CapExceeded {
            what,
            size: size.to_string(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
