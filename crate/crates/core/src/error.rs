use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid flag type: {0}")]
    InvalidType(String),

    #[error("entries are not strictly decreasing at position {position} ({left} then {right})")]
    NotDecreasing {
        position: usize,
        left: i64,
        right: i64,
    },

    #[error("block lengths sum to {expected} but {found} entries were given")]
    LengthMismatch { expected: usize, found: usize },

    #[error("entry {0} exceeds the supported magnitude")]
    EntryOutOfRange(i128),

    #[error("partition cannot be dualized: {0}")]
    NotDualizable(String),

    #[error("invalid parameters for family {family}: {reason}")]
    FamilyParams { family: String, reason: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("partition {0} is not Ulrich")]
    NotUlrich(String),

    #[error("analysis precondition failed: {0}")]
    Analysis(String),

    #[error("invalid weight: {0}")]
    Weight(String),

    #[error("search rejected: {0}")]
    Search(String),

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(format!("malformed JSON: {e}"))
    }
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn family(family: &str, reason: impl Into<String>) -> Self {
        Error::FamilyParams {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}
