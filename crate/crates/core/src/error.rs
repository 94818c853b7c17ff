use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero vector has no primitive direction")]
    ZeroVector,

    #[error("empty point set")]
    EmptyInput,

    #[error("polytope has dimension {dim} in an ambient lattice of rank {ambient}; a full-dimensional polytope is required")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),

    #[error("dilation factor must be a positive integer")]
    InvalidDilation,

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("{family} needs rank at least {min}, got {rank}")]
    RankTooSmall {
        family: &'static str,
        min: usize,
        rank: usize,
    },

    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("counterexample candidate: {0}")]
    CounterexampleCandidate(String),

    #[error("unknown campaign `{0}`")]
    UnknownCampaign(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::EmptyInput => 2,
            Error::ResourceGuard(_) => 3,
            Error::CounterexampleCandidate(_) => 4,
            _ => 1,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
