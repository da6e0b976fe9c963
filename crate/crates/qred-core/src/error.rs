use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("unknown family letter {0:?}")]
    UnknownFamily(String),
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset {0} is not connected")]
    Disconnected(String),
    #[error("subsets {0} and {1} are connected to each other")]
    NotOrthogonal(String, String),
    #[error("elements belong to different root systems")]
    MixedRootSystems,
    #[error("missing coefficient for cascade node {0}")]
    MissingCoefficient(String),
    #[error("zero coefficient for cascade node {0}")]
    ZeroCoefficient(String),
    #[error("degenerate coefficients: {0} vanishes")]
    Degenerate(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
