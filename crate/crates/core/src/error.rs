use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape: {0}")]
    Shape(String),
    #[error("field: {0}")]
    Field(String),
    #[error("quiver: {0}")]
    Quiver(String),
    #[error("relation: {0}")]
    Relation(String),
    #[error("not-finite-dimensional-below-cap: {0}")]
    NotFiniteDimensional(String),
    #[error("inadmissible: {0}")]
    Inadmissible(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("resolution exceeds length {0}")]
    ResolutionExceedsLength(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown corpus entry `{0}`")]
    UnknownCorpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
