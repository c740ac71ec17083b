use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} is outside a universe of {size} vertices")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("at most {max} vertices are supported, got {got}")]
    TooManyVertices { max: usize, got: usize },

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("non-face list is not an antichain: {0} contains {1}")]
    NotAntichain(String, String),

    #[error("the empty set cannot be a minimal non-face of a non-void complex")]
    EmptyNonface,

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("dimension {dim} is outside the range -1..={max}")]
    DimensionOutOfRange { dim: i32, max: i32 },

    #[error("order is not a permutation of the complex's {0}")]
    NotAPermutation(&'static str),

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("complex has ghost vertices: {0}")]
    GhostVertices(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("document must contain exactly one of `facets` or `nonfaces`")]
    AmbiguousForm,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
