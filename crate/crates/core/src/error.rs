use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("empty alphabet")]
    EmptyAlphabet,

    #[error("invalid generator name {0:?} (expected a non-empty token over [A-Za-z0-9_])")]
    InvalidGeneratorName(String),

    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("relation degree < 2: {relation:?} has degree {degree}")]
    RelationDegree { relation: String, degree: usize },

    #[error("no relations given")]
    NoRelations,

    #[error("polynomial {index} is not homogeneous")]
    NonHomogeneous { index: usize },

    #[error("polynomial {index} is zero")]
    ZeroPolynomial { index: usize },

    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),

    #[error("generator_order must list every generator exactly once")]
    InvalidGeneratorOrder,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a walk in the graph: {0}")]
    InvalidWalk(String),

    #[error("walk {0} is not admissible")]
    NotAdmissible(String),

    #[error("enumeration exceeded the walk cap of {cap}")]
    WalkCapExceeded { cap: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Errors caused by bad input, as opposed to broken internal invariants.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
