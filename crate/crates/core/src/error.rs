use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("arrow `{arrow}` has a {got_rows}x{got_cols} matrix, expected {rows}x{cols}")]
    ShapeMismatch {
        arrow: String,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("relation {0} does not act as zero")]
    RelationViolated(usize),
    #[error("morphism blocks do not commute with arrow `{0}`")]
    NotAMorphism(String),
    #[error("algebra is not Nakayama")]
    NotNakayama,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("isomorphism test between syzygies {first} and {second} was undetermined")]
    UndeterminedIsomorphism { first: usize, second: usize },
    #[error("bound must be at least 1")]
    ZeroBound,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
