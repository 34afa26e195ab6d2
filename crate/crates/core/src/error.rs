use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("terminal sides overlap at vertex {0}")]
    OverlappingSides(usize),
    #[error("terminal side {0} is empty")]
    EmptySide(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("brute-force oracle limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("elimination ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("elimination ordering is not perfect at vertex {0}")]
    NotPerfect(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing problem line")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line `{0}`")]
    BadLine(String),
    #[error("vertex id {id} out of range 1..={n}")]
    IdOutOfRange { id: usize, n: usize },
    #[error("header declares {declared} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("bag index {0} out of range")]
    BagOutOfRange(usize),
}
