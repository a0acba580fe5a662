use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("signature length {got} does not match edge count {expected}")]
    SignatureLength { expected: usize, got: usize },
    #[error("color set size must be positive")]
    EmptyColorSet,
    #[error("coloring domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("anchor color {anchor} is not in the color pair")]
    AnchorNotInPair { anchor: i32 },
    #[error("signed graphs have different underlying graphs")]
    UnderlyingGraphMismatch,
    #[error("graph is not regular")]
    NotRegular,
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("graph is not a cactus: {0}")]
    NotACactus(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is a cycle")]
    IsACycle,
    #[error("graph is not a wheel: {0}")]
    NotAWheel(String),
    #[error("graph is not a necklace: {0}")]
    NotANecklace(String),
    #[error("graph is not complete bipartite")]
    NotCompleteBipartite,
    #[error("complete bipartite graph has equal parts ({0}, {0}); no constructive coloring known")]
    EqualParts(usize),
    #[error("budget exceeded: {what} = {value} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("signature index {index} out of range for {edges} edges")]
    IndexOutOfRange { index: u128, edges: usize },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("header mismatch: {0}")]
    HeaderMismatch(String),
    #[error("bad sign token {token:?} at line {line}")]
    BadSign { line: usize, token: String },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
