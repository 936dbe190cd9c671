use thiserror::Error;

/// Errors raised by graph construction, parsing, operations and solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("{family} requires n >= {min}, got {n}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("coloring parse error at byte {offset}: {reason}")]
    ColoringParse { offset: usize, reason: String },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("color class {class} out of range ({count} classes)")]
    ClassOutOfRange { class: usize, count: usize },
    #[error("class count k = {k} outside 1..={n}")]
    ClassCountOutOfRange { k: usize, n: usize },
    #[error("order {n} exceeds the {what} guard of {max}")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("subdivision length must be at least 1")]
    ZeroSubdivision,
    #[error("base coloring is not a domination coloring of the source graph")]
    BaseNotDomination,
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
