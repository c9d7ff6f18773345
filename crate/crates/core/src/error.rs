use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Errors raised by graph constructors, operations and file parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("edge {0} is not in the graph")]
    EdgeAbsent(Edge),
    #[error("vertex {vertex} has degree {degree}, at least 2 required")]
    DegreeTooSmall { vertex: Vertex, degree: usize },
    #[error("({support}, {leaf}) is not a leaf-edge")]
    NotLeafEdge { support: Vertex, leaf: Vertex },
    #[error("both leaf-edges hang on the same support vertex {0}")]
    SharedSupport(Vertex),
    #[error("supports {0} and {1} are already adjacent")]
    SupportsAdjacent(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has no vertex of degree at least 2")]
    NoNonLeafVertex,
    #[error("vertex {0} is uncolored")]
    UncoloredVertex(Vertex),
    #[error("edge {0} is uncolored")]
    UncoloredEdge(Edge),
    #[error("coloring assigns a color to {0}, which is not an edge of the graph")]
    StrayEdgeColor(Edge),
    #[error("color {color} outside palette [1, {palette}]")]
    ColorOutOfRange { color: u32, palette: u32 },
    #[error("coloring is not a proper total coloring")]
    NotProperTotal,
    #[error("leaf-edges are not color-compatible")]
    Incompatible,
    #[error("star needs at least 2 leaves, got {0}")]
    StarTooSmall(usize),
    #[error("haired cycle needs at least 3 spine vertices, got {0}")]
    SpineTooShort(usize),
    #[error("pendant leaf count {0} is odd, no perfect pairing exists")]
    OddPendantCount(usize),
    #[error("no pairing of pendant leaves avoids multi-edges")]
    NoValidPairing,
    #[error("invalid uniform system parameters: {0}")]
    InvalidUniformParameters(String),
    #[error("invalid coincide script: {0}")]
    InvalidScript(String),
    #[error("topcode entry {0} exceeds 99")]
    EntryTooLarge(u32),
    #[error("invalid topcode matrix: {0}")]
    InvalidMatrix(String),
    #[error("number string of length {len} cannot be cut into {segments} segments of 1-2 digits")]
    StringLength { len: usize, segments: usize },
    #[error("invalid number string: {0}")]
    InvalidNumberString(String),
    #[error("tree is not a caterpillar")]
    NotCaterpillar,
    #[error("empty basis")]
    EmptyBasis,
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("{0} is too large to enumerate")]
    TooLarge(String),
    #[error("inconsistent graph: {0}")]
    Inconsistent(&'static str),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
