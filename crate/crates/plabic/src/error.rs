//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced while parsing, validating or computing on disk graphs.
///
/// `Internal` is reserved for violated invariants that indicate a bug in this
/// crate rather than bad input; the CLI maps it to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("same-color edge `{edge}` joins two {color} vertices")]
    SameColorEdge { edge: String, color: &'static str },

    #[error("edge `{0}` joins two boundary vertices")]
    BoundaryToBoundaryEdge(String),

    #[error("edge `{0}` is a loop")]
    LoopEdge(String),

    #[error("boundary vertex b{vertex} has degree {degree}, expected 1")]
    BoundaryDegree { vertex: usize, degree: usize },

    #[error("rotation for vertex `{vertex}`: {msg}")]
    BadRotation { vertex: String, msg: String },

    #[error("non-planar rotation system: Euler count V-E+F = {got}, expected 2")]
    NonPlanar { got: i64 },

    #[error("inconsistent type: formula gives {msg}")]
    InconsistentType { msg: String },

    #[error("weights must be positive: edge `{0}`")]
    NonPositiveWeight(String),

    #[error("no perfect orientation with source set {0}")]
    NoSuchOrientation(String),

    #[error("invalid flow: {0}")]
    InvalidFlow(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("graph too large for this operation: {0}")]
    TooLarge(String),

    #[error("empty polytope: {0}")]
    EmptyPolytope(String),

    #[error("coordinate vector does not match the edge set: {0}")]
    BadCoordinates(String),

    #[error("internal invariant failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
