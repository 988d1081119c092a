use thiserror::Error;

use crate::board::VertexId;
use crate::game::Transcript;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("cannot parse graph spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("bad parameter for {family}: {reason}")]
    Parameter { family: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("gap {gap} out of range (board has {vertices} vertices)")]
    BadGap { gap: usize, vertices: usize },
    #[error("endpoints resolve to the same vertex")]
    SameVertex,
    #[error("left endpoint resolves to the right of the right endpoint")]
    Reversed,
    #[error("pair {0}-{1} already drawn")]
    AlreadyDrawn(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("builder fault after {moves} moves: {reason}")]
    BuilderFault {
        moves: usize,
        reason: String,
        transcript: Box<Transcript>,
    },
    #[error("illegal move after {moves} moves: {source}")]
    IllegalMove {
        moves: usize,
        source: MoveError,
        transcript: Box<Transcript>,
    },
    #[error("bad target: {0}")]
    Target(String),
    #[error("inconsistent transcript: {0}")]
    Inconsistent(String),
    #[error("bad transcript: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("strategy script ended without a decision: {0}")]
    Exhausted(String),
    #[error("oracle failure in state {state}: {reason}")]
    Oracle { state: String, reason: String },
    #[error("strategy thread stopped unexpectedly")]
    Disconnected,
}
