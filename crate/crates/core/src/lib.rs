//! Online Ramsey games on ordered graphs.
//!
//! Builder draws pairs on a dense vertex line, Painter colors them red or
//! blue. Builder wins once red contains a target ordered graph `G` or blue
//! contains a monotone path or ordered cycle. The crate provides the graph
//! model, the game engine, explicit Builder strategies with move bounds,
//! heuristic Painters and an exact solver for small instances.

pub mod board;
pub mod builders;
pub mod color;
pub mod error;
pub mod family;
pub mod game;
pub mod graph;
pub mod painters;
pub mod script;
pub mod solver;

pub use board::{ColoredBoard, Endpoint, Move, PlayedMove, VertexId};
pub use color::Color;
pub use error::{GameError, GraphError, MoveError, StrategyError};
pub use family::{build_family, GraphSpec};
pub use game::{
    play_from, play_game, replay, Avoids, BlueTarget, BuilderStrategy, Outcome, PainterStrategy,
    Referee, Transcript,
};
pub use graph::{find_embedding, Embedding, Host, OrderedGraph};
