//! Exact game values by minimax over canonical positions, optimal
//! strategies read off the memo, and best responses to fixed painters.

mod best_response;
mod policy;
mod position;
mod search;

pub use best_response::best_response;
pub use policy::{extract_policies, optimal_painter, OptimalPainter, PolicyBuilder};
pub use position::{canonicalize, CanonicalKey, End, MoveClass, Position};
pub use search::{prefer, solve, PolicyEntry, Rules, SolveResult, Solver, Stats};
