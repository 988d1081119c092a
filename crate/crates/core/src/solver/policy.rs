//! Strategies backed by a solver memo.

use std::sync::{Arc, Mutex};

use crate::board::{ColoredBoard, Move, VertexId};
use crate::color::Color;
use crate::error::{GameError, StrategyError};
use crate::game::{BlueTarget, BuilderStrategy, PainterStrategy};
use crate::graph::OrderedGraph;

use super::position::Position;
use super::search::{prefer, Rules, SolveResult, Solver};

type Shared = Arc<Mutex<Solver>>;

fn lock(s: &Shared) -> std::sync::MutexGuard<'_, Solver> {
    s.lock().unwrap_or_else(|e| e.into_inner())
}

/// Colors each pair to maximize the remaining game value.
#[derive(Debug, Clone)]
pub struct OptimalPainter {
    solver: Shared,
}

/// Plays a canonical-order move achieving the game value.
#[derive(Debug, Clone)]
pub struct PolicyBuilder {
    solver: Shared,
    bound: Option<u64>,
}

pub fn optimal_painter(
    red: &OrderedGraph,
    blue: BlueTarget,
    cap: usize,
) -> Result<OptimalPainter, GameError> {
    Ok(OptimalPainter {
        solver: Arc::new(Mutex::new(Solver::new(Rules::new(red, blue)?, cap))),
    })
}

pub fn extract_policies(result: SolveResult) -> (PolicyBuilder, OptimalPainter) {
    let solver = Arc::new(Mutex::new(result.solver));
    (
        PolicyBuilder {
            solver: Arc::clone(&solver),
            bound: result.value.map(|v| v as u64),
        },
        OptimalPainter { solver },
    )
}

impl OptimalPainter {
    /// Values of the red and blue replies to `{u, v}`.
    pub fn reply_values(
        &mut self,
        board: &ColoredBoard,
        u: VertexId,
        v: VertexId,
    ) -> (Option<usize>, Option<usize>) {
        let mut s = lock(&self.solver);
        let mut value = |c: Color| {
            let child = Position::from_board(&board.with_edge(u, v, c)).0;
            if s.rules().finished_by(&child, c) {
                Some(0)
            } else {
                s.value(&child)
            }
        };
        (value(Color::Red), value(Color::Blue))
    }
}

impl PainterStrategy for OptimalPainter {
    fn name(&self) -> String {
        "optimal".into()
    }

    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color {
        let (red, blue) = self.reply_values(board, u, v);
        prefer(red, blue)
    }

    fn is_positional(&self) -> bool {
        true
    }
}

impl BuilderStrategy for PolicyBuilder {
    fn name(&self) -> String {
        "optimal".into()
    }

    fn next_move(&mut self, board: &ColoredBoard) -> Result<Move, StrategyError> {
        let (pos, ids) = Position::from_board(board);
        let mut s = lock(&self.solver);
        let v = s.value(&pos).ok_or_else(|| {
            StrategyError::Exhausted(format!(
                "position {} is beyond the solved cap {}",
                pos.key(),
                s.cap()
            ))
        })?;
        let mv = s.best_move(&pos, v).ok_or_else(|| {
            StrategyError::Exhausted(format!("position {} is already decided", pos.key()))
        })?;
        Ok(Position::board_move(board, &ids, mv))
    }

    fn bound(&self) -> Option<u64> {
        self.bound
    }
}
