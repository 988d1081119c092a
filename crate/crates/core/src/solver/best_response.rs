//! Shortest Builder win against a fixed positional painter.

use rustc_hash::FxHashSet;

use crate::error::StrategyError;
use crate::game::{Avoids, BlueTarget, PainterStrategy};
use crate::graph::{find_embedding, OrderedGraph};

use super::position::Position;
use super::search::Rules;

/// Fewest moves any Builder needs to beat `painter`, or `None` when no win
/// exists within `cap` moves. Breadth-first over canonical positions, so the
/// painter must answer from the board alone.
pub fn best_response(
    painter: &mut dyn PainterStrategy,
    red: &OrderedGraph,
    blue: BlueTarget,
    cap: usize,
) -> Result<Option<usize>, StrategyError> {
    if !painter.is_positional() {
        return Err(StrategyError::Precondition(format!(
            "best_response needs a positional painter, {} keeps state",
            painter.name()
        )));
    }
    let rules = Rules::new(red, blue).map_err(|e| StrategyError::Precondition(e.to_string()))?;
    // A painter that never completes `g` never lets a red supergraph of `g` appear.
    let (red_ok, blue_ok) = match painter.avoids() {
        Some(Avoids::Red(g)) => (find_embedding(rules.red(), &g, None).is_none(), true),
        Some(Avoids::Blue(t)) => (true, !blocks(t, blue)),
        None => (true, true),
    };
    if !red_ok && !blue_ok {
        return Ok(None);
    }
    let bound = |pos: &Position| rules.lower_bound_for(pos, red_ok, blue_ok);
    let root = Position::empty();
    if rules.terminal(&root) {
        return Ok(Some(0));
    }
    let mut seen = FxHashSet::default();
    seen.insert(root.key());
    let mut level = vec![root];
    for depth in 1..=cap {
        let mut next = Vec::new();
        for pos in &level {
            let (board, ids) = pos.to_board();
            for mv in pos.raw_moves() {
                let (preview, u, v) = board
                    .preview(&Position::board_move(&board, &ids, mv))
                    .expect("move classes are legal");
                let color = painter.color(&preview, u, v);
                let (child, _, _) = pos.apply(mv, color);
                if rules.finished_by(&child, color) {
                    return Ok(Some(depth));
                }
                if depth.saturating_add(bound(&child)) > cap {
                    continue;
                }
                if seen.insert(child.key()) {
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        level = next;
    }
    Ok(None)
}

/// Whether avoiding a blue `avoided` rules out a blue `target`.
fn blocks(avoided: BlueTarget, target: BlueTarget) -> bool {
    match (avoided, target) {
        (BlueTarget::Path { n: a }, BlueTarget::Path { n: b }) => a <= b,
        (BlueTarget::Path { n: a }, BlueTarget::Cycle { n: b }) => a <= b,
        (BlueTarget::Cycle { n: a }, BlueTarget::Cycle { n: b }) => a == b,
        (BlueTarget::Cycle { .. }, BlueTarget::Path { .. }) => false,
    }
}
