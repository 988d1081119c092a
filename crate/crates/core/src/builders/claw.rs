//! The claw strategy: grow a blue path from its tip, collecting leftovers.

use crate::color::Color;
use crate::script::{Driver, Step, Vx};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Path grows rightward; leftovers are right endpoints of red edges.
    Forward,
    /// Path grows leftward; leftovers are left endpoints of red edges.
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClawOutcome {
    /// Blue path in line order.
    pub path: Vec<Vx>,
    /// Leftover vertices in line order.
    pub leftovers: Vec<Vx>,
    pub steps: usize,
}

/// Runs the claw from `start` until the path has `k0` vertices, there are
/// `l0` leftovers, or `max_steps` steps were taken. Every new vertex goes
/// just beyond the last tracked one, so in [`Direction::Reverse`] the whole
/// run stays right of anything left of `start`.
pub fn claw(
    q: &mut Driver,
    dir: Direction,
    start: Vx,
    k0: usize,
    l0: usize,
    max_steps: Option<usize>,
) -> Step<ClawOutcome> {
    let mut path = vec![start];
    let mut leftovers = Vec::new();
    let mut frontier = start;
    let mut steps = 0;
    while path.len() < k0 && leftovers.len() < l0 && max_steps.is_none_or(|m| steps < m) {
        let tip = *path.last().unwrap();
        let next = match dir {
            Direction::Forward => q.after(frontier),
            Direction::Reverse => q.before(frontier),
        };
        frontier = next;
        steps += 1;
        match q.draw(tip, next)? {
            Color::Blue => path.push(next),
            Color::Red => leftovers.push(next),
        }
    }
    if dir == Direction::Reverse {
        path.reverse();
        leftovers.reverse();
    }
    Ok(ClawOutcome {
        path,
        leftovers,
        steps,
    })
}
