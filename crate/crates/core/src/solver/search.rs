//! Iterative-deepening minimax over canonical positions.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::color::Color;
use crate::error::GameError;
use crate::game::{BlueTarget, Referee};
use crate::graph::{contains_ordered_cycle, find_embedding, longest_monotone_path, OrderedGraph};

use super::position::{CanonicalKey, End, MoveClass, Position};

/// Win conditions evaluated on positions.
#[derive(Debug, Clone)]
pub struct Rules {
    red: OrderedGraph,
    blue: BlueTarget,
}

impl Rules {
    pub fn new(red: &OrderedGraph, blue: BlueTarget) -> Result<Self, GameError> {
        let referee = Referee::new(red, blue)?;
        Ok(Rules {
            red: referee.red().clone(),
            blue,
        })
    }

    pub fn red(&self) -> &OrderedGraph {
        &self.red
    }

    pub fn blue(&self) -> BlueTarget {
        self.blue
    }

    pub fn red_done(&self, pos: &Position) -> bool {
        pos.count(Color::Red) >= self.red.edge_count()
            && find_embedding(pos, &self.red, Some(Color::Red)).is_some()
    }

    pub fn blue_done(&self, pos: &Position) -> bool {
        match self.blue {
            BlueTarget::Path { n } => longest_monotone_path(pos, Color::Blue).0 >= n,
            BlueTarget::Cycle { n } => {
                pos.count(Color::Blue) >= n && contains_ordered_cycle(pos, n, Color::Blue)
            }
        }
    }

    pub fn terminal(&self, pos: &Position) -> bool {
        self.red_done(pos) || self.blue_done(pos)
    }

    /// Whether the last pair drawn, in `color`, ended the game (the position
    /// before it was not terminal).
    pub fn finished_by(&self, pos: &Position, color: Color) -> bool {
        match color {
            Color::Red => self.red_done(pos),
            Color::Blue => self.blue_done(pos),
        }
    }

    /// Admissible lower bound on the moves still needed from a non-terminal
    /// position: every further move adds one edge, and a finished red copy or
    /// blue target needs all its edges.
    pub fn lower_bound(&self, pos: &Position) -> usize {
        self.lower_bound_for(pos, true, true)
    }

    /// [`Rules::lower_bound`] counting only the sides that can still win;
    /// `usize::MAX` when neither can.
    pub fn lower_bound_for(&self, pos: &Position, red_ok: bool, blue_ok: bool) -> usize {
        let red = if red_ok {
            self.red.edge_count().saturating_sub(pos.count(Color::Red))
        } else {
            usize::MAX
        };
        let blue = match self.blue {
            _ if !blue_ok => usize::MAX,
            BlueTarget::Path { n } => (n - 1).saturating_sub(blue_segments(pos)),
            BlueTarget::Cycle { n } => n.saturating_sub(pos.count(Color::Blue)),
        };
        red.min(blue).max(1)
    }
}

/// Most blue edges on a chain of vertex-disjoint blue monotone paths placed
/// left to right, i.e. the blue edges any future monotone path can reuse.
fn blue_segments(pos: &Position) -> usize {
    let m = pos.m();
    let mut best = vec![0usize; m];
    let mut prefix = 0;
    for j in 0..m {
        best[j] = prefix;
        for i in 0..j {
            if pos.color(i, j) == Some(Color::Blue) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
        prefix = prefix.max(best[j]);
    }
    prefix
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: u8,
    hi: u8,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub states: usize,
    pub hits: u64,
    pub expanded: u64,
}

/// Memoized solver for one pair of targets.
#[derive(Clone)]
pub struct Solver {
    rules: Rules,
    cap: usize,
    memo: FxHashMap<CanonicalKey, Bounds>,
    hits: u64,
    expanded: u64,
}

impl fmt::Debug for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Solver")
            .field("rules", &self.rules)
            .field("cap", &self.cap)
            .field("stats", &self.stats())
            .finish()
    }
}

impl Solver {
    pub fn new(rules: Rules, cap: usize) -> Self {
        Solver {
            rules,
            cap: cap.min(250),
            memo: FxHashMap::default(),
            hits: 0,
            expanded: 0,
        }
    }

    pub fn rules(&self) -> &Rules {
        &self.rules
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn stats(&self) -> Stats {
        Stats {
            states: self.memo.len(),
            hits: self.hits,
            expanded: self.expanded,
        }
    }

    /// Moves in search order: those touching the end of a longest blue path
    /// first, then canonical order.
    pub fn ordered_moves(&self, pos: &Position) -> Vec<MoveClass> {
        let mut moves = pos.successor_moves();
        let (len, path) = longest_monotone_path(pos, Color::Blue);
        if len >= 2 {
            let tip = *path.last().expect("non-empty path");
            let touches = |mv: &MoveClass| mv.left == End::Old(tip) || mv.right == End::Old(tip);
            moves.sort_by_key(|mv| !touches(mv));
        }
        moves
    }

    /// Whether Builder can force a win from the non-terminal `pos` within `d` moves.
    pub fn win_within(&mut self, pos: &Position, d: usize) -> bool {
        if d == 0 {
            return false;
        }
        let key = pos.key();
        if let Some(b) = self.memo.get(&key) {
            self.hits += 1;
            if usize::from(b.hi) <= d {
                return true;
            }
            if usize::from(b.lo) > d {
                return false;
            }
        }
        let h = self.rules.lower_bound(pos);
        if h > d {
            self.record(key, h, usize::MAX);
            return false;
        }
        self.expanded += 1;
        for mv in self.ordered_moves(pos) {
            if self.forces(pos, mv, d - 1) {
                self.record(key, 0, d);
                return true;
            }
        }
        self.record(key, d + 1, usize::MAX);
        false
    }

    /// Whether both colors of `mv` leave a position won within `d` moves.
    pub fn forces(&mut self, pos: &Position, mv: MoveClass, d: usize) -> bool {
        [Color::Blue, Color::Red].into_iter().all(|c| {
            let (child, _, _) = pos.apply(mv, c);
            self.rules.finished_by(&child, c) || self.win_within(&child, d)
        })
    }

    fn record(&mut self, key: CanonicalKey, lo: usize, hi: usize) {
        let clamp = |x: usize| u8::try_from(x).unwrap_or(u8::MAX);
        let e = self
            .memo
            .entry(key)
            .or_insert(Bounds { lo: 0, hi: u8::MAX });
        e.lo = e.lo.max(clamp(lo));
        e.hi = e.hi.min(clamp(hi));
    }

    /// Exact number of moves Builder needs from `pos`, or `None` if more than
    /// the cap.
    pub fn value(&mut self, pos: &Position) -> Option<usize> {
        if self.rules.terminal(pos) {
            return Some(0);
        }
        let start = self.rules.lower_bound(pos);
        (start..=self.cap).find(|&d| self.win_within(pos, d))
    }

    /// Value of the position after `mv` is drawn in `color`: 0 if that ends
    /// the game.
    pub fn child_value(&mut self, pos: &Position, mv: MoveClass, color: Color) -> Option<usize> {
        let (child, _, _) = pos.apply(mv, color);
        if self.rules.finished_by(&child, color) {
            Some(0)
        } else {
            self.value(&child)
        }
    }

    /// A canonical-order move achieving the value `v` of `pos`.
    pub fn best_move(&mut self, pos: &Position, v: usize) -> Option<MoveClass> {
        if v == 0 {
            return None;
        }
        pos.successor_moves()
            .into_iter()
            .find(|&mv| self.forces(pos, mv, v - 1))
    }
}

/// Outcome of [`solve`].
#[derive(Debug, Clone)]
pub struct SolveResult {
    /// `None` certifies that the value exceeds `cap`.
    pub value: Option<usize>,
    pub cap: usize,
    pub root_move: Option<MoveClass>,
    pub stats: Stats,
    pub solver: Solver,
}

/// One state of an optimal Builder policy tree.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PolicyEntry {
    pub key: String,
    pub value: usize,
    #[serde(rename = "move")]
    pub mv: String,
    pub red: Option<usize>,
    pub blue: Option<usize>,
    pub painter: Color,
}

impl SolveResult {
    /// Builder's optimal move at every position reachable from the root under
    /// that policy, with both replies and the reply Painter prefers.
    pub fn policy(&mut self) -> Vec<PolicyEntry> {
        let mut out = Vec::new();
        if self.value.is_some() {
            let mut stack = vec![Position::empty()];
            let mut seen = rustc_hash::FxHashSet::default();
            while let Some(pos) = stack.pop() {
                if !seen.insert(pos.key()) {
                    continue;
                }
                let Some(v) = self.solver.value(&pos) else {
                    continue;
                };
                let Some(mv) = self.solver.best_move(&pos, v) else {
                    continue;
                };
                let red = self.solver.child_value(&pos, mv, Color::Red);
                let blue = self.solver.child_value(&pos, mv, Color::Blue);
                out.push(PolicyEntry {
                    key: pos.key().to_string(),
                    value: v,
                    mv: mv.to_string(),
                    red,
                    blue,
                    painter: prefer(red, blue),
                });
                for (c, cv) in [(Color::Red, red), (Color::Blue, blue)] {
                    if cv != Some(0) {
                        stack.push(pos.apply(mv, c).0);
                    }
                }
            }
        }
        out
    }
}

/// Painter's choice between child values (`None` = beyond the cap); ties go red.
pub fn prefer(red: Option<usize>, blue: Option<usize>) -> Color {
    let rank = |x: Option<usize>| x.unwrap_or(usize::MAX);
    if rank(blue) > rank(red) {
        Color::Blue
    } else {
        Color::Red
    }
}

/// Number of moves Builder needs with optimal play on both sides.
pub fn solve(red: &OrderedGraph, blue: BlueTarget, cap: usize) -> Result<SolveResult, GameError> {
    let mut solver = Solver::new(Rules::new(red, blue)?, cap);
    let root = Position::empty();
    let value = solver.value(&root);
    let root_move = value.and_then(|v| solver.best_move(&root, v));
    Ok(SolveResult {
        value,
        cap: solver.cap(),
        root_move,
        stats: solver.stats(),
        solver,
    })
}
