//! The growing game position on a dense ordered vertex line.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::error::MoveError;
use crate::graph::{Host, OrderedGraph};

/// Stable vertex identifier. Ids are handed out in creation order and keep
/// their meaning for the whole game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// One end of a Builder query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Endpoint {
    Existing(VertexId),
    /// A new vertex inserted into gap `g` of the board as it was before the
    /// move: gap 0 is left of everything, gap `v` right of everything.
    Fresh(usize),
}

/// A Builder query. `left` must resolve strictly left of `right`; two fresh
/// endpoints in the same gap are placed `left` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub left: Endpoint,
    pub right: Endpoint,
}

impl Move {
    pub fn new(left: Endpoint, right: Endpoint) -> Self {
        Move { left, right }
    }

    pub fn existing(u: VertexId, v: VertexId) -> Self {
        Move {
            left: Endpoint::Existing(u),
            right: Endpoint::Existing(v),
        }
    }
}

/// A move as it landed on the board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlayedMove {
    pub query: Move,
    pub left: VertexId,
    pub right: VertexId,
    pub color: Color,
}

#[derive(Debug, Clone, Default)]
pub struct ColoredBoard {
    order: Vec<VertexId>,
    /// Position of each id in `order`, indexed by id.
    position: Vec<usize>,
    /// Keyed by (left id, right id).
    edges: FxHashMap<(VertexId, VertexId), Color>,
    /// Per id: neighbors to the left with edge colors.
    left_adj: Vec<Vec<(VertexId, Color)>>,
    history: Vec<PlayedMove>,
}

impl PartialEq for ColoredBoard {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for ColoredBoard {}

impl ColoredBoard {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn history(&self) -> &[PlayedMove] {
        &self.history
    }

    pub fn last_move(&self) -> Option<&PlayedMove> {
        self.history.last()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v.0 as usize) < self.position.len()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.position.get(v.0 as usize).copied()
    }

    pub fn id_at(&self, pos: usize) -> VertexId {
        self.order[pos]
    }

    /// Color of the pair `{u, v}` if it has been drawn.
    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        let (pu, pv) = (self.position(u)?, self.position(v)?);
        let key = if pu < pv { (u, v) } else { (v, u) };
        self.edges.get(&key).copied()
    }

    /// Edges as `(left, right, color)`, sorted by position.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, Color)> {
        let mut out: Vec<_> = self.edges.iter().map(|(&(u, v), &c)| (u, v, c)).collect();
        out.sort_by_key(|&(u, v, _)| (self.position[v.0 as usize], self.position[u.0 as usize]));
        out
    }

    pub fn left_neighbors(&self, v: VertexId) -> &[(VertexId, Color)] {
        &self.left_adj[v.0 as usize]
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.left_adj[v.0 as usize].is_empty() && !self.edges.keys().any(|&(u, _)| u == v)
    }

    fn endpoint_slot(&self, e: Endpoint) -> Result<Slot, MoveError> {
        match e {
            Endpoint::Existing(v) => self
                .position(v)
                .map(Slot::At)
                .ok_or(MoveError::UnknownVertex(v)),
            Endpoint::Fresh(g) if g <= self.order.len() => Ok(Slot::Gap(g)),
            Endpoint::Fresh(g) => Err(MoveError::BadGap {
                gap: g,
                vertices: self.order.len(),
            }),
        }
    }

    /// Checks a move against the board without changing it.
    pub fn validate(&self, mv: &Move) -> Result<(), MoveError> {
        let l = self.endpoint_slot(mv.left)?;
        let r = self.endpoint_slot(mv.right)?;
        match (l, r) {
            (Slot::At(a), Slot::At(b)) => {
                if a == b {
                    return Err(MoveError::SameVertex);
                }
                if a > b {
                    return Err(MoveError::Reversed);
                }
                let (u, v) = (self.order[a], self.order[b]);
                if self.edges.contains_key(&(u, v)) {
                    return Err(MoveError::AlreadyDrawn(u, v));
                }
            }
            // A gap g sits just before position g.
            (Slot::Gap(g), Slot::At(b)) if g > b => return Err(MoveError::Reversed),
            (Slot::At(a), Slot::Gap(g)) if g <= a => return Err(MoveError::Reversed),
            (Slot::Gap(g), Slot::Gap(h)) if g > h => return Err(MoveError::Reversed),
            _ => {}
        }
        Ok(())
    }

    fn insert_vertex(&mut self, gap: usize) -> VertexId {
        let id = VertexId(self.position.len() as u32);
        self.order.insert(gap, id);
        self.position.push(0);
        self.left_adj.push(Vec::new());
        for (p, v) in self.order.iter().enumerate().skip(gap) {
            self.position[v.0 as usize] = p;
        }
        id
    }

    /// Inserts the move's fresh vertices and returns the resolved pair. Fresh
    /// ids are assigned left endpoint first.
    pub fn materialize(&mut self, mv: &Move) -> Result<(VertexId, VertexId), MoveError> {
        self.validate(mv)?;
        let (mut left, mut right) = (None, None);
        if let Endpoint::Fresh(_) = mv.left {
            left = Some(VertexId(self.position.len() as u32));
        }
        if let Endpoint::Fresh(_) = mv.right {
            right = Some(VertexId(self.position.len() as u32 + left.is_some() as u32));
        }
        match (mv.left, mv.right) {
            (Endpoint::Fresh(g), Endpoint::Fresh(h)) => {
                // Insert the left one first at g; the right gap shifts by one.
                let a = self.insert_vertex(g);
                let b = self.insert_vertex(h + 1);
                debug_assert_eq!(Some(a), left);
                debug_assert_eq!(Some(b), right);
            }
            (Endpoint::Fresh(g), Endpoint::Existing(_)) => {
                self.insert_vertex(g);
            }
            (Endpoint::Existing(_), Endpoint::Fresh(h)) => {
                self.insert_vertex(h);
            }
            _ => {}
        }
        let l = match mv.left {
            Endpoint::Existing(v) => v,
            Endpoint::Fresh(_) => left.unwrap(),
        };
        let r = match mv.right {
            Endpoint::Existing(v) => v,
            Endpoint::Fresh(_) => right.unwrap(),
        };
        Ok((l, r))
    }

    fn add_edge(&mut self, u: VertexId, v: VertexId, color: Color) {
        self.edges.insert((u, v), color);
        self.left_adj[v.0 as usize].push((u, color));
    }

    /// Plays `mv` with `color`, returning the resolved endpoints.
    pub fn apply_move(
        &mut self,
        mv: &Move,
        color: Color,
    ) -> Result<(VertexId, VertexId), MoveError> {
        let (u, v) = self.materialize(mv)?;
        self.add_edge(u, v, color);
        self.history.push(PlayedMove {
            query: *mv,
            left: u,
            right: v,
            color,
        });
        Ok((u, v))
    }

    /// Value-returning form of [`ColoredBoard::apply_move`].
    pub fn with_move(&self, mv: &Move, color: Color) -> Result<ColoredBoard, MoveError> {
        let mut next = self.clone();
        next.apply_move(mv, color)?;
        Ok(next)
    }

    /// Board with the move's fresh vertices inserted but the edge not yet
    /// drawn, as Painter sees it.
    pub fn preview(&self, mv: &Move) -> Result<(ColoredBoard, VertexId, VertexId), MoveError> {
        let mut next = self.clone();
        let (u, v) = next.materialize(mv)?;
        Ok((next, u, v))
    }

    /// Number of vertices on the longest monotone path in `color`, with the
    /// witness ids left to right. Runs in time linear in the board size.
    pub fn longest_path(&self, color: Color) -> (usize, Vec<VertexId>) {
        if self.order.is_empty() {
            return (0, Vec::new());
        }
        let n = self.position.len();
        let mut len = vec![1usize; n];
        let mut prev: Vec<Option<VertexId>> = vec![None; n];
        let mut best = (1, self.order[0]);
        for &v in &self.order {
            let vi = v.0 as usize;
            for &(u, c) in &self.left_adj[vi] {
                if c == color && len[u.0 as usize] + 1 > len[vi] {
                    len[vi] = len[u.0 as usize] + 1;
                    prev[vi] = Some(u);
                }
            }
            if len[vi] > best.0 {
                best = (len[vi], v);
            }
        }
        let mut witness = vec![best.1];
        let mut cur = best.1;
        while let Some(p) = prev[cur.0 as usize] {
            witness.push(p);
            cur = p;
        }
        witness.reverse();
        (best.0, witness)
    }

    /// Longest monotone path in `color` ending at each vertex, indexed by id.
    pub fn path_lengths_ending_at(&self, color: Color) -> Vec<usize> {
        let mut len = vec![1usize; self.position.len()];
        for &v in &self.order {
            let vi = v.0 as usize;
            for &(u, c) in &self.left_adj[vi] {
                if c == color {
                    len[vi] = len[vi].max(len[u.0 as usize] + 1);
                }
            }
        }
        len
    }

    /// Longest monotone path in `color` starting at each vertex, indexed by id.
    pub fn path_lengths_starting_at(&self, color: Color) -> Vec<usize> {
        let mut len = vec![1usize; self.position.len()];
        for &v in self.order.iter().rev() {
            let lv = len[v.0 as usize];
            for &(u, c) in &self.left_adj[v.0 as usize] {
                if c == color {
                    len[u.0 as usize] = len[u.0 as usize].max(lv + 1);
                }
            }
        }
        len
    }

    /// Copy of the board with the pair `{u, v}` drawn in `color` but not
    /// recorded in the history. Both vertices must exist and the pair must be
    /// undrawn.
    pub fn with_edge(&self, u: VertexId, v: VertexId, color: Color) -> ColoredBoard {
        let (u, v) = if self.position[u.0 as usize] < self.position[v.0 as usize] {
            (u, v)
        } else {
            (v, u)
        };
        debug_assert!(!self.edges.contains_key(&(u, v)));
        let mut next = self.clone();
        next.add_edge(u, v, color);
        next
    }

    /// Whether a monotone `color` cycle on `n` vertices passes through the
    /// edge `{u, w}` (already drawn in `color`).
    pub fn cycle_through_edge(&self, u: VertexId, w: VertexId, n: usize, color: Color) -> bool {
        let (Some(pu), Some(pw)) = (self.position(u), self.position(w)) else {
            return false;
        };
        let (u, w, pu, pw) = if pu < pw {
            (u, w, pu, pw)
        } else {
            (w, u, pw, pu)
        };
        let right_adj = self.right_adjacency(color);
        // to_u[x]: vertex counts of monotone paths x -> u.
        let len = self.order.len();
        let mut to_u = vec![vec![false; n + 1]; len];
        to_u[pu][1] = true;
        for p in (0..pu).rev() {
            let x = self.order[p];
            for &y in &right_adj[x.0 as usize] {
                let py = self.position[y.0 as usize];
                if py <= pu {
                    for l in 1..n {
                        if to_u[py][l] {
                            to_u[p][l + 1] = true;
                        }
                    }
                }
            }
        }
        // from_w[x]: vertex counts of monotone paths w -> x.
        let mut from_w = vec![vec![false; n + 1]; len];
        from_w[pw][1] = true;
        for p in pw + 1..len {
            let x = self.order[p];
            for &(y, c) in &self.left_adj[x.0 as usize] {
                let py = self.position[y.0 as usize];
                if c == color && py >= pw {
                    for l in 1..n {
                        if from_w[py][l] {
                            from_w[p][l + 1] = true;
                        }
                    }
                }
            }
        }
        // The new edge closes the cycle.
        let mut inner = vec![vec![false; n + 1]; len];
        inner[pu][1] = true;
        for p in pu + 1..=pw {
            let x = self.order[p];
            for &(y, c) in &self.left_adj[x.0 as usize] {
                let py = self.position[y.0 as usize];
                if c == color && py >= pu {
                    for l in 1..n {
                        if inner[py][l] {
                            inner[p][l + 1] = true;
                        }
                    }
                }
            }
        }
        if inner[pw][n] && self.color(u, w) == Some(color) {
            return true;
        }
        // The new edge is a path edge; look for a closing edge (a, b).
        for (&(a, b), &c) in &self.edges {
            if c != color || (a, b) == (u, w) {
                continue;
            }
            let (pa, pb) = (self.position[a.0 as usize], self.position[b.0 as usize]);
            if pa > pu || pb < pw {
                continue;
            }
            for l1 in 1..n {
                if to_u[pa][l1] && from_w[pb][n - l1] {
                    return true;
                }
            }
        }
        false
    }

    fn right_adjacency(&self, color: Color) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.position.len()];
        for (&(u, v), &c) in &self.edges {
            if c == color {
                out[u.0 as usize].push(v);
            }
        }
        out
    }

    /// Subgraph of one color on the vertices it touches, in board order, with
    /// the ids of those vertices.
    pub fn color_subgraph(&self, color: Color) -> (OrderedGraph, Vec<VertexId>) {
        let mut touched = vec![false; self.position.len()];
        for (&(u, v), &c) in &self.edges {
            if c == color {
                touched[u.0 as usize] = true;
                touched[v.0 as usize] = true;
            }
        }
        let ids: Vec<VertexId> = self
            .order
            .iter()
            .copied()
            .filter(|v| touched[v.0 as usize])
            .collect();
        let mut index = vec![usize::MAX; self.position.len()];
        for (i, v) in ids.iter().enumerate() {
            index[v.0 as usize] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(_, &c)| c == color)
            .map(|(&(u, v), _)| (index[u.0 as usize], index[v.0 as usize]));
        (
            OrderedGraph::new(ids.len(), edges.collect::<Vec<_>>())
                .expect("board edges are simple"),
            ids,
        )
    }
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    At(usize),
    Gap(usize),
}

impl Host for ColoredBoard {
    fn vertex_count(&self) -> usize {
        self.order.len()
    }

    fn has_edge(&self, i: usize, j: usize, color: Option<Color>) -> bool {
        match self.edges.get(&(self.order[i], self.order[j])) {
            Some(&c) => color.is_none_or(|want| want == c),
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::longest_monotone_path;

    fn fresh(g: usize) -> Endpoint {
        Endpoint::Fresh(g)
    }

    #[test]
    fn two_fresh_vertices_on_empty_board() {
        let mut b = ColoredBoard::new();
        let (u, v) = b
            .apply_move(&Move::new(fresh(0), fresh(0)), Color::Blue)
            .unwrap();
        assert_eq!((u, v), (VertexId(0), VertexId(1)));
        assert_eq!(b.order(), &[VertexId(0), VertexId(1)]);
        assert_eq!(b.color(u, v), Some(Color::Blue));
        assert_eq!(b.longest_path(Color::Blue).0, 2);
    }

    #[test]
    fn redrawing_a_pair_is_rejected() {
        let mut b = ColoredBoard::new();
        let (u, v) = b
            .apply_move(&Move::new(fresh(0), fresh(0)), Color::Blue)
            .unwrap();
        assert_eq!(
            b.apply_move(&Move::existing(u, v), Color::Red),
            Err(MoveError::AlreadyDrawn(u, v))
        );
        assert_eq!(b.edge_count(), 1);
    }

    #[test]
    fn fresh_vertex_between_endpoints() {
        let mut b = ColoredBoard::new();
        let (u, v) = b
            .apply_move(&Move::new(fresh(0), fresh(0)), Color::Blue)
            .unwrap();
        let (l, m) = b
            .apply_move(&Move::new(Endpoint::Existing(u), fresh(1)), Color::Red)
            .unwrap();
        assert_eq!(l, u);
        assert_eq!(b.order(), &[u, m, v]);
        assert_eq!(b.color(u, m), Some(Color::Red));
    }

    #[test]
    fn illegal_moves() {
        let mut b = ColoredBoard::new();
        let (u, v) = b
            .apply_move(&Move::new(fresh(0), fresh(0)), Color::Blue)
            .unwrap();
        assert_eq!(b.validate(&Move::existing(v, u)), Err(MoveError::Reversed));
        assert_eq!(
            b.validate(&Move::existing(u, u)),
            Err(MoveError::SameVertex)
        );
        assert_eq!(
            b.validate(&Move::new(fresh(3), fresh(3))),
            Err(MoveError::BadGap {
                gap: 3,
                vertices: 2
            })
        );
        assert_eq!(
            b.validate(&Move::new(fresh(2), Endpoint::Existing(v))),
            Err(MoveError::Reversed)
        );
        assert_eq!(
            b.validate(&Move::new(Endpoint::Existing(v), fresh(1))),
            Err(MoveError::Reversed)
        );
        assert_eq!(
            b.validate(&Move::new(fresh(2), fresh(1))),
            Err(MoveError::Reversed)
        );
        assert_eq!(
            b.validate(&Move::existing(u, VertexId(9))),
            Err(MoveError::UnknownVertex(VertexId(9)))
        );
        assert!(b
            .validate(&Move::new(fresh(1), Endpoint::Existing(v)))
            .is_ok());
    }

    #[test]
    fn fast_path_matches_generic_dp() {
        let mut b = ColoredBoard::new();
        b.apply_move(&Move::new(fresh(0), fresh(0)), Color::Blue)
            .unwrap();
        b.apply_move(
            &Move::new(Endpoint::Existing(VertexId(1)), fresh(2)),
            Color::Blue,
        )
        .unwrap();
        b.apply_move(
            &Move::new(fresh(0), Endpoint::Existing(VertexId(0))),
            Color::Red,
        )
        .unwrap();
        b.apply_move(
            &Move::new(fresh(1), Endpoint::Existing(VertexId(2))),
            Color::Blue,
        )
        .unwrap();
        let fast = b.longest_path(Color::Blue);
        let slow = longest_monotone_path(&b, Color::Blue);
        assert_eq!(fast.0, slow.0);
        assert_eq!(fast.0, 3);
    }
}
