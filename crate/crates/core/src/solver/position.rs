//! Canonical game positions: non-isolated vertices in line order plus the
//! color of every pair.

use std::fmt;
use std::str::FromStr;

use crate::board::{ColoredBoard, Endpoint, Move, VertexId};
use crate::color::Color;
use crate::graph::Host;

fn tri(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn code(c: Option<Color>) -> u8 {
    match c {
        None => 0,
        Some(Color::Red) => 1,
        Some(Color::Blue) => 2,
    }
}

fn decode(x: u8) -> Option<Color> {
    match x {
        1 => Some(Color::Red),
        2 => Some(Color::Blue),
        _ => None,
    }
}

/// A board with isolated vertices dropped. Every vertex has at least one
/// drawn pair, so the value is already canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Position {
    m: usize,
    cells: Vec<u8>,
}

/// Packed position: vertex count and two bits per pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    m: u8,
    words: Box<[u64]>,
}

/// One end of a move class: an existing position or a fresh vertex in a gap
/// (gap `g` sits just before position `g`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Old(usize),
    New(usize),
}

/// A Builder move on a [`Position`], `left` resolving strictly left of `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveClass {
    pub left: End,
    pub right: End,
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            End::Old(i) => write!(f, "{i}"),
            End::New(g) => write!(f, "+{g}"),
        }
    }
}

impl fmt::Display for MoveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.left, self.right)
    }
}

impl Position {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn color(&self, i: usize, j: usize) -> Option<Color> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        decode(self.cells[tri(i, j)])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (1..self.m)
            .flat_map(move |j| (0..j).filter_map(move |i| self.color(i, j).map(|c| (i, j, c))))
    }

    pub fn count(&self, color: Color) -> usize {
        let c = code(Some(color));
        self.cells.iter().filter(|&&x| x == c).count()
    }

    /// Canonical position of `board` and the vertex at each position.
    pub fn from_board(board: &ColoredBoard) -> (Position, Vec<VertexId>) {
        Self::from_board_keeping(board, &[])
    }

    /// Like [`Position::from_board`] but also keeps the listed vertices even
    /// when isolated.
    pub fn from_board_keeping(
        board: &ColoredBoard,
        keep: &[VertexId],
    ) -> (Position, Vec<VertexId>) {
        let ids: Vec<VertexId> = board
            .order()
            .iter()
            .copied()
            .filter(|v| !board.is_isolated(*v) || keep.contains(v))
            .collect();
        let m = ids.len();
        let mut cells = vec![0u8; m * m.saturating_sub(1) / 2];
        for j in 1..m {
            for i in 0..j {
                cells[tri(i, j)] = code(board.color(ids[i], ids[j]));
            }
        }
        (Position { m, cells }, ids)
    }

    /// Adds the pair `i < j` (both existing) with `color`.
    pub fn with_edge(&self, i: usize, j: usize, color: Color) -> Position {
        let mut next = self.clone();
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        next.cells[tri(i, j)] = code(Some(color));
        next
    }

    /// Raises the vertex count to `m + gaps.len()`, inserting new vertices
    /// at the given sorted gaps. Returns the new index of every old vertex.
    fn insert(&self, gaps: &[usize]) -> (Position, Vec<usize>) {
        let m = self.m + gaps.len();
        let map: Vec<usize> = (0..self.m)
            .map(|p| p + gaps.iter().filter(|&&g| g <= p).count())
            .collect();
        let mut cells = vec![0u8; m * m.saturating_sub(1) / 2];
        for j in 1..self.m {
            for i in 0..j {
                cells[tri(map[i], map[j])] = self.cells[tri(i, j)];
            }
        }
        (Position { m, cells }, map)
    }

    /// Child position and the resolved pair.
    pub fn apply(&self, mv: MoveClass, color: Color) -> (Position, usize, usize) {
        let (next, i, j) = self.materialize(mv);
        (next.with_edge(i, j, color), i, j)
    }

    /// Inserts the move's fresh vertices without drawing the pair.
    pub fn materialize(&self, mv: MoveClass) -> (Position, usize, usize) {
        let gaps: Vec<usize> = [mv.left, mv.right]
            .into_iter()
            .filter_map(|e| match e {
                End::New(g) => Some(g),
                End::Old(_) => None,
            })
            .collect();
        let (next, map) = self.insert(&gaps);
        let resolve = |e: End, second: bool| match e {
            End::Old(p) => map[p],
            // fresh index = gap plus the fresh vertices left of it
            End::New(g) => {
                g + gaps.iter().filter(|&&h| h < g).count() + usize::from(second && gaps[0] == g)
            }
        };
        let i = resolve(mv.left, false);
        let j = resolve(mv.right, matches!(mv.left, End::New(_)));
        (next, i, j)
    }

    /// Every legal move class, before any deduplication.
    pub fn raw_moves(&self) -> Vec<MoveClass> {
        let m = self.m;
        let mut out = Vec::new();
        for j in 1..m {
            for i in 0..j {
                if self.cells[tri(i, j)] == 0 {
                    out.push(MoveClass {
                        left: End::Old(i),
                        right: End::Old(j),
                    });
                }
            }
        }
        for p in 0..m {
            for g in 0..=m {
                out.push(if g <= p {
                    MoveClass {
                        left: End::New(g),
                        right: End::Old(p),
                    }
                } else {
                    MoveClass {
                        left: End::Old(p),
                        right: End::New(g),
                    }
                });
            }
        }
        for g in 0..=m {
            for h in g..=m {
                out.push(MoveClass {
                    left: End::New(g),
                    right: End::New(h),
                });
            }
        }
        out
    }

    /// Move classes with distinct `(red child, blue child)` pairs, in order of
    /// that pair of keys.
    pub fn successor_moves(&self) -> Vec<MoveClass> {
        let mut seen: Vec<((CanonicalKey, CanonicalKey), MoveClass)> = self
            .raw_moves()
            .into_iter()
            .map(|mv| {
                (
                    (
                        self.apply(mv, Color::Red).0.key(),
                        self.apply(mv, Color::Blue).0.key(),
                    ),
                    mv,
                )
            })
            .collect();
        seen.sort();
        seen.dedup_by(|a, b| a.0 == b.0);
        seen.into_iter().map(|(_, mv)| mv).collect()
    }

    /// Board with one vertex per position, built by replaying the edges.
    pub fn to_board(&self) -> (ColoredBoard, Vec<VertexId>) {
        let mut board = ColoredBoard::new();
        let mut ids: Vec<Option<VertexId>> = vec![None; self.m];
        let mut edges: Vec<(usize, usize, Color)> = self.edges().collect();
        edges.sort_by_key(|&(i, j, _)| (j, i));
        for (i, j, c) in edges {
            let gap = |ids: &[Option<VertexId>], p: usize| {
                ids[..p].iter().filter(|x| x.is_some()).count()
            };
            let end = |ids: &[Option<VertexId>], p: usize| match ids[p] {
                Some(v) => Endpoint::Existing(v),
                None => Endpoint::Fresh(gap(ids, p)),
            };
            let mv = Move::new(end(&ids, i), end(&ids, j));
            let (u, v) = board
                .apply_move(&mv, c)
                .expect("replayed position moves are legal");
            ids[i] = Some(u);
            ids[j] = Some(v);
        }
        (
            board,
            ids.into_iter()
                .map(|v| v.expect("no isolated vertices"))
                .collect(),
        )
    }

    /// Board move realizing `mv`, given the vertex at each position of `board`.
    pub fn board_move(board: &ColoredBoard, ids: &[VertexId], mv: MoveClass) -> Move {
        let end = |e: End| match e {
            End::Old(p) => Endpoint::Existing(ids[p]),
            End::New(g) => Endpoint::Fresh(match ids.get(g) {
                Some(v) => board.position(*v).expect("listed vertex is on the board"),
                None => board.vertex_count(),
            }),
        };
        Move::new(end(mv.left), end(mv.right))
    }

    pub fn key(&self) -> CanonicalKey {
        let mut words = vec![0u64; self.cells.len().div_ceil(32)];
        for (k, &c) in self.cells.iter().enumerate() {
            words[k / 32] |= u64::from(c) << (2 * (k % 32));
        }
        CanonicalKey {
            m: self.m as u8,
            words: words.into_boxed_slice(),
        }
    }
}

impl Host for Position {
    fn vertex_count(&self) -> usize {
        self.m
    }

    fn has_edge(&self, i: usize, j: usize, color: Option<Color>) -> bool {
        match (self.color(i, j), color) {
            (None, _) => false,
            (Some(_), None) => true,
            (Some(a), Some(b)) => a == b,
        }
    }
}

impl CanonicalKey {
    pub fn vertex_count(&self) -> usize {
        self.m as usize
    }

    pub fn to_position(&self) -> Position {
        let m = self.m as usize;
        let len = m * m.saturating_sub(1) / 2;
        let cells = (0..len)
            .map(|k| ((self.words[k / 32] >> (2 * (k % 32))) & 3) as u8)
            .collect();
        Position { m, cells }
    }
}

/// Key of `board` with isolated vertices dropped.
pub fn canonicalize(board: &ColoredBoard) -> CanonicalKey {
    Position::from_board(board).0.key()
}

/// Hex form: two digits of vertex count, then each word as 16 digits.
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02x}", self.m)?;
        for w in self.words.iter() {
            write!(f, "{w:016x}")?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad canonical key {s:?}");
        if !s.is_ascii() || s.len() < 2 || !(s.len() - 2).is_multiple_of(16) {
            return Err(bad());
        }
        let m = u8::from_str_radix(&s[..2], 16).map_err(|_| bad())?;
        let words: Vec<u64> = (2..s.len())
            .step_by(16)
            .map(|k| u64::from_str_radix(&s[k..k + 16], 16))
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let pairs = usize::from(m) * usize::from(m).saturating_sub(1) / 2;
        if words.len() != pairs.div_ceil(32) {
            return Err(bad());
        }
        let key = CanonicalKey {
            m,
            words: words.into_boxed_slice(),
        };
        let pos = key.to_position();
        if pos.cells.contains(&3) || pos.key() != key {
            return Err(bad());
        }
        Ok(key)
    }
}
