//! Ordered graphs and the structural queries the games are built on.
//!
//! Vertices of an [`OrderedGraph`] are `0..n` in left-to-right order. Every
//! search routine here is written against the [`Host`] trait so the same
//! embedding and path code runs on patterns, live game boards and the
//! solver's compact positions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::color::Color;
use crate::error::GraphError;

/// Anything that looks like an ordered vertex line with (optionally colored)
/// edges between positions.
pub trait Host {
    fn vertex_count(&self) -> usize;

    /// Whether positions `i < j` are joined, restricted to `color` when given.
    fn has_edge(&self, i: usize, j: usize, color: Option<Color>) -> bool;
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl OrderedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if j >= n {
                return Err(GraphError::VertexOutOfRange { vertex: j, n });
            }
            if !set.insert((i, j)) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains(&key)
    }

    pub fn left_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, j)| j == v)
            .map(|&(i, _)| i)
            .collect()
    }

    pub fn right_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(i, _)| i == v)
            .map(|&(_, j)| j)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Subgraph on the leftmost `k` vertices.
    pub fn initial_subgraph(&self, k: usize) -> OrderedGraph {
        let k = k.min(self.n);
        OrderedGraph {
            n: k,
            edges: self.edges.iter().copied().filter(|&(_, j)| j < k).collect(),
        }
    }

    /// Reverses the vertex order.
    pub fn mirror(&self) -> OrderedGraph {
        let last = self.n.saturating_sub(1);
        OrderedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| (last - j, last - i))
                .collect(),
        }
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> OrderedGraph {
        let mut used = vec![false; self.n];
        for &(i, j) in &self.edges {
            used[i] = true;
            used[j] = true;
        }
        let mut remap = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if used[v] {
                remap[v] = next;
                next += 1;
            }
        }
        OrderedGraph {
            n: next,
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| (remap[i], remap[j]))
                .collect(),
        }
    }

    /// Distinct edge lengths `j - i`.
    pub fn edge_lengths(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(i, j)| j - i).collect()
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph({})", crate::family::format_raw(self))
    }
}

impl fmt::Display for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::family::format_raw(self))
    }
}

impl Host for OrderedGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, i: usize, j: usize, _color: Option<Color>) -> bool {
        self.edges.contains(&(i, j))
    }
}

pub fn max_left_degree(g: &OrderedGraph) -> usize {
    let mut deg = vec![0usize; g.n];
    for (_, j) in g.edges() {
        deg[j] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

pub fn max_right_degree(g: &OrderedGraph) -> usize {
    let mut deg = vec![0usize; g.n];
    for (i, _) in g.edges() {
        deg[i] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Minimum number of consecutive independent intervals covering `0..n`.
///
/// Greedy: each interval is extended rightward while it stays independent.
/// Independence of an interval survives dropping its leftmost vertex, so the
/// greedy cut points are never later than any optimal partition's.
pub fn interval_chromatic_number(g: &OrderedGraph) -> usize {
    if g.n == 0 {
        return 0;
    }
    let mut count = 1;
    let mut start = 0;
    for v in 1..g.n {
        if g.left_neighbors(v).iter().any(|&u| u >= start) {
            count += 1;
            start = v;
        }
    }
    count
}

/// The interval boundaries found by the greedy cover, as `[start, end)` ranges.
pub fn interval_partition(g: &OrderedGraph) -> Vec<(usize, usize)> {
    let mut parts = Vec::new();
    if g.n == 0 {
        return parts;
    }
    let mut start = 0;
    for v in 1..g.n {
        if g.left_neighbors(v).iter().any(|&u| u >= start) {
            parts.push((start, v));
            start = v;
        }
    }
    parts.push((start, g.n));
    parts
}

pub fn is_intersection_free_matching(g: &OrderedGraph) -> bool {
    if (0..g.n).any(|v| g.degree(v) > 1) {
        return false;
    }
    let edges: Vec<_> = g.edges().collect();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

/// Strictly increasing map from pattern vertices to host positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Checks order preservation and that every pattern edge lands on a host
    /// edge of the requested color.
    pub fn is_valid<H: Host + ?Sized>(
        &self,
        host: &H,
        pattern: &OrderedGraph,
        color: Option<Color>,
    ) -> bool {
        self.0.len() == pattern.n()
            && self.0.windows(2).all(|w| w[0] < w[1])
            && self.0.last().is_none_or(|&l| l < host.vertex_count())
            && pattern
                .edges()
                .all(|(i, j)| host.has_edge(self.0[i], self.0[j], color))
    }
}

/// Order-preserving subgraph search by backtracking, assigning pattern
/// vertices from the rightmost one leftward.
pub fn find_embedding<H: Host + ?Sized>(
    host: &H,
    pattern: &OrderedGraph,
    color: Option<Color>,
) -> Option<Embedding> {
    let p = pattern.n();
    let h = host.vertex_count();
    if p == 0 {
        return Some(Embedding(Vec::new()));
    }
    if p > h {
        return None;
    }
    // Degree pruning: left/right degree of each host position in `color`.
    let mut host_left = vec![0usize; h];
    let mut host_right = vec![0usize; h];
    for j in 0..h {
        for i in 0..j {
            if host.has_edge(i, j, color) {
                host_left[j] += 1;
                host_right[i] += 1;
            }
        }
    }
    let pat_left: Vec<usize> = (0..p).map(|v| pattern.left_neighbors(v).len()).collect();
    let pat_right: Vec<Vec<usize>> = (0..p).map(|v| pattern.right_neighbors(v)).collect();

    let mut map = vec![usize::MAX; p];
    if assign(
        p - 1,
        h,
        host,
        color,
        &mut map,
        &pat_left,
        &pat_right,
        &host_left,
        &host_right,
    ) {
        Some(Embedding(map))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign<H: Host + ?Sized>(
    v: usize,
    upper: usize,
    host: &H,
    color: Option<Color>,
    map: &mut [usize],
    pat_left: &[usize],
    pat_right: &[Vec<usize>],
    host_left: &[usize],
    host_right: &[usize],
) -> bool {
    if upper <= v {
        return false;
    }
    for pos in (v..upper).rev() {
        if host_left[pos] < pat_left[v] || host_right[pos] < pat_right[v].len() {
            continue;
        }
        if pat_right[v]
            .iter()
            .all(|&w| host.has_edge(pos, map[w], color))
        {
            map[v] = pos;
            if v == 0
                || assign(
                    v - 1,
                    pos,
                    host,
                    color,
                    map,
                    pat_left,
                    pat_right,
                    host_left,
                    host_right,
                )
            {
                return true;
            }
        }
    }
    false
}

/// Number of vertices on the longest monotone path whose edges all carry
/// `color`, with one witness sequence of positions.
pub fn longest_monotone_path<H: Host + ?Sized>(host: &H, color: Color) -> (usize, Vec<usize>) {
    let n = host.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut len = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            if len[i] + 1 > len[j] && host.has_edge(i, j, Some(color)) {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let (mut end, best) = len
        .iter()
        .copied()
        .enumerate()
        .max_by_key(|&(i, l)| (l, std::cmp::Reverse(i)))
        .unwrap();
    let mut witness = vec![end];
    while prev[end] != usize::MAX {
        end = prev[end];
        witness.push(end);
    }
    witness.reverse();
    (best, witness)
}

/// Whether positions `x_1 < ... < x_n` exist with every consecutive pair and
/// the pair `(x_1, x_n)` joined in `color`.
pub fn contains_ordered_cycle<H: Host + ?Sized>(host: &H, n: usize, color: Color) -> bool {
    find_ordered_cycle(host, n, color).is_some()
}

/// Witness variant of [`contains_ordered_cycle`].
pub fn find_ordered_cycle<H: Host + ?Sized>(
    host: &H,
    n: usize,
    color: Color,
) -> Option<Vec<usize>> {
    assert!(n >= 3, "ordered cycles need at least 3 vertices");
    let h = host.vertex_count();
    for u in 0..h {
        for w in (u + n - 1)..h {
            if !host.has_edge(u, w, Some(color)) {
                continue;
            }
            // reach[v][l]: a monotone path u -> v with exactly l vertices exists.
            let mut reach = vec![vec![false; n + 1]; w + 1];
            let mut back = vec![vec![usize::MAX; n + 1]; w + 1];
            reach[u][1] = true;
            for v in (u + 1)..=w {
                for x in u..v {
                    if !host.has_edge(x, v, Some(color)) {
                        continue;
                    }
                    for l in 1..n {
                        if reach[x][l] && !reach[v][l + 1] {
                            reach[v][l + 1] = true;
                            back[v][l + 1] = x;
                        }
                    }
                }
            }
            if reach[w][n] {
                let mut seq = vec![w];
                let (mut v, mut l) = (w, n);
                while l > 1 {
                    v = back[v][l];
                    l -= 1;
                    seq.push(v);
                }
                seq.reverse();
                return Some(seq);
            }
        }
    }
    None
}
