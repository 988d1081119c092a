//! Two growing blue paths joined through a tripartite gadget.

use num_rational::Ratio;

use super::left_degree::{force_blue_path, left_degree_bound};
use crate::color::Color;
use crate::error::StrategyError;
use crate::graph::OrderedGraph;
use crate::script::{ScriptedBuilder, Vx};

/// Where the first blue gadget edge landed, as indices into the path it
/// touches: `X` (left path), `Bp` (middle path) and `Y` (right path).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    AB { x: usize, bp: usize },
    BC { bp: usize, y: usize },
    AC { x: usize, y: usize },
}

/// New `(X, Y)` after a blue gadget edge. For `AC` the paths merge and `Y`
/// is `None` until a fresh path is built.
pub fn advance<T: Copy>(
    x: &[T],
    bp: &[T],
    y: &[T],
    crossing: Crossing,
) -> (Vec<T>, Option<Vec<T>>) {
    match crossing {
        Crossing::AB { x: i, bp: j } => (
            x[..=i].iter().chain(&bp[j..]).copied().collect(),
            Some(y.to_vec()),
        ),
        Crossing::BC { bp: j, y: k } => (
            x.to_vec(),
            Some(bp[..=j].iter().chain(&y[k..]).copied().collect()),
        ),
        Crossing::AC { x: i, y: k } => (x[..=i].iter().chain(&y[k..]).copied().collect(), None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Parts {
    pub fn total(&self) -> usize {
        self.a + self.b + self.c
    }

    /// Part index (0, 1, 2) of vertex `v` of a graph on `a + b + c` vertices.
    pub fn part(&self, v: usize) -> usize {
        if v < self.a {
            0
        } else if v < self.a + self.b {
            1
        } else {
            2
        }
    }

    pub fn default_d(&self) -> usize {
        self.total().div_ceil(2)
    }
}

pub fn check_tripartite(g: &OrderedGraph, parts: Parts) -> Result<(), StrategyError> {
    if parts.a == 0 || parts.b == 0 || parts.c == 0 {
        return Err(StrategyError::Precondition("parts must be nonempty".into()));
    }
    if g.n() != parts.total() {
        return Err(StrategyError::Precondition(format!(
            "graph has {} vertices, parts sum to {}",
            g.n(),
            parts.total()
        )));
    }
    if let Some((i, j)) = g.edges().find(|&(i, j)| parts.part(i) == parts.part(j)) {
        return Err(StrategyError::Precondition(format!(
            "edge {i}-{j} lies inside one part"
        )));
    }
    Ok(())
}

/// `⌊(2n/d)(R + m)⌋` with `R` the ladder bound for paths on `a+b+c+2d`.
pub fn tripartite_bound(g: &OrderedGraph, parts: Parts, d: usize, n: usize) -> u64 {
    let r = left_degree_bound(g, parts.total() + 2 * d);
    let m = g.edge_count() as u64;
    (Ratio::new(2 * n as u64, d as u64) * Ratio::from_integer(r + m)).to_integer()
}

pub fn tripartite_builder(
    g: &OrderedGraph,
    parts: Parts,
    d: usize,
    n: usize,
) -> Result<ScriptedBuilder, StrategyError> {
    check_tripartite(g, parts)?;
    if d == 0 {
        return Err(StrategyError::Precondition("d must be at least 1".into()));
    }
    let len = parts.total() + 2 * d;
    if n < len {
        return Err(StrategyError::Precondition(format!(
            "n must be at least a+b+c+2d = {len}"
        )));
    }
    let bound = tripartite_bound(g, parts, d, n);
    let g = g.clone();
    Ok(ScriptedBuilder::new("tripartite", move |q| {
        let mut x = force_blue_path(q, &g, len, None)?;
        let mut y = force_blue_path(q, &g, len, None)?;
        // Gadget edges grouped by the parts they join: A-B, then B-C, then A-C.
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.sort_by_key(|&(i, j)| match (parts.part(i), parts.part(j)) {
            (0, 1) => 0,
            (1, 2) => 1,
            _ => 2,
        });
        loop {
            q.trace("state", vec![x.len() as i64, y.len() as i64]);
            let bp = force_blue_path(q, &g, len, Some(y[0]))?;
            let a_start = x.len() - parts.a;
            let b_start = parts.c + d;
            // Vertex of g -> (path, index) on the gadget.
            let place = |v: usize| -> (u8, usize) {
                match parts.part(v) {
                    0 => (0, a_start + v),
                    1 => (1, b_start + v - parts.a),
                    _ => (2, v - parts.a - parts.b),
                }
            };
            let handle = |(p, i): (u8, usize)| -> Vx {
                match p {
                    0 => x[i],
                    1 => bp[i],
                    _ => y[i],
                }
            };
            let mut crossing = None;
            for &(i, j) in &edges {
                let (pi, pj) = (place(i), place(j));
                if q.draw(handle(pi), handle(pj))? == Color::Blue {
                    crossing = Some(match (pi.0, pj.0) {
                        (0, 1) => Crossing::AB { x: pi.1, bp: pj.1 },
                        (1, 2) => Crossing::BC { bp: pi.1, y: pj.1 },
                        _ => Crossing::AC { x: pi.1, y: pj.1 },
                    });
                    break;
                }
            }
            let Some(crossing) = crossing else {
                return Err(
                    StrategyError::Exhausted("red gadget did not end the game".into()).into(),
                );
            };
            let (nx, ny) = advance(&x, &bp, &y, crossing);
            x = nx;
            y = match ny {
                Some(y) => y,
                None => force_blue_path(q, &g, len, None)?,
            };
        }
    })
    .with_bound(bound))
}
