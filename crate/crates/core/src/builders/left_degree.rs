//! Binary-search insertion into a ladder of red initial subgraphs.

use rustc_hash::FxHashMap;

use super::ceil_lg;
use crate::color::Color;
use crate::error::StrategyError;
use crate::graph::{max_left_degree, OrderedGraph};
use crate::script::{Driver, ScriptedBuilder, Step, Vx};

/// Move bound `Δ⁻(G)·|V(G)|·n·⌈lg n⌉`.
pub fn left_degree_bound(g: &OrderedGraph, n: usize) -> u64 {
    (max_left_degree(g) * g.n() * n) as u64 * ceil_lg(n as u64)
}

/// Runs the ladder on fresh vertices, each placed immediately left of
/// `right_bound` (or rightmost when `None`), until a red `g` appears or a
/// blue path on `len` vertices is found among them. Returns that path left
/// to right.
pub fn force_blue_path(
    q: &mut Driver,
    g: &OrderedGraph,
    len: usize,
    right_bound: Option<Vx>,
) -> Step<Vec<Vx>> {
    if len <= 1 {
        let v = match right_bound {
            Some(b) => q.before(b),
            None => q.rightmost(),
        };
        return Ok(vec![v]);
    }
    let left_of: Vec<Vec<usize>> = (0..g.n()).map(|v| g.left_neighbors(v)).collect();
    // lists[i] holds the red copy G_i; index 0 is unused.
    let mut lists: Vec<Vec<Vx>> = vec![Vec::new(); len];
    let mut pred: FxHashMap<Vx, Vx> = FxHashMap::default();
    loop {
        let u = match right_bound {
            Some(b) => q.before(b),
            None => q.rightmost(),
        };
        let (mut below, mut above) = (0usize, len);
        let mut last_blue: FxHashMap<usize, Vx> = FxHashMap::default();
        while above - below > 1 {
            let mid = (below + above) / 2;
            let s = lists[mid].len();
            let mut hit = None;
            for &j in &left_of[s] {
                let w = lists[mid][j];
                if q.draw(w, u)? == Color::Blue {
                    hit = Some(w);
                    break;
                }
            }
            match hit {
                Some(w) => {
                    below = mid;
                    last_blue.insert(mid, w);
                }
                None => above = mid,
            }
        }
        if let Some(&w) = last_blue.get(&below) {
            pred.insert(u, w);
        }
        if above == len {
            let mut path = vec![u];
            let mut cur = u;
            while let Some(&p) = pred.get(&cur) {
                path.push(p);
                cur = p;
            }
            path.reverse();
            debug_assert_eq!(path.len(), len);
            return Ok(path);
        }
        lists[above].push(u);
        if lists[above].len() >= g.n() {
            return Err(
                StrategyError::Exhausted("red copy complete but the game went on".into()).into(),
            );
        }
    }
}

/// Builder for `(g, P_n)` that runs the ladder on the whole line.
pub fn left_degree_builder(g: &OrderedGraph, n: usize) -> Result<ScriptedBuilder, StrategyError> {
    if n < 2 {
        return Err(StrategyError::Precondition(
            "left_degree_builder needs n >= 2".into(),
        ));
    }
    if g.edge_count() == 0 {
        return Err(StrategyError::Precondition(
            "left_degree_builder needs a graph with an edge".into(),
        ));
    }
    let bound = left_degree_bound(g, n);
    let g = g.clone();
    Ok(ScriptedBuilder::new("left-degree", move |q| {
        force_blue_path(q, &g, n, None)?;
        Ok(())
    })
    .with_bound(bound))
}
