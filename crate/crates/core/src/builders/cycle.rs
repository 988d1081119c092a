//! Builder for `(G, C_n)`: force a long blue path, close it into a cycle
//! with a copy of `G`, then shorten the cycle with scaled copies of `G`.

use num_rational::Ratio;

use super::left_degree::{force_blue_path, left_degree_bound};
use crate::board::VertexId;
use crate::color::Color;
use crate::error::StrategyError;
use crate::graph::{interval_partition, OrderedGraph};
use crate::script::{Driver, ScriptedBuilder, Step, Vx};

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// One shortening step on a cycle with `t` vertices of slack: the copy is
/// scaled by `⌊t/(k−1)⌋`, and the worst blue edge leaves this much slack.
pub fn scaled_step_slack(t: usize, k: usize) -> usize {
    t - t / (k - 1) + 1
}

/// Vertices removed in the constant-reduction step when the chosen edges
/// have length `i·⌊ℓ/(k−1)!⌋`.
pub fn constant_step_removal(k: usize, l: usize, i: usize) -> usize {
    let f = factorial(k - 1);
    f * (l / f) - f / i
}

/// Shape of the copies used in the final step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalPlan {
    /// Scale of the first batch of copies (1, or 2 when `G` has an edge
    /// between consecutive vertices).
    pub scale: usize,
    /// Distinct edge lengths of `G`.
    pub lengths: Vec<usize>,
    pub k: usize,
    pub max_len: usize,
}

impl FinalPlan {
    pub fn new(g: &OrderedGraph) -> Self {
        let lengths: Vec<usize> = g.edge_lengths().into_iter().collect();
        let scale = if lengths.contains(&1) { 2 } else { 1 };
        FinalPlan {
            scale,
            max_len: *lengths.last().unwrap_or(&1),
            lengths,
            k: g.n(),
        }
    }

    /// Vertices removed by a first-batch edge of `G`-length `d`.
    pub fn removal(&self, d: usize) -> usize {
        self.scale * d - 1
    }

    /// First-batch edges of `G`-length `d` needed for slack `t`.
    pub fn need(&self, t: usize, d: usize) -> usize {
        t / self.removal(d)
    }

    /// Worst-case number of first-batch copies before some length has
    /// enough edges.
    pub fn max_first_copies(&self, t: usize) -> usize {
        self.lengths
            .iter()
            .map(|&d| self.need(t, d).saturating_sub(1))
            .sum::<usize>()
            + 1
    }

    /// Whether slack `t` can be removed exactly on a cycle of `n + t`
    /// vertices against any Painter that never completes a red `G`.
    pub fn feasible(&self, n: usize, t: usize) -> bool {
        if t == 0 {
            return true;
        }
        let window = (self.k - 1) * self.scale + 1;
        let mut worst_second = 0;
        for &d in &self.lengths {
            let r = self.removal(d);
            if self.need(t, d) == 0 {
                return false;
            }
            if r > 1 {
                let extra = t % r;
                if extra * (r * self.max_len - 1) > t {
                    return false;
                }
                worst_second = worst_second.max(extra * ((self.k - 1) * r + 1));
            }
        }
        self.max_first_copies(t) * window + worst_second <= n + t
    }

    pub fn max_moves(&self, t: usize, edges: usize) -> u64 {
        let second = self
            .lengths
            .iter()
            .map(|&d| t % self.removal(d))
            .max()
            .unwrap_or(0);
        ((self.max_first_copies(t) + second) * edges) as u64
    }
}

/// Draws a copy of `g` on `cyc` with vertex `v` at `cyc[offset + v·scale]`,
/// stopping at the first blue pair. Returns it as cycle indices.
fn draw_copy(
    q: &mut Driver,
    g: &OrderedGraph,
    cyc: &[Vx],
    offset: usize,
    scale: usize,
) -> Step<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    // Longest edges first: they shorten the cycle most.
    edges.sort_by_key(|&(i, j)| std::cmp::Reverse(j - i));
    for (i, j) in edges {
        let (a, b) = (offset + i * scale, offset + j * scale);
        if q.get_or_draw(cyc[a], cyc[b])? == Color::Blue {
            return Ok((a, b));
        }
    }
    Err(StrategyError::Exhausted("red copy did not end the game".into()).into())
}

/// Drops the cycle vertices strictly inside each chord. Chords must not
/// overlap.
pub fn shorten<T: Copy>(cyc: &[T], chords: &[(usize, usize)]) -> Vec<T> {
    let mut keep = vec![true; cyc.len()];
    for &(a, b) in chords {
        for k in keep.iter_mut().take(b).skip(a + 1) {
            *k = false;
        }
    }
    cyc.iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(&v, _)| v)
        .collect()
}

fn final_step(q: &mut Driver, g: &OrderedGraph, n: usize, mut cyc: Vec<Vx>) -> Step<()> {
    let plan = FinalPlan::new(g);
    let t = cyc.len() - n;
    q.trace("final", vec![t as i64]);
    if t == 0 {
        return Err(StrategyError::Exhausted(
            "blue cycle of the target length did not end the game".into(),
        )
        .into());
    }
    if !plan.feasible(n, t) {
        return Err(StrategyError::Precondition(format!(
            "cycle of length {} is too short to remove {t} vertices",
            cyc.len()
        ))
        .into());
    }
    let window = (plan.k - 1) * plan.scale + 1;
    let mut by_len: Vec<Vec<(usize, usize)>> = vec![Vec::new(); plan.max_len + 1];
    let mut offset = 0;
    let d = loop {
        let (a, b) = draw_copy(q, g, &cyc, offset, plan.scale)?;
        offset += window;
        let d = (b - a) / plan.scale;
        by_len[d].push((a, b));
        if by_len[d].len() >= plan.need(t, d) {
            break d;
        }
    };
    let r = plan.removal(d);
    q.trace(
        "first-batch",
        vec![d as i64, by_len[d].len() as i64, t as i64],
    );
    let mut chords = Vec::new();
    let mut left = t;
    if r > 1 {
        for _ in 0..t % r {
            let (a, b) = draw_copy(q, g, &cyc, offset, r)?;
            offset += (plan.k - 1) * r + 1;
            left -= b - a - 1;
            chords.push((a, b));
        }
    }
    chords.extend(by_len[d].iter().take(left / r));
    cyc = shorten(&cyc, &chords);
    q.trace("cycle", vec![cyc.len() as i64]);
    Err(StrategyError::Exhausted(format!(
        "blue cycle of length {} did not end the game",
        cyc.len()
    ))
    .into())
}

/// Which pipeline the builder runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleRoute {
    /// Shortcut for 2-ichromatic graphs with at least three vertices,
    /// general pipeline otherwise.
    Auto,
    General,
}

#[derive(Debug, Clone)]
pub struct CycleOptions {
    pub route: CycleRoute,
    /// Refuse `n` below the size the general pipeline's estimates need.
    pub enforce_threshold: bool,
    /// Slack of the shortcut path; defaults to the largest value up to `k³`
    /// for which the final step fits.
    pub slack: Option<usize>,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            route: CycleRoute::Auto,
            enforce_threshold: true,
            slack: None,
        }
    }
}

/// `n ≥ 2k⁵ + 2k²(k−1)!`.
pub fn general_threshold(k: usize) -> usize {
    2 * k.pow(5) + 2 * k * k * factorial(k - 1)
}

/// Slack left by the shortcut's closing chord for each edge `(i, j)` of
/// `g`: the cycle runs from path vertex `i` to path vertex `n + t₀ + j`.
fn shortcut_slacks(g: &OrderedGraph, t0: usize) -> impl Iterator<Item = usize> + '_ {
    g.edges().map(move |(i, j)| t0 + j - i + 1)
}

/// Largest slack `t₀ ≤ k³` whose shortcut cycles all admit the final step.
pub fn shortcut_slack(g: &OrderedGraph, n: usize) -> Option<usize> {
    let plan = FinalPlan::new(g);
    (0..=g.n().pow(3))
        .rev()
        .find(|&t0| shortcut_slacks(g, t0).all(|t| plan.feasible(n, t)))
}

enum Pipeline {
    Shortcut { slack: usize },
    General,
}

fn choose(g: &OrderedGraph, n: usize, opts: &CycleOptions) -> Result<Pipeline, StrategyError> {
    let k = g.n();
    let two = interval_partition(g).len() == 2;
    if opts.route == CycleRoute::Auto && two && k >= 3 {
        let slack = match opts.slack {
            Some(s) => s,
            None => shortcut_slack(g, n).ok_or_else(|| {
                StrategyError::Precondition(format!(
                    "n = {n} is too small for the shortcut with this graph"
                ))
            })?,
        };
        return Ok(Pipeline::Shortcut { slack });
    }
    if k >= 3 && opts.enforce_threshold && n < general_threshold(k) {
        return Err(StrategyError::Precondition(format!(
            "n = {n} is below {} for k = {k}",
            general_threshold(k)
        )));
    }
    Ok(Pipeline::General)
}

/// Slack of `m` over `(1+ε)n` with `ε = 1/(2k²)`, rounded down.
fn eps_slack(m: usize, n: usize, k: usize) -> i64 {
    (Ratio::from_integer(m as i64)
        - Ratio::new(n as i64 * (2 * k * k + 1) as i64, (2 * k * k) as i64))
    .floor()
    .to_integer()
}

fn general(q: &mut Driver, g: &OrderedGraph, n: usize) -> Step<()> {
    let k = g.n();
    let len = (n - 1) * (k - 1) + 1;
    let path = force_blue_path(q, g, len, None)?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(i, j)| j - i);
    let mut chord = None;
    for (i, j) in edges {
        if q.draw(path[i * (n - 1)], path[j * (n - 1)])? == Color::Blue {
            chord = Some((i * (n - 1), j * (n - 1)));
            break;
        }
    }
    let Some((a, b)) = chord else {
        return Err(StrategyError::Exhausted("red copy did not end the game".into()).into());
    };
    let mut cyc = path[a..=b].to_vec();
    q.trace("cycle", vec![cyc.len() as i64]);
    if k == 2 {
        return Err(StrategyError::Exhausted("closing edge did not end the game".into()).into());
    }
    // Bring the length down to at most (1 + 1/k²)n.
    while k * k * cyc.len() > (k * k + 1) * n {
        let t = eps_slack(cyc.len(), n, k).max(0) as usize;
        let s = t / (k - 1);
        if s < 2 {
            return Err(
                StrategyError::Precondition("cycle too short for a scaled copy".into()).into(),
            );
        }
        q.trace("step", vec![1, s as i64]);
        let (a, b) = draw_copy(q, g, &cyc, 0, s)?;
        cyc = shorten(&cyc, &[(a, b)]);
        q.trace("cycle", vec![cyc.len() as i64]);
    }
    // Bring the slack down to between k³ and k³ + 2(k−1)!.
    let f = factorial(k - 1);
    let base = n + k.pow(3);
    if cyc.len() >= base + f {
        let l = cyc.len() - base;
        let s = l / f;
        q.trace("step", vec![2, s as i64]);
        let window = (k - 1) * s + 1;
        let mut by_mult: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
        let mut offset = 0;
        let i = loop {
            if offset + window > cyc.len() {
                return Err(
                    StrategyError::Precondition("no room for another scaled copy".into()).into(),
                );
            }
            let (a, b) = draw_copy(q, g, &cyc, offset, s)?;
            offset += window;
            let i = (b - a) / s;
            by_mult[i].push((a, b));
            if by_mult[i].len() >= f / i {
                break i;
            }
        };
        let chords: Vec<_> = by_mult[i].iter().take(f / i).copied().collect();
        cyc = shorten(&cyc, &chords);
        q.trace("cycle", vec![cyc.len() as i64]);
    }
    final_step(q, g, n, cyc)
}

fn shortcut(q: &mut Driver, g: &OrderedGraph, n: usize, slack: usize) -> Step<()> {
    let k = g.n();
    let a = interval_partition(g)[1].0;
    let len = n + slack + k;
    let path = force_blue_path(q, g, len, None)?;
    let at = |v: usize| if v < a { v } else { len - k + v };
    let mut chord = None;
    for (i, j) in g.edges() {
        if q.draw(path[at(i)], path[at(j)])? == Color::Blue {
            chord = Some((at(i), at(j)));
            break;
        }
    }
    let Some((p, r)) = chord else {
        return Err(StrategyError::Exhausted("red copy did not end the game".into()).into());
    };
    let cyc = path[p..=r].to_vec();
    q.trace("cycle", vec![cyc.len() as i64]);
    final_step(q, g, n, cyc)
}

/// Worst-case move count of the pipeline `cycle_builder` would run.
pub fn cycle_bound(g: &OrderedGraph, n: usize, opts: &CycleOptions) -> Result<u64, StrategyError> {
    let k = g.n();
    let m = g.edge_count();
    let plan = FinalPlan::new(g);
    match choose(g, n, opts)? {
        Pipeline::Shortcut { slack } => {
            let worst = shortcut_slacks(g, slack)
                .map(|t| plan.max_moves(t, m))
                .max()
                .unwrap_or(0);
            Ok(left_degree_bound(g, n + slack + k) + m as u64 + worst)
        }
        Pipeline::General => {
            let len = (n - 1) * (k - 1) + 1;
            let mut total = left_degree_bound(g, len) + m as u64;
            if k == 2 {
                return Ok(total);
            }
            let mut cyc = len;
            while k * k * cyc > (k * k + 1) * n {
                let t = eps_slack(cyc, n, k).max(0) as usize;
                let s = (t / (k - 1)).max(1);
                total += m as u64;
                cyc -= s - 1;
            }
            let f = factorial(k - 1);
            total += ((1..k).map(|i| f / i - 1).sum::<usize>() + 1) as u64 * m as u64;
            let base = k.pow(3);
            let worst = (base..=base + 2 * f)
                .map(|t| plan.max_moves(t, m))
                .max()
                .unwrap_or(0);
            Ok(total + worst)
        }
    }
}

/// Runs only the final step, starting from a board whose vertices `cycle`
/// (left to right) already carry a blue ordered cycle.
pub fn cycle_finish_builder(
    g: &OrderedGraph,
    n: usize,
    cycle: Vec<VertexId>,
) -> Result<ScriptedBuilder, StrategyError> {
    if cycle.len() < n {
        return Err(StrategyError::Precondition(
            "cycle is shorter than the target".into(),
        ));
    }
    let plan = FinalPlan::new(g);
    let t = cycle.len() - n;
    if !plan.feasible(n, t) {
        return Err(StrategyError::Precondition(format!(
            "cannot remove {t} vertices from a cycle of length {}",
            cycle.len()
        )));
    }
    let bound = plan.max_moves(t, g.edge_count());
    let g = g.clone();
    Ok(ScriptedBuilder::new("cycle-finish", move |q| {
        let handles: Vec<Vx> = q.initial_vertices().to_vec();
        let cyc: Vec<Vx> = cycle
            .iter()
            .map(|&id| {
                let pos = q.board().position(id).expect("cycle vertex on the board");
                handles[pos]
            })
            .collect();
        final_step(q, &g, n, cyc)
    })
    .with_bound(bound))
}

pub fn cycle_builder(g: &OrderedGraph, n: usize) -> Result<ScriptedBuilder, StrategyError> {
    cycle_builder_with(g, n, CycleOptions::default())
}

pub fn cycle_builder_with(
    g: &OrderedGraph,
    n: usize,
    opts: CycleOptions,
) -> Result<ScriptedBuilder, StrategyError> {
    if n < 3 {
        return Err(StrategyError::Precondition(
            "cycle_builder needs n >= 3".into(),
        ));
    }
    if g.n() < 2 || g.edge_count() == 0 {
        return Err(StrategyError::Precondition(
            "cycle_builder needs a graph with an edge".into(),
        ));
    }
    let bound = cycle_bound(g, n, &opts)?;
    let pipeline = choose(g, n, &opts)?;
    let g = g.clone();
    Ok(ScriptedBuilder::new("cycle", move |q| match pipeline {
        Pipeline::Shortcut { slack } => shortcut(q, &g, n, slack),
        Pipeline::General => general(q, &g, n),
    })
    .with_bound(bound))
}
