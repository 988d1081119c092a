//! Builder for `(S'_k, P_n)`: a blue path against a growing red partial
//! St. Ives matching, with a Ramsey subroutine that forces either a long
//! blue path or a red clique.

use crate::color::Color;
use crate::error::StrategyError;
use crate::script::{Driver, ScriptedBuilder, Step, Vx};

use super::ramsey::ramsey;

/// Subroutine playing a clique of fresh vertices.
pub trait BiForce: Send {
    fn name(&self) -> String;

    /// Plays on fresh vertices laid out left to right immediately after
    /// `anchor` and returns a blue monotone path on `len` of them. A red
    /// `K_red` among them is expected to end the game instead.
    fn force(&mut self, q: &mut Driver, anchor: Vx, len: usize, red: usize) -> Step<Vec<Vx>>;

    /// Most moves a single call can take.
    fn max_moves(&self, len: usize, red: usize) -> u64;
}

/// Plays every edge of a clique, longest edges first, stopping once a blue
/// `P_len` is present. The default width is `r(len, red)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueOracle {
    width: Option<usize>,
}

impl CliqueOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_width(width: usize) -> Self {
        CliqueOracle { width: Some(width) }
    }

    pub fn width(&self, len: usize, red: usize) -> usize {
        self.width
            .unwrap_or_else(|| usize::try_from(ramsey(len, red)).unwrap_or(usize::MAX))
    }
}

/// Longest blue monotone path through `xs` (given in line order).
fn longest_blue(q: &Driver, xs: &[Vx]) -> Vec<Vx> {
    let mut best = vec![1usize; xs.len()];
    let mut pred = vec![usize::MAX; xs.len()];
    for j in 0..xs.len() {
        for i in 0..j {
            if q.color(xs[i], xs[j]) == Some(Color::Blue) && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
                pred[j] = i;
            }
        }
    }
    let Some(mut at) = (0..xs.len()).max_by_key(|&j| best[j]) else {
        return Vec::new();
    };
    let mut out = vec![xs[at]];
    while pred[at] != usize::MAX {
        at = pred[at];
        out.push(xs[at]);
    }
    out.reverse();
    out
}

impl BiForce for CliqueOracle {
    fn name(&self) -> String {
        match self.width {
            Some(w) => format!("clique:{w}"),
            None => "clique".into(),
        }
    }

    fn force(&mut self, q: &mut Driver, anchor: Vx, len: usize, red: usize) -> Step<Vec<Vx>> {
        let w = self.width(len, red);
        if w < len {
            return Err(StrategyError::Precondition(format!(
                "clique of width {w} cannot hold P_{len}"
            ))
            .into());
        }
        let xs = q.run_after(anchor, w);
        for gap in (1..w).rev() {
            for i in 0..w - gap {
                if q.draw(xs[i], xs[i + gap])? == Color::Blue {
                    let path = longest_blue(q, &xs);
                    if path.len() >= len {
                        return Ok(path[..len].to_vec());
                    }
                }
            }
        }
        Err(StrategyError::Oracle {
            state: format!("clique of width {w}"),
            reason: format!("neither a blue P_{len} nor a red K_{red}"),
        }
        .into())
    }

    fn max_moves(&self, len: usize, red: usize) -> u64 {
        let w = self.width(len, red) as u64;
        w.saturating_mul(w.saturating_sub(1)) / 2
    }
}

/// Mock that only draws a chain of `len` fresh vertices and fails on any red link.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChainOracle;

impl BiForce for ChainOracle {
    fn name(&self) -> String {
        "chain".into()
    }

    fn force(&mut self, q: &mut Driver, anchor: Vx, len: usize, _red: usize) -> Step<Vec<Vx>> {
        let xs = q.run_after(anchor, len);
        match q.draw_chain_until(&xs, Color::Red)? {
            None => Ok(xs),
            Some(i) => Err(StrategyError::Oracle {
                state: format!("chain of {len}"),
                reason: format!("link {i} came back red"),
            }
            .into()),
        }
    }

    fn max_moves(&self, len: usize, _red: usize) -> u64 {
        len.saturating_sub(1) as u64
    }
}

/// Red edges of the current partial St. Ives copy: the outer nested matching
/// and the inner ones, each listed outermost edge first.
#[derive(Debug, Clone, Default)]
pub struct RedPart {
    pub outer: Vec<(Vx, Vx)>,
    pub inner: Vec<Vec<(Vx, Vx)>>,
}

impl RedPart {
    pub fn edge_count(&self) -> usize {
        self.outer.len() + self.inner.iter().map(Vec::len).sum::<usize>()
    }

    fn push(&mut self, e: (Vx, Vx), k: usize) {
        if self.outer.len() < k {
            self.outer.push(e);
        } else if self.inner.last().is_some_and(|g| g.len() < k) {
            self.inner.last_mut().expect("checked").push(e);
        } else {
            self.inner.push(vec![e]);
        }
    }
}

/// What a single step did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transition {
    /// Blue edge from the path tip: `(a + 1, b)`.
    Extended,
    /// New red edge nested at the tip: `(a', b + 1)`.
    Nested,
    /// All stitch edges red: `(a − k, b + 1)`.
    Stitched,
    /// A blue stitch: longer path, the unfinished inner matching is dropped.
    Rerouted,
}

fn stitch_round(k: usize, b: usize) -> bool {
    b + 1 >= 2 * k && b < k * k && (b + 1).is_multiple_of(k)
}

/// Builder position: a blue path (`a = path.len()`) and a red copy of a
/// member of `S'_k[b]` (`b = red.edge_count()`).
#[derive(Debug, Clone)]
pub struct StIvesState {
    pub k: usize,
    pub path: Vec<Vx>,
    pub red: RedPart,
}

impl StIvesState {
    pub fn new(k: usize, path: Vec<Vx>) -> Self {
        StIvesState {
            k,
            path,
            red: RedPart::default(),
        }
    }

    /// `(k + 1)³`.
    pub fn base(&self) -> usize {
        (self.k + 1).pow(3)
    }

    /// `2(k + 1)²`.
    pub fn clique(&self) -> usize {
        2 * (self.k + 1).pow(2)
    }

    pub fn a(&self) -> usize {
        self.path.len()
    }

    pub fn b(&self) -> usize {
        self.red.edge_count()
    }

    /// Path vertices required inside the innermost red edge.
    pub fn tail(&self) -> usize {
        self.base() - self.b() * self.k
    }

    pub fn done(&self) -> bool {
        self.b() >= (self.k + 1) * self.k
    }

    /// Whether the stitching step applies: `b ∈ {2k − 1, 3k − 1, …, k² − 1}`.
    pub fn needs_stitch(&self) -> bool {
        stitch_round(self.k, self.b())
    }

    pub fn step(&mut self, q: &mut Driver, oracle: &mut dyn BiForce) -> Step<Transition> {
        if self.needs_stitch() {
            self.stitch(q, oracle)
        } else {
            self.nest(q, oracle)
        }
    }

    pub fn nest(&mut self, q: &mut Driver, oracle: &mut dyn BiForce) -> Step<Transition> {
        let va = *self.path.last().expect("path is non-empty");
        let w = q.after(va);
        if q.draw(va, w)? == Color::Blue {
            self.path.push(w);
            return Ok(Transition::Extended);
        }
        let fresh = oracle.force(q, va, self.base(), self.clique())?;
        let zi = self.path.len() - self.tail();
        let (z, z2) = (self.path[zi], fresh[0]);
        if q.draw(z, z2)? == Color::Blue {
            self.path.truncate(zi + 1);
            self.path.extend(fresh);
            self.red.push((va, w), self.k);
        } else {
            self.red.push((z, z2), self.k);
        }
        Ok(Transition::Nested)
    }

    pub fn stitch(&mut self, q: &mut Driver, oracle: &mut dyn BiForce) -> Step<Transition> {
        let k = self.k;
        let ua = self.red.inner.last().expect("an unfinished inner matching")[0].1;
        let fresh = oracle.force(q, ua, self.base() + k, self.clique())?;
        let start = self.path.len() - k;
        let mut stitches = Vec::with_capacity(k);
        for i in 0..k {
            let (c, c2) = (self.path[start + i], fresh[k - 1 - i]);
            if q.draw(c, c2)? == Color::Blue {
                self.path.truncate(start + i + 1);
                self.path.extend_from_slice(&fresh[k - 1 - i..]);
                self.red.inner.pop();
                return Ok(Transition::Rerouted);
            }
            stitches.push((c, c2));
        }
        self.path.truncate(start);
        self.red.inner.pop();
        self.red.inner.push(stitches);
        Ok(Transition::Stitched)
    }
}

/// Move bound for the given oracle; grows with `n / (k + 1)³` on top of `n`
/// because blue stitches give up the unfinished inner matching.
pub fn partial_st_ives_bound(k: usize, n: usize, oracle: &dyn BiForce) -> u64 {
    let base = (k + 1).pow(3);
    let red = 2 * (k + 1).pow(2);
    let k64 = k as u64;
    let e2 = oracle.max_moves(base, red);
    let e3 = oracle.max_moves(base + k, red);
    let reroutes = n.div_ceil(base - k + 1) as u64;
    let raises = (k64 * (k64 + 1)).saturating_add((k64 - 1).saturating_mul(reroutes));
    let per_raise = e2
        .saturating_add(2)
        .max(e3.saturating_add(k64))
        .saturating_add(k64);
    (n as u64)
        .saturating_add(e2)
        .saturating_add(raises.saturating_mul(per_raise))
        .saturating_add(reroutes.saturating_mul(e3.saturating_add(k64)))
}

/// Builder with the Ramsey-width clique oracle.
pub fn partial_st_ives_builder(k: usize, n: usize) -> Result<ScriptedBuilder, StrategyError> {
    partial_st_ives_builder_with(k, n, CliqueOracle::new())
}

pub fn partial_st_ives_builder_with(
    k: usize,
    n: usize,
    oracle: impl BiForce + 'static,
) -> Result<ScriptedBuilder, StrategyError> {
    if k == 0 || n < 2 {
        return Err(StrategyError::Precondition(
            "partial_st_ives_builder needs k >= 1 and n >= 2".into(),
        ));
    }
    let bound = partial_st_ives_bound(k, n, &oracle);
    let mut oracle = oracle;
    Ok(ScriptedBuilder::new("partial-st-ives", move |q| {
        let anchor = q.rightmost();
        let mut st = StIvesState::new(k, Vec::new());
        st.path = oracle.force(q, anchor, st.base().min(n), st.clique())?;
        q.trace("state", vec![st.a() as i64, 0]);
        while !st.done() && st.a() < n {
            st.step(q, &mut oracle)?;
            q.trace("state", vec![st.a() as i64, st.b() as i64]);
        }
        Err(StrategyError::Exhausted(format!(
            "state ({}, {}) did not end the game",
            st.a(),
            st.b()
        ))
        .into())
    })
    .with_bound(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stitch_rounds() {
        let rounds: Vec<usize> = (0..12).filter(|&b| stitch_round(3, b)).collect();
        assert_eq!(rounds, vec![5, 8]);
        assert!((0..2).all(|b| !stitch_round(1, b)));
        assert_eq!(
            (0..6).filter(|&b| stitch_round(2, b)).collect::<Vec<_>>(),
            vec![3]
        );
    }
}
