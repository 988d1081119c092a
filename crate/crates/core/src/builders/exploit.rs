//! Builder that beats the blue-unless-losing painter on `(M_k, P_n)` when `n < k`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::StrategyError;
use crate::script::{ScriptedBuilder, Vx};

/// `n + 2k − 5`.
pub fn exploit_bound(n: usize, k: usize) -> u64 {
    (n + 2 * k - 5) as u64
}

/// The planned queries as integer labels on the line, in play order.
pub fn exploit_plan(n: usize, k: usize) -> Vec<(usize, usize)> {
    let mut moves = Vec::new();
    for i in 1..n - 1 {
        moves.push((10 * i, 10 * i + 10));
    }
    for i in 1..n - 1 {
        moves.push((10 * i + 5, 10 * i + 15));
    }
    moves.push((9, 10));
    moves.push((14, 15));
    for i in 2..n - 1 {
        moves.push((10 * i, 10 * i + 5));
    }
    moves.push((10 * n - 10, 10 * n - 9));
    moves.push((10 * n - 5, 10 * n - 4));
    for i in 1..k - n {
        moves.push((10 * n - 20, 10 * (n + i)));
        moves.push((10 * (n + i), 10 * (n + i) + 5));
    }
    moves
}

pub fn exploit_builder(n: usize, k: usize) -> Result<ScriptedBuilder, StrategyError> {
    if n < 3 || k <= n {
        return Err(StrategyError::Precondition(
            "exploit_builder needs 3 <= n < k".into(),
        ));
    }
    let plan = exploit_plan(n, k);
    Ok(ScriptedBuilder::new("exploit", move |q| {
        let sorted: BTreeSet<usize> = plan.iter().flat_map(|&(a, b)| [a, b]).collect();
        let labels: BTreeMap<usize, Vx> = sorted.into_iter().map(|l| (l, q.rightmost())).collect();
        for &(a, b) in &plan {
            q.draw(labels[&a], labels[&b])?;
        }
        Err(StrategyError::Exhausted("planned queries did not finish the game".into()).into())
    })
    .with_bound(exploit_bound(n, k)))
}
