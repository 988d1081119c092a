//! Builder for `(P_3, P_n)`: two claw phases and a closing path.

use num_rational::Ratio;

use super::claw::{claw, Direction};
use crate::color::Color;
use crate::error::StrategyError;
use crate::script::{Driver, ScriptedBuilder, Step, Vx};

/// `⌊8n/3 − 10/3⌋`.
pub fn p3_bound(n: usize) -> u64 {
    (Ratio::new(8 * n as i64 - 10, 3))
        .floor()
        .to_integer()
        .max(0) as u64
}

fn chain(q: &mut Driver, seq: &[Vx]) -> Step<()> {
    if q.draw_chain_until(seq, Color::Red)?.is_some() {
        return Err(StrategyError::Exhausted(
            "red edge on the closing path did not end the game".into(),
        )
        .into());
    }
    Ok(())
}

pub fn p3_builder(n: usize) -> Result<ScriptedBuilder, StrategyError> {
    if n < 2 {
        return Err(StrategyError::Precondition(
            "p3_builder needs n >= 2".into(),
        ));
    }
    Ok(ScriptedBuilder::new("p3", move |q| {
        let s1 = q.rightmost();
        let one = claw(
            q,
            Direction::Forward,
            s1,
            usize::MAX,
            usize::MAX,
            Some(n - 1),
        )?;
        let k = one.path.len();
        q.trace("phase1", vec![k as i64, one.leftovers.len() as i64]);
        let long = 3 * k > n;
        let s2 = q.rightmost();
        let (k0, l0) = if long { (k, n - k) } else { (k, k) };
        let two = claw(q, Direction::Reverse, s2, k0, l0, None)?;
        // Cases 1 and 2: phase 2 gave a path; 3 and 4: it gave leftovers.
        let (case, seq): (i64, Vec<Vx>) = if two.path.len() >= k {
            let seq = one
                .leftovers
                .iter()
                .chain(&two.path[..1])
                .copied()
                .collect();
            (if long { 1 } else { 2 }, seq)
        } else if long {
            (
                3,
                one.path[k - 1..]
                    .iter()
                    .chain(&two.leftovers)
                    .copied()
                    .collect(),
            )
        } else {
            (
                4,
                one.leftovers
                    .iter()
                    .chain(&two.leftovers)
                    .copied()
                    .collect(),
            )
        };
        q.trace("case", vec![case]);
        chain(q, &seq)?;
        Err(StrategyError::Exhausted("closing path did not finish the game".into()).into())
    })
    .with_bound(p3_bound(n)))
}
