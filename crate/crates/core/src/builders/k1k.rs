//! Builder for `(K_{1,k}, P_n)`: fan out from the path tip.

use crate::color::Color;
use crate::error::StrategyError;
use crate::script::ScriptedBuilder;

/// `k(n − 1)`.
pub fn k1k_bound(k: usize, n: usize) -> u64 {
    (k * n.saturating_sub(1)) as u64
}

pub fn k1k_builder(k: usize, n: usize) -> Result<ScriptedBuilder, StrategyError> {
    if k == 0 || n < 2 {
        return Err(StrategyError::Precondition(
            "k1k_builder needs k >= 1 and n >= 2".into(),
        ));
    }
    Ok(ScriptedBuilder::new("k1k", move |q| {
        let mut tip = q.rightmost();
        loop {
            let mut extended = false;
            for _ in 0..k {
                let w = q.rightmost();
                if q.draw(tip, w)? == Color::Blue {
                    tip = w;
                    extended = true;
                    break;
                }
            }
            if !extended {
                return Err(
                    StrategyError::Exhausted("red star did not end the game".into()).into(),
                );
            }
        }
    })
    .with_bound(k1k_bound(k, n)))
}
