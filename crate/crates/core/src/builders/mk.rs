//! Builder for `(M_k, P_n)` tracking a blue path followed by a red matching.

use crate::color::Color;
use crate::error::StrategyError;
use crate::script::{ScriptedBuilder, Vx};

/// `n + 2k − 4`.
pub fn mk_bound(k: usize, n: usize) -> u64 {
    (n + 2 * k - 4) as u64
}

pub fn mk_builder(k: usize, n: usize) -> Result<ScriptedBuilder, StrategyError> {
    if k < 2 || n < 4 {
        return Err(StrategyError::Precondition(
            "mk_builder needs k >= 2 and n >= 4".into(),
        ));
    }
    Ok(ScriptedBuilder::new("mk", move |q| {
        // Opening: a path grown leftward until Painter answers red.
        let mut opening = vec![q.rightmost()];
        let lead = loop {
            let prev = *opening.last().unwrap();
            let p = q.before(prev);
            let c = q.draw(p, prev)?;
            q.trace(
                "weight",
                vec![if c == Color::Blue {
                    opening.len() as i64 + 1
                } else {
                    opening.len() as i64 + 2
                }],
            );
            if c == Color::Red {
                break p;
            }
            opening.push(p);
        };
        opening.reverse();
        // `lead` is the red first vertex of the refined state, `blue` the path.
        let mut lead: Option<Vx> = Some(lead);
        let mut blue = opening;
        let mut y = 0usize;
        loop {
            if lead.is_some() && blue.len() == 1 {
                lead = None;
                y += 1;
                blue = vec![q.leftmost()];
            }
            if blue.is_empty() {
                blue = vec![q.leftmost()];
            }
            let tip = *blue.last().unwrap();
            let w = q.after(tip);
            match q.draw(tip, w)? {
                Color::Blue => blue.push(w),
                Color::Red => {
                    blue.pop();
                    y += 1;
                }
            }
            let weight = blue.len() + 2 * y + if lead.is_some() { 2 } else { 0 };
            q.trace("weight", vec![weight as i64]);
        }
    })
    .with_bound(mk_bound(k, n)))
}
