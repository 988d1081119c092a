//! Builder for `(X, P_n)` where `X` is the crossing two-edge matching.

use num_rational::Ratio;

use crate::color::Color::{Blue, Red};
use crate::error::StrategyError;
use crate::script::{Driver, ScriptedBuilder, Step, Vx};

/// `⌊5n/3⌋ + 10`.
pub fn x_bound(n: usize) -> u64 {
    Ratio::new(5 * n as u64, 3).to_integer() + 10
}

fn lost() -> crate::script::Halt {
    StrategyError::Exhausted("red crossing edge did not end the game".into()).into()
}

/// Draws a chain that must come back all blue.
fn blue_chain(q: &mut Driver, seq: &[Vx]) -> Step<()> {
    match q.draw_chain_until(seq, Red)? {
        Some(_) => Err(lost()),
        None => Ok(()),
    }
}

pub fn x_builder(n: usize) -> Result<ScriptedBuilder, StrategyError> {
    if n < 2 {
        return Err(StrategyError::Precondition("x_builder needs n >= 2".into()));
    }
    Ok(ScriptedBuilder::new("x", move |q| {
        let b = q.rightmost();
        let d = q.rightmost();
        let mut path = if q.draw(b, d)? == Blue {
            vec![b, d]
        } else {
            let a = q.before(b);
            let c = q.after(b);
            let e = q.after(d);
            blue_chain(q, &[a, c, e])?;
            vec![a, c, e]
        };
        loop {
            q.trace("state", vec![path.len() as i64, q.moves() as i64]);
            let vk = *path.last().unwrap();
            let y = q.rightmost();
            let z = q.rightmost();
            if q.draw(y, z)? == Red {
                let a = q.after(y);
                let b = q.after(z);
                blue_chain(q, &[vk, a, b])?;
                path.extend([a, b]);
                continue;
            }
            let x = q.before(y);
            if q.draw(x, y)? == Blue {
                let mut us = vec![vk];
                loop {
                    let next = q.before(x);
                    let last = *us.last().unwrap();
                    us.push(next);
                    if q.draw(last, next)? == Red {
                        break;
                    }
                }
                // us = u_1 .. u_l, u_{l+1}; the path runs through u_l.
                let l = us.len() - 1;
                path.extend(&us[1..l]);
                path.pop();
                let x1 = *path.last().unwrap();
                let x2 = q.after(us[l - 1]);
                blue_chain(q, &[x1, x2, x])?;
                path.extend([x2, x, y, z]);
                continue;
            }
            let a1 = q.rightmost();
            let a2 = q.rightmost();
            if q.draw(a1, a2)? == Blue {
                let beta = q.after(x);
                blue_chain(q, &[vk, beta, a1])?;
                path.extend([beta, a1, a2]);
                continue;
            }
            let a3 = q.rightmost();
            let a4 = q.rightmost();
            if q.draw(a3, a4)? == Blue {
                let beta = q.after(x);
                let g1 = q.before(a1);
                let g2 = q.after(a1);
                blue_chain(q, &[vk, beta, g1, g2, a3])?;
                path.extend([beta, g1, g2, a3, a4]);
                continue;
            }
            let w1 = q.after(x);
            let w2 = q.before(a1);
            let w3 = q.after(a1);
            let w4 = q.before(a3);
            let w5 = q.after(a3);
            let w6 = q.after(a4);
            blue_chain(q, &[vk, w1, w2, w3, w4, w5, w6])?;
            path.extend([w1, w2, w3, w4, w5, w6]);
        }
    })
    .with_bound(x_bound(n)))
}
