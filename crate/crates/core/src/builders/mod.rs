//! Builder strategies with their move bounds.

pub mod claw;
pub mod cycle;
pub mod exploit;
pub mod k1k;
pub mod left_degree;
pub mod mk;
pub mod p3;
pub mod ramsey;
pub mod st_ives;
pub mod tripartite;
pub mod x;

pub use claw::{claw, ClawOutcome, Direction};
pub use cycle::{
    constant_step_removal, cycle_bound, cycle_builder, cycle_builder_with, cycle_finish_builder,
    factorial, scaled_step_slack, shortcut_slack, CycleOptions, CycleRoute, FinalPlan,
};
pub use exploit::{exploit_bound, exploit_builder, exploit_plan};
pub use k1k::{k1k_bound, k1k_builder};
pub use left_degree::{force_blue_path, left_degree_bound, left_degree_builder};
pub use mk::{mk_bound, mk_builder};
pub use p3::{p3_bound, p3_builder};
pub use st_ives::{
    partial_st_ives_bound, partial_st_ives_builder, partial_st_ives_builder_with, BiForce,
    ChainOracle, CliqueOracle, StIvesState, Transition,
};
pub use tripartite::{tripartite_bound, tripartite_builder, Parts};
pub use x::{x_bound, x_builder};

/// `⌈log₂ n⌉`, with `ceil_lg(1) = 0`.
pub fn ceil_lg(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        u64::from(64 - (n - 1).leading_zeros())
    }
}
