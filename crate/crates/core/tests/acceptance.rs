//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use ordered_ramsey::builders::*;
use ordered_ramsey::graph::{
    find_embedding, interval_chromatic_number, longest_monotone_path, OrderedGraph,
};
use ordered_ramsey::painters::*;
use ordered_ramsey::script::ScriptedBuilder;
use ordered_ramsey::solver::{best_response, canonicalize, optimal_painter, solve};
use ordered_ramsey::{
    build_family, play_from, play_game, replay, BlueTarget, BuilderStrategy, Color, Outcome,
    PainterStrategy,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn fam(spec: &str) -> OrderedGraph {
    build_family(spec).unwrap()
}

fn path(n: usize) -> BlueTarget {
    BlueTarget::Path { n }
}

/// All-red, all-blue, twenty random painters and both greedy painters.
fn suite(g: &OrderedGraph, target: BlueTarget) -> Vec<Box<dyn PainterStrategy>> {
    let mut v: Vec<Box<dyn PainterStrategy>> = vec![
        Box::new(all_red()),
        Box::new(all_blue()),
        Box::new(greedy_red_unless(g)),
        Box::new(greedy_blue_unless_target(target)),
    ];
    for seed in 0..20 {
        v.push(Box::new(random_painter(seed)));
    }
    v
}

/// Plays `make()` against every painter and checks that each game is
/// decided within the builder's bound. Returns the move counts.
fn within_bound(
    label: &str,
    make: &dyn Fn() -> ScriptedBuilder,
    g: &OrderedGraph,
    target: BlueTarget,
    painters: &mut [Box<dyn PainterStrategy>],
) -> Result<Vec<(Outcome, usize)>, String> {
    let mut out = Vec::new();
    for p in painters.iter_mut() {
        let mut b = make();
        let bound = b.bound().ok_or(format!("{label}: no bound"))?;
        let t = play_game(&mut b, p.as_mut(), g, target, bound as usize + 1)
            .map_err(|e| format!("{label} vs {}: {e}", p.name()))?;
        replay(&t).map_err(|e| format!("{label} vs {}: replay {e}", p.name()))?;
        ensure!(
            t.result != Outcome::Capped && t.moves.len() as u64 <= bound,
            "{label} vs {}: {:?} after {} moves, bound {bound}",
            p.name(),
            t.result,
            t.moves.len()
        );
        out.push((t.result, t.moves.len()));
    }
    Ok(out)
}

fn exact_values() -> Check {
    let mut cases: Vec<(&str, usize, usize)> = vec![("P:2", 2, 1)];
    for n in 3..=6 {
        cases.push(("P:2", n, n - 1));
    }
    cases.extend([
        ("Kp:1,2", 2, 2),
        ("Kp:1,2", 3, 4),
        ("M:2", 4, 4),
        ("M:2", 5, 5),
        ("P:3", 3, 4),
    ]);
    for (red, n, want) in cases {
        let r = solve(&fam(red), path(n), 20).map_err(|e| e.to_string())?;
        ensure!(
            r.value == Some(want),
            "{red} vs P{n}: {:?}, expected {want}",
            r.value
        );
    }
    Ok(())
}

fn upper_bounds() -> Check {
    let k3 = fam("K:3");
    let k12 = fam("Kp:1,2");
    within_bound(
        "left-degree K3 P5",
        &|| left_degree_builder(&k3, 5).unwrap(),
        &k3,
        path(5),
        &mut suite(&k3, path(5)),
    )?;
    within_bound(
        "left-degree K12 P6",
        &|| left_degree_builder(&k12, 6).unwrap(),
        &k12,
        path(6),
        &mut suite(&k12, path(6)),
    )?;
    let p3 = fam("P:3");
    let x = fam("X");
    for n in 2..=8 {
        let mut ps = suite(&p3, path(n));
        if n <= 4 {
            ps.push(Box::new(optimal_painter(&p3, path(n), 20).unwrap()));
        }
        within_bound("p3", &|| p3_builder(n).unwrap(), &p3, path(n), &mut ps)?;
        let mut ps = suite(&x, path(n));
        if n <= 4 {
            ps.push(Box::new(optimal_painter(&x, path(n), 20).unwrap()));
        }
        within_bound("x", &|| x_builder(n).unwrap(), &x, path(n), &mut ps)?;
    }
    for k in 1..=3 {
        let g = fam(&format!("Claw:{k}"));
        for n in 2..=5 {
            let mut ps = suite(&g, path(n));
            if k * (n - 1) <= 4 {
                ps.push(Box::new(optimal_painter(&g, path(n), 20).unwrap()));
            }
            let res = within_bound("k1k", &|| k1k_builder(k, n).unwrap(), &g, path(n), &mut ps)?;
            // greedy-red is third in the suite
            ensure!(
                res[2] == (Outcome::BlueWin, k * (n - 1)),
                "k1k k={k} n={n} greedy-red: {:?}",
                res[2]
            );
        }
    }
    for k in 2..=3 {
        let g = fam(&format!("M:{k}"));
        for n in 4..=8 {
            let mut ps = suite(&g, path(n));
            if k == 2 && n <= 5 {
                ps.push(Box::new(optimal_painter(&g, path(n), 20).unwrap()));
            }
            let res = within_bound("mk", &|| mk_builder(k, n).unwrap(), &g, path(n), &mut ps)?;
            if n >= 3 * k - 3 {
                ensure!(
                    res[3].1 as u64 == mk_bound(k, n),
                    "mk k={k} n={n} greedy-blue used {}",
                    res[3].1
                );
            }
        }
    }
    let t = fam("Kp:1,1,1");
    let parts = Parts { a: 1, b: 1, c: 1 };
    within_bound(
        "tripartite K111 P12",
        &|| tripartite_builder(&t, parts, 2, 12).unwrap(),
        &t,
        path(12),
        &mut suite(&t, path(12)),
    )?;
    Ok(())
}

fn lower_bounds() -> Check {
    let br = |p: &mut dyn PainterStrategy, red: &str, n: usize, cap: usize| {
        best_response(p, &fam(red), path(n), cap).map_err(|e| e.to_string())
    };
    let p3 = fam("P:3");
    for n in 2..=5 {
        let v = br(&mut greedy_red_unless(&p3), "P:3", n, 2 * n - 2)?;
        ensure!(v == Some(2 * n - 2), "greedy-red P3 P{n}: {v:?}");
    }
    for n in 4..=5 {
        let v = br(&mut greedy_blue_unless(n), "M:2", n, n)?;
        ensure!(v == Some(n), "greedy-blue M2 P{n}: {v:?}");
    }
    let k12 = fam("Kp:1,2");
    for n in 2..=4 {
        let v = br(&mut greedy_red_unless(&k12), "Kp:1,2", n, 2 * (n - 1))?;
        ensure!(v == Some(2 * (n - 1)), "greedy-red K12 P{n}: {v:?}");
    }
    let x = fam("X");
    for n in 2..=4 {
        let need = (3 * (n - 1usize)).div_ceil(2);
        let v = br(&mut greedy_red_unless(&x), "X", n, 20)?;
        ensure!(
            v.is_some_and(|v| v >= need),
            "greedy-red X P{n}: {v:?} < {need}"
        );
    }
    Ok(())
}

fn exploit() -> Check {
    let mut b = exploit_builder(4, 6).unwrap();
    let t = play_game(
        &mut b,
        &mut greedy_blue_unless(4),
        &fam("M:6"),
        path(4),
        100,
    )
    .map_err(|e| e.to_string())?;
    replay(&t).map_err(|e| e.to_string())?;
    ensure!(
        (t.result, t.moves.len()) == (Outcome::RedWin, 11),
        "{:?} in {}",
        t.result,
        t.moves.len()
    );
    let plan = exploit_plan(4, 6);
    ensure!(
        plan.len() == t.moves.len(),
        "plan has {} queries",
        plan.len()
    );
    let pos = |v| t.order.iter().position(|&w| w == v).unwrap();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (&(a, b), m) in plan.iter().zip(&t.moves) {
        pairs.push((a, pos(m.left)));
        pairs.push((b, pos(m.right)));
    }
    for &(la, pa) in &pairs {
        for &(lb, pb) in &pairs {
            ensure!(la.cmp(&lb) == pa.cmp(&pb), "labels {la},{lb} at {pa},{pb}");
        }
    }
    Ok(())
}

fn cycle() -> Check {
    let x = fam("X");
    let cyc = BlueTarget::Cycle { n: 20 };
    within_bound(
        "cycle X C20",
        &|| cycle_builder(&x, 20).unwrap(),
        &x,
        cyc,
        &mut suite(&x, cyc),
    )?;
    for k in 3..=5usize {
        for t in 2 * (k - 1)..200 {
            let next = scaled_step_slack(t, k);
            ensure!(
                next < t || t < 2 * (k - 1),
                "scaled step k={k} t={t} -> {next}"
            );
        }
        let f = factorial(k - 1);
        for l in f..f + 60 {
            for i in 1..k {
                let r = constant_step_removal(k, l, i);
                let left = k.pow(3) + l - r;
                ensure!(
                    r <= l && (k.pow(3)..=k.pow(3) + 2 * f).contains(&left),
                    "constant step k={k} l={l} i={i}: removes {r}"
                );
            }
        }
    }
    ensure!(
        shortcut_slack(&x, 20) == Some(3),
        "shortcut slack {:?}",
        shortcut_slack(&x, 20)
    );
    let plan = FinalPlan::new(&x);
    let len = 26;
    ensure!(plan.feasible(20, len - 20), "final step infeasible");
    let (board, ids) = blue_cycle_board(len);
    let mut painters = suite(&x, cyc);
    for p in painters.iter_mut() {
        let mut b = cycle_finish_builder(&x, 20, ids.clone()).map_err(|e| e.to_string())?;
        let bound = b.bound().unwrap();
        let trace = b.trace();
        let (t, end) = play_from(board.clone(), &mut b, p.as_mut(), &x, cyc, 1000)
            .map_err(|e| e.to_string())?;
        ensure!(
            t.result != Outcome::Capped && t.moves.len() as u64 <= bound,
            "final step vs {}: {:?} in {}",
            p.name(),
            t.result,
            t.moves.len()
        );
        if p.name().starts_with("greedy-red") {
            ensure!(t.result == Outcome::BlueWin, "greedy-red final step");
            ensure!(
                end.longest_path(Color::Blue).0 >= 20,
                "no C20 in the final board"
            );
        }
        drop(b);
        let _ = trace;
    }
    Ok(())
}

fn st_ives() -> Check {
    let s = states(1, &mut letters(&[("B", 8)]), 8);
    ensure!(s == vec![vec![8, 0], vec![9, 0]], "extend: {s:?}");
    let nest = [("B", 7), ("R", 1), ("B", 7), ("R", 1), ("B", 1)];
    let s = states(1, &mut letters(&nest), 16);
    ensure!(s == vec![vec![8, 0], vec![8, 1]], "nest: {s:?}");
    let mut parts = to_stitch_round();
    parts.extend([("B", 28), ("R", 2)]);
    let s = states(2, &mut letters(&parts), 26 + 3 * 28 + 30);
    ensure!(s.last() == Some(&vec![25, 4]), "red stitches: {s:?}");
    let mut parts = to_stitch_round();
    parts.extend([("B", 28), ("R", 1), ("B", 1)]);
    let s = states(2, &mut letters(&parts), 26 + 3 * 28 + 30);
    ensure!(s.last() == Some(&vec![56, 2]), "blue stitch: {s:?}");

    let sp1 = fam("Sp:1");
    for n in [2, 4, 8, 9, 12, 20] {
        let mut ps: Vec<(usize, Box<dyn PainterStrategy>)> =
            vec![(8, Box::new(all_red())), (8, Box::new(all_blue()))];
        if n >= 9 {
            ps.push((8, Box::new(greedy_blue_unless(n))));
            ps.push((10, Box::new(greedy_red_unless(&sp1))));
        }
        for (width, p) in ps.iter_mut() {
            let oracle = CliqueOracle::with_width(*width);
            let bound = partial_st_ives_bound(1, n, &oracle);
            let mut b = partial_st_ives_builder_with(1, n, oracle).unwrap();
            let t = play_game(&mut b, p.as_mut(), &sp1, path(n), bound as usize + 1)
                .map_err(|e| e.to_string())?;
            ensure!(
                t.result != Outcome::Capped && t.moves.len() as u64 <= bound,
                "k=1 n={n} vs {}: {:?} in {}",
                p.name(),
                t.result,
                t.moves.len()
            );
        }
    }
    Ok(())
}

fn structure_oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let g = graph_from_mask(n, rng.gen());
        let want = brute_interval_chromatic(&g);
        ensure!(interval_chromatic_number(&g) == want, "ichromatic of {g:?}");
        let steps: Vec<(u16, u16, bool)> = (0..rng.gen_range(0..16)).map(|_| rng.gen()).collect();
        let b = board_from_steps(&steps, 8);
        for color in [Color::Red, Color::Blue] {
            let (len, _) = longest_monotone_path(&b, color);
            ensure!(len == brute_longest(&b, color), "longest {color:?} path");
        }
        let p = graph_from_mask(rng.gen_range(1..=4), rng.gen());
        ensure!(
            find_embedding(&g, &p, None).is_some() == brute_embeds(&g, &p),
            "embedding of {p:?} in {g:?}"
        );
    }
    for i in 0..10_000u64 {
        let steps: Vec<(u16, u16, bool)> = (0..rng.gen_range(0..12)).map(|_| rng.gen()).collect();
        let b = board_from_steps(&steps, 7);
        let copy = shuffled_copy(&b, i, (i % 3) as usize);
        ensure!(
            canonicalize(&b) == canonicalize(&copy),
            "isomorphic boards with different keys"
        );
        let steps: Vec<(u16, u16, bool)> = (0..rng.gen_range(0..4)).map(|_| rng.gen()).collect();
        let other = board_from_steps(&steps, 7);
        ensure!(
            (explicit_form(&b) == explicit_form(&other))
                == (canonicalize(&b) == canonicalize(&other)),
            "key disagrees with explicit form"
        );
    }
    Ok(())
}

fn main() {
    let checks: [Criterion; 7] = [
        ("exact values from the solver", exact_values),
        ("builders stay within their upper bounds", upper_bounds),
        ("best responses certify lower bounds", lower_bounds),
        ("exploit beats greedy-blue on (M6, P4)", exploit),
        ("cycle builder and shortening arithmetic", cycle),
        ("partial St. Ives transitions and mock run", st_ives),
        ("structure oracles and canonical keys", structure_oracles),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {name} ({secs:.1}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({secs:.1}s): {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
