//! Command bodies. Each returns a JSON report and a status; `main` prints the
//! report and maps the status to an exit code.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::Path;

use ordered_ramsey::builders::*;
use ordered_ramsey::family::format_raw;
use ordered_ramsey::solver::{best_response, solve};
use ordered_ramsey::{play_game, replay, BlueTarget, GameError, OrderedGraph, Outcome};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::registry::{make_builder, make_painter, parse_blue, parse_red, resolve_targets};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A bound or certification check failed.
    Violation,
    Capped,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Capped => 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub status: Status,
}

pub const DEFAULT_SOLVER_CAP: usize = 30;

pub fn solve_cmd(
    red: &str,
    blue: &str,
    cap: usize,
    emit_policy: Option<&Path>,
) -> Result<Report, CliError> {
    let g = parse_red(red)?;
    let blue = parse_blue(blue)?;
    let mut r = solve(&g, blue, cap)?;
    let status = if r.value.is_some() {
        Status::Ok
    } else {
        Status::Capped
    };
    let json = json!({
        "v": 1,
        "command": "solve",
        "red": format_raw(&g),
        "blue": blue.to_string(),
        "cap": r.cap,
        "value": r.value,
        "root_move": r.root_move.map(|m| m.to_string()),
        "stats": {
            "states": r.stats.states,
            "hits": r.stats.hits,
            "expanded": r.stats.expanded,
        },
    });
    if let Some(path) = emit_policy {
        let doc = json!({
            "v": 1,
            "red": format_raw(&g),
            "blue": blue.to_string(),
            "value": r.value,
            "policy": r.policy(),
        });
        fs::write(path, serde_json::to_string_pretty(&doc).unwrap())?;
    }
    Ok(Report { json, status })
}

#[derive(Debug, Clone, Default)]
pub struct PlayArgs<'a> {
    pub red: Option<&'a str>,
    pub blue: Option<&'a str>,
    pub builder: &'a str,
    pub painter: &'a str,
    /// Game length cap; defaults to the builder's bound plus one.
    pub cap: Option<usize>,
    pub seed: u64,
    pub record: Option<&'a Path>,
}

pub fn play_cmd(args: &PlayArgs) -> Result<Report, CliError> {
    let (_, g, blue) = resolve_targets(args.red, args.blue, Some(args.builder))?;
    let solver_cap = args.cap.unwrap_or(DEFAULT_SOLVER_CAP);
    let mut builder = make_builder(args.builder, &g, blue, solver_cap)?;
    let mut painter = make_painter(args.painter, &g, blue, args.seed, solver_cap)?;
    let bound = builder.bound();
    let cap = args.cap.or(bound.map(|b| b as usize + 1)).unwrap_or(10_000);
    let mut report = json!({
        "v": 1,
        "command": "play",
        "builder": builder.name(),
        "painter": painter.name(),
        "bound": bound,
    });
    let (t, status) = match play_game(builder.as_mut(), painter.as_mut(), &g, blue, cap) {
        Ok(t) => {
            replay(&t)?;
            let within = bound.is_none_or(|b| t.moves.len() as u64 <= b);
            let status = if !within {
                Status::Violation
            } else if t.result == Outcome::Capped {
                Status::Capped
            } else {
                Status::Ok
            };
            report["within_bound"] = json!(within);
            (t, status)
        }
        Err(GameError::BuilderFault {
            reason, transcript, ..
        }) => {
            report["error"] = json!(reason);
            (*transcript, Status::Violation)
        }
        Err(GameError::IllegalMove {
            source, transcript, ..
        }) => {
            report["error"] = json!(source.to_string());
            (*transcript, Status::Violation)
        }
        Err(e) => return Err(e.into()),
    };
    report["moves"] = json!(t.moves.len());
    report["result"] = json!(t.result);
    report["transcript"] = t.to_json();
    if let Some(dir) = args.record {
        fs::create_dir_all(dir)?;
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(dir.join("transcripts.jsonl"))?;
        writeln!(f, "{}", t.to_json_line())?;
    }
    Ok(Report {
        json: report,
        status,
    })
}

pub fn best_response_cmd(
    red: &str,
    blue: &str,
    painter: &str,
    cap: usize,
    seed: u64,
) -> Result<Report, CliError> {
    let g = parse_red(red)?;
    let blue = parse_blue(blue)?;
    let mut p = make_painter(painter, &g, blue, seed, cap)?;
    let value = best_response(p.as_mut(), &g, blue, cap)?;
    Ok(Report {
        json: json!({
            "v": 1,
            "command": "best-response",
            "red": format_raw(&g),
            "blue": blue.to_string(),
            "painter": p.name(),
            "cap": cap,
            "value": value,
        }),
        status: if value.is_some() {
            Status::Ok
        } else {
            Status::Capped
        },
    })
}

fn check(name: String, pass: bool, detail: String) -> Value {
    json!({ "name": name, "pass": pass, "detail": detail })
}

fn checks_report(command: &str, checks: Vec<Value>, extra: Value) -> Report {
    let passed = checks.iter().all(|c| c["pass"] == json!(true));
    let mut json = json!({ "v": 1, "command": command, "passed": passed, "checks": checks });
    if let Value::Object(m) = extra {
        json.as_object_mut().unwrap().extend(m);
    }
    Report {
        json,
        status: if passed {
            Status::Ok
        } else {
            Status::Violation
        },
    }
}

/// One bound-compliance game.
fn compliance(builder: &str, red: &str, blue: BlueTarget, painter: &str, seed: u64) -> Value {
    let name = format!("{builder} vs {painter} ({red}, {blue})");
    let blue_s = blue.to_string();
    let args = PlayArgs {
        red: Some(red),
        blue: Some(&blue_s),
        builder,
        painter,
        seed,
        ..PlayArgs::default()
    };
    match play_cmd(&args) {
        Ok(r) => {
            let detail = format!(
                "{} in {} moves, bound {}",
                r.json["result"], r.json["moves"], r.json["bound"]
            );
            check(name, r.status == Status::Ok, detail)
        }
        Err(e) => check(name, false, e.to_string()),
    }
}

/// Builder bound compliance against the painter suite, then best-response
/// lower-bound certificates. `seeds` random painters per game.
pub fn invariants_cmd(seed: u64, seeds: u64, full: bool) -> Result<Report, CliError> {
    let mut games: Vec<(String, String, BlueTarget)> = Vec::new();
    let path = |n| BlueTarget::Path { n };
    for n in 2..=8 {
        games.push((format!("p3:n={n}"), "P:3".into(), path(n)));
        games.push((format!("x:n={n}"), "X".into(), path(n)));
    }
    for k in 1..=3 {
        for n in 2..=5 {
            games.push((format!("k1k:k={k},n={n}"), format!("Claw:{k}"), path(n)));
        }
    }
    for k in 2..=3 {
        for n in 4..=8 {
            games.push((format!("mk:k={k},n={n}"), format!("M:{k}"), path(n)));
        }
    }
    games.push(("left-degree:n=5".into(), "K:3".into(), path(5)));
    games.push(("left-degree:n=6".into(), "Kp:1,2".into(), path(6)));
    games.push((
        "tripartite:a=1,b=1,c=1,d=2,n=12".into(),
        "Kp:1,1,1".into(),
        path(12),
    ));
    games.push(("cycle:n=20".into(), "X".into(), BlueTarget::Cycle { n: 20 }));

    let mut checks = Vec::new();
    for (builder, red, blue) in &games {
        let mut painters = vec![
            "all-red".to_string(),
            "all-blue".into(),
            "greedy-red".into(),
            "greedy-blue".into(),
        ];
        painters.extend((seed..seed + seeds).map(|s| format!("random:seed={s}")));
        for p in &painters {
            checks.push(compliance(builder, red, *blue, p, seed));
        }
    }

    let mut certs: Vec<(&str, &str, usize, usize)> = Vec::new();
    let p3_max = if full { 5 } else { 4 };
    for n in 3..=p3_max {
        certs.push(("greedy-red", "P:3", n, 2 * n - 2));
    }
    for n in 4..=5 {
        certs.push(("greedy-blue", "M:2", n, n));
    }
    for n in 2..=4 {
        certs.push(("greedy-red", "Kp:1,2", n, 2 * (n - 1)));
    }
    for n in 3..=4 {
        certs.push(("greedy-red", "X", n, (3 * (n - 1)).div_ceil(2)));
    }
    for (painter, red, n, want) in certs {
        let name = format!("best response to {painter} on ({red}, P{n}) >= {want}");
        let r = best_response_cmd(red, &format!("path:{n}"), painter, want + 4, seed);
        checks.push(match r {
            Ok(r) => {
                let v = r.json["value"].as_u64();
                let pass = v.is_some_and(|v| v as usize >= want);
                check(name, pass, format!("value {:?}", v))
            }
            Err(e) => check(name, false, e.to_string()),
        });
    }
    Ok(checks_report("invariants", checks, json!({})))
}

fn row(
    family: &str,
    red: &OrderedGraph,
    n: usize,
    lower: u64,
    upper: u64,
    exact_ok: bool,
) -> Result<Value, CliError> {
    let mut exact = None;
    if exact_ok {
        exact = solve(red, BlueTarget::Path { n }, upper as usize)?.value;
    }
    let pass = lower <= upper && exact.is_none_or(|v| lower <= v as u64 && v as u64 <= upper);
    Ok(json!({
        "family": family,
        "red": format_raw(red),
        "blue": format!("path:{n}"),
        "lower": lower,
        "upper": upper,
        "exact": exact,
        "pass": pass,
    }))
}

/// Known bounds for each family against `P_n`, `2 ≤ n ≤ max_n`, with exact
/// solver values where the search is small.
pub fn bounds_table_cmd(max_n: usize) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let fam = |s: &str| parse_red(s).expect("built-in family");
    let edges_lower = |g: &OrderedGraph, n: usize| (g.edge_count().max(n - 1)) as u64;
    for n in 2..=max_n {
        for spec in ["K:3", "Kp:1,2"] {
            let g = fam(spec);
            rows.push(row(
                "left-degree",
                &g,
                n,
                edges_lower(&g, n),
                left_degree_bound(&g, n),
                false,
            )?);
        }
        let t = fam("Kp:1,1,1");
        let parts = Parts { a: 1, b: 1, c: 1 };
        rows.push(row(
            "tripartite",
            &t,
            n,
            edges_lower(&t, n),
            tripartite_bound(&t, parts, 2, n),
            false,
        )?);
        for k in 2..=3 {
            if n >= 4 {
                let g = fam(&format!("M:{k}"));
                let lower = if n >= 3 * k - 3 {
                    (n + 2 * k - 4) as u64
                } else {
                    edges_lower(&g, n)
                };
                rows.push(row(
                    "serial matching",
                    &g,
                    n,
                    lower,
                    mk_bound(k, n),
                    k == 2 && n <= 5,
                )?);
            }
        }
        rows.push(row(
            "P3",
            &fam("P:3"),
            n,
            2 * n as u64 - 2,
            p3_bound(n),
            n <= 4,
        )?);
        let x_lower = (3 * n - 3) as u64 / 2 + 1;
        rows.push(row("X", &fam("X"), n, x_lower, x_bound(n), n <= 4)?);
        for k in 1..=3 {
            let v = k1k_bound(k, n);
            let small = k == 1 || (k == 2 && n <= 4) || (k == 3 && n <= 2);
            rows.push(row("K1k", &fam(&format!("Claw:{k}")), n, v, v, small)?);
        }
    }
    let passed = rows.iter().all(|r| r["pass"] == json!(true));
    Ok(Report {
        json: json!({ "v": 1, "command": "bounds-table", "passed": passed, "rows": rows }),
        status: if passed {
            Status::Ok
        } else {
            Status::Violation
        },
    })
}
