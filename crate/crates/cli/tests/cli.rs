use std::process::Command;

use ordered_ramsey::{replay, Transcript};
use serde_json::Value;

fn orl(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orl"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn play_mk_against_greedy_blue() {
    let (code, v, _) = orl(&[
        "play",
        "--builder",
        "mk:k=2,n=4",
        "--painter",
        "greedy-blue:n=4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["v"], 1);
    assert_eq!(v["result"], "red");
    assert!(v["moves"].as_u64().unwrap() <= 4);
    let t = Transcript::from_json(&v["transcript"]).unwrap();
    replay(&t).unwrap();
}

#[test]
fn play_is_reproducible_and_records() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "play",
        "--builder",
        "p3:n=6",
        "--painter",
        "random",
        "--seed",
        "5",
        "--record",
        d,
    ];
    let (c1, a, _) = orl(&args);
    let (c2, b, _) = orl(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["transcript"], b["transcript"]);
    let lines = std::fs::read_to_string(dir.path().join("transcripts.jsonl")).unwrap();
    let lines: Vec<&str> = lines.lines().collect();
    assert_eq!(lines.len(), 2);
    for l in lines {
        replay(&Transcript::from_json_str(l).unwrap()).unwrap();
    }
}

#[test]
fn solve_values_and_policy_file() {
    let dir = tempfile::tempdir().unwrap();
    let policy = dir.path().join("policy.json");
    let (code, v, _) = orl(&[
        "solve",
        "--red",
        "M:2",
        "--blue",
        "path:4",
        "--cap",
        "6",
        "--emit-policy",
        policy.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 4);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&policy).unwrap()).unwrap();
    assert_eq!(doc["v"], 1);
    let entries = doc["policy"].as_array().unwrap();
    assert_eq!(entries[0]["key"], "00");
    assert_eq!(entries[0]["value"], 4);
    assert!(entries.iter().all(|e| e["move"].is_string()));
}

#[test]
fn exit_codes() {
    let (code, _, err) = orl(&["solve", "--red", "raw:0:", "--blue", "path:2"]);
    assert_eq!(code, 3);
    assert!(err.contains("edgeless"), "{err}");
    let (code, _, _) = orl(&["solve", "--red", "Q:3", "--blue", "path:2"]);
    assert_eq!(code, 2);
    let (code, _, _) = orl(&["solve", "--red", "P:3", "--blue", "line:2"]);
    assert_eq!(code, 2);
    let (code, v, _) = orl(&["solve", "--red", "P:3", "--blue", "path:4", "--cap", "4"]);
    assert_eq!((code, &v["value"]), (4, &Value::Null));
    let (code, _, _) = orl(&["play", "--builder", "mk:k=2,n=2", "--painter", "all-red"]);
    assert_eq!(code, 3);
    // a cap below the bound leaves the game undecided
    let (code, v, _) = orl(&[
        "play",
        "--builder",
        "p3:n=6",
        "--painter",
        "all-blue",
        "--cap",
        "2",
    ]);
    assert_eq!((code, &v["result"]), (4, &Value::from("cap")));
}

#[test]
fn best_response_certificate() {
    let (code, v, _) = orl(&[
        "best-response",
        "--red",
        "Kp:1,2",
        "--blue",
        "path:3",
        "--painter",
        "greedy-red",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 4);
    let (code, _, _) = orl(&[
        "best-response",
        "--red",
        "P:3",
        "--blue",
        "path:3",
        "--painter",
        "random",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn bounds_table_rows() {
    let (code, v, _) = orl(&["bounds-table", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let exact = |family: &str, red: &str, n: usize| {
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| {
                r["family"] == family
                    && r["red"] == red
                    && r["blue"] == format!("path:{n}").as_str()
            })
            .map(|r| r["exact"].clone())
            .unwrap()
    };
    assert_eq!(exact("serial matching", "raw:4:0-1,2-3", 4), 4);
    assert_eq!(exact("K1k", "raw:3:0-1,0-2", 3), 4);
    assert_eq!(exact("P3", "raw:3:0-1,1-2", 3), 4);
}

#[test]
fn invariants_harness_passes() {
    let (code, v, _) = orl(&["invariants", "--seeds", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 250);
}
