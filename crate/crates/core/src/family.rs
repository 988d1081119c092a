//! Textual descriptors for the named ordered-graph families.
//!
//! Grammar: `P:<n>`, `C:<n>`, `K:<n>`, `Kp:<n1>,<n2>,...`, `M:<k>`, `N:<k>`,
//! `S:<k>`, `Sp:<k>`, `X`, `Claw:<k>`, `ClawL:<k>` and `raw:<n>:<i>-<j>,...`.
//! Graphs always format back to the `raw:` form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::OrderedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Multipartite(Vec<usize>),
    SerialMatching(usize),
    NestedMatching(usize),
    StIves(usize),
    PartialStIves(usize),
    Crossing,
    Claw(usize),
    ClawLeft(usize),
    Raw {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

fn parse_err(spec: &str, reason: impl Into<String>) -> GraphError {
    GraphError::Parse {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn param_err(family: &str, reason: impl Into<String>) -> GraphError {
    GraphError::Parameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn parse_count(spec: &str, s: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| parse_err(spec, format!("expected a count, found {s:?}")))
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let spec = spec.trim();
        if spec == "X" {
            return Ok(GraphSpec::Crossing);
        }
        let (head, rest) = spec
            .split_once(':')
            .ok_or_else(|| parse_err(spec, "missing ':'"))?;
        let parsed = match head {
            "P" => GraphSpec::Path(parse_count(spec, rest)?),
            "C" => GraphSpec::Cycle(parse_count(spec, rest)?),
            "K" => GraphSpec::Clique(parse_count(spec, rest)?),
            "Kp" => GraphSpec::Multipartite(
                rest.split(',')
                    .map(|p| parse_count(spec, p))
                    .collect::<Result<_, _>>()?,
            ),
            "M" => GraphSpec::SerialMatching(parse_count(spec, rest)?),
            "N" => GraphSpec::NestedMatching(parse_count(spec, rest)?),
            "S" => GraphSpec::StIves(parse_count(spec, rest)?),
            "Sp" => GraphSpec::PartialStIves(parse_count(spec, rest)?),
            "Claw" => GraphSpec::Claw(parse_count(spec, rest)?),
            "ClawL" => GraphSpec::ClawLeft(parse_count(spec, rest)?),
            "raw" => {
                let (n, list) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(spec, "raw form is raw:<n>:<edges>"))?;
                let n = parse_count(spec, n)?;
                let mut edges = Vec::new();
                for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (a, b) = item
                        .split_once('-')
                        .ok_or_else(|| parse_err(spec, format!("bad edge {item:?}")))?;
                    edges.push((parse_count(spec, a)?, parse_count(spec, b)?));
                }
                GraphSpec::Raw { n, edges }
            }
            other => return Err(parse_err(spec, format!("unknown family {other:?}"))),
        };
        Ok(parsed)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "P:{n}"),
            GraphSpec::Cycle(n) => write!(f, "C:{n}"),
            GraphSpec::Clique(n) => write!(f, "K:{n}"),
            GraphSpec::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "Kp:{}", parts.join(","))
            }
            GraphSpec::SerialMatching(k) => write!(f, "M:{k}"),
            GraphSpec::NestedMatching(k) => write!(f, "N:{k}"),
            GraphSpec::StIves(k) => write!(f, "S:{k}"),
            GraphSpec::PartialStIves(k) => write!(f, "Sp:{k}"),
            GraphSpec::Crossing => f.write_str("X"),
            GraphSpec::Claw(k) => write!(f, "Claw:{k}"),
            GraphSpec::ClawLeft(k) => write!(f, "ClawL:{k}"),
            GraphSpec::Raw { n, edges } => f.write_str(&raw_string(*n, edges.iter().copied())),
        }
    }
}

fn raw_string(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> String {
    let list: Vec<String> = edges.map(|(i, j)| format!("{i}-{j}")).collect();
    format!("raw:{n}:{}", list.join(","))
}

pub fn format_raw(g: &OrderedGraph) -> String {
    raw_string(g.n(), g.edges())
}

pub fn path(n: usize) -> OrderedGraph {
    OrderedGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn cycle(n: usize) -> OrderedGraph {
    OrderedGraph::new(
        n,
        (1..n)
            .map(|i| (i - 1, i))
            .chain(std::iter::once((0, n - 1))),
    )
    .expect("cycle edges are valid")
}

pub fn clique(n: usize) -> OrderedGraph {
    OrderedGraph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
        .expect("clique edges are valid")
}

pub fn multipartite(parts: &[usize]) -> OrderedGraph {
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j]);
    OrderedGraph::new(n, edges.collect::<Vec<_>>()).expect("multipartite edges are valid")
}

pub fn serial_matching(k: usize) -> OrderedGraph {
    OrderedGraph::new(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are valid")
}

pub fn nested_matching(k: usize) -> OrderedGraph {
    OrderedGraph::new(2 * k, (0..k).map(|i| (i, 2 * k - 1 - i))).expect("matching edges are valid")
}

fn st_ives_edges(k: usize, offset: usize, out: &mut Vec<(usize, usize)>) -> usize {
    if k == 0 {
        out.push((offset, offset + 1));
        return 2;
    }
    let left = st_ives_edges(k - 1, offset + 1, out);
    let right = st_ives_edges(k - 1, offset + 1 + left, out);
    let size = left + right + 2;
    out.push((offset, offset + size - 1));
    size
}

pub fn st_ives(k: usize) -> OrderedGraph {
    let mut edges = Vec::new();
    let n = st_ives_edges(k, 0, &mut edges);
    OrderedGraph::new(n, edges).expect("St. Ives edges are valid")
}

/// Outer nested k-matching with k consecutive nested k-matchings inside it.
pub fn partial_st_ives(k: usize) -> OrderedGraph {
    let n = 2 * k * (k + 1);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, n - 1 - i)).collect();
    for copy in 0..k {
        let base = k + copy * 2 * k;
        edges.extend((0..k).map(|i| (base + i, base + 2 * k - 1 - i)));
    }
    OrderedGraph::new(n, edges).expect("partial St. Ives edges are valid")
}

pub fn crossing() -> OrderedGraph {
    OrderedGraph::new(4, [(0, 2), (1, 3)]).expect("X is valid")
}

impl GraphSpec {
    pub fn build(&self) -> Result<OrderedGraph, GraphError> {
        let need = |family: &str, value: usize, min: usize| {
            if value < min {
                Err(param_err(
                    family,
                    format!("needs parameter >= {min}, got {value}"),
                ))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            GraphSpec::Path(n) => {
                need("P", *n, 1)?;
                path(*n)
            }
            GraphSpec::Cycle(n) => {
                need("C", *n, 3)?;
                cycle(*n)
            }
            GraphSpec::Clique(n) => {
                need("K", *n, 1)?;
                clique(*n)
            }
            GraphSpec::Multipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(param_err("Kp", "every part needs at least one vertex"));
                }
                multipartite(parts)
            }
            GraphSpec::SerialMatching(k) => {
                need("M", *k, 1)?;
                serial_matching(*k)
            }
            GraphSpec::NestedMatching(k) => {
                need("N", *k, 1)?;
                nested_matching(*k)
            }
            GraphSpec::StIves(k) => {
                if *k > 12 {
                    return Err(param_err("S", "parameter too large"));
                }
                st_ives(*k)
            }
            GraphSpec::PartialStIves(k) => {
                need("Sp", *k, 1)?;
                partial_st_ives(*k)
            }
            GraphSpec::Crossing => crossing(),
            GraphSpec::Claw(k) => {
                need("Claw", *k, 1)?;
                multipartite(&[1, *k])
            }
            GraphSpec::ClawLeft(k) => {
                need("ClawL", *k, 1)?;
                multipartite(&[*k, 1])
            }
            GraphSpec::Raw { n, edges } => OrderedGraph::new(*n, edges.iter().copied())?,
        })
    }
}

/// Parses and builds in one step.
pub fn build_family(spec: &str) -> Result<OrderedGraph, GraphError> {
    spec.parse::<GraphSpec>()?.build()
}
