//! Builders and painters addressable by name on the command line and in the
//! game service.
//!
//! Builders: `p3:n=N`, `x:n=N`, `k1k:k=K,n=N`, `mk:k=K,n=N`,
//! `exploit:n=N,k=K`, `left-degree:n=N`, `tripartite:a=A,b=B,c=C,d=D,n=N`,
//! `cycle:n=N`, `st-ives:k=K,n=N`, `optimal`.
//!
//! Painters: `all-red`, `all-blue`, `greedy-red[:G]`, `greedy-blue[:n=N]`,
//! `random[:seed=S]`, `optimal`.

use std::collections::BTreeMap;

use ordered_ramsey::builders::*;
use ordered_ramsey::painters::*;
use ordered_ramsey::solver::{extract_policies, optimal_painter, solve};
use ordered_ramsey::{build_family, BlueTarget, BuilderStrategy, OrderedGraph, PainterStrategy};

use crate::error::CliError;

/// `name[:rest]`.
pub fn split_name(spec: &str) -> (&str, &str) {
    spec.split_once(':').unwrap_or((spec, ""))
}

#[derive(Debug, Clone, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse(s: &str) -> Result<Params, CliError> {
        let mut map = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("expected key=value, got {part:?}")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params(map))
    }

    pub fn get(&self, key: &str) -> Result<Option<usize>, CliError> {
        self.0
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::Parse(format!("{key}={v} is not a count")))
            })
            .transpose()
    }

    pub fn need(&self, key: &str) -> Result<usize, CliError> {
        self.get(key)?
            .ok_or_else(|| CliError::Parse(format!("missing parameter {key}")))
    }

    pub fn u64(&self, key: &str) -> Result<Option<u64>, CliError> {
        Ok(self.get(key)?.map(|v| v as u64))
    }
}

pub fn parse_red(spec: &str) -> Result<OrderedGraph, CliError> {
    let g = build_family(spec)?;
    if g.edge_count() == 0 {
        return Err(CliError::Infeasible(format!(
            "red target {spec:?} is edgeless"
        )));
    }
    Ok(g)
}

pub fn parse_blue(spec: &str) -> Result<BlueTarget, CliError> {
    spec.parse().map_err(CliError::Parse)
}

/// Red and blue targets a named builder plays for, when it implies them.
pub fn builder_targets(spec: &str) -> Result<(Option<String>, Option<BlueTarget>), CliError> {
    let (name, rest) = split_name(spec);
    let p = Params::parse(rest)?;
    let path = |n: Option<usize>| n.map(|n| BlueTarget::Path { n });
    Ok(match name {
        "p3" => (Some("P:3".into()), path(p.get("n")?)),
        "x" => (Some("X".into()), path(p.get("n")?)),
        "k1k" => (p.get("k")?.map(|k| format!("Claw:{k}")), path(p.get("n")?)),
        "mk" | "exploit" => (p.get("k")?.map(|k| format!("M:{k}")), path(p.get("n")?)),
        "st-ives" => (p.get("k")?.map(|k| format!("Sp:{k}")), path(p.get("n")?)),
        "cycle" => (None, p.get("n")?.map(|n| BlueTarget::Cycle { n })),
        "left-degree" | "tripartite" => (None, path(p.get("n")?)),
        "optimal" => (None, None),
        _ => return Err(CliError::Parse(format!("unknown builder {name:?}"))),
    })
}

/// Resolves the game's targets from explicit flags, falling back to the
/// builder's own.
pub fn resolve_targets(
    red: Option<&str>,
    blue: Option<&str>,
    builder: Option<&str>,
) -> Result<(String, OrderedGraph, BlueTarget), CliError> {
    let (dred, dblue) = match builder {
        Some(b) => builder_targets(b)?,
        None => (None, None),
    };
    let red_spec = red
        .map(str::to_string)
        .or(dred)
        .ok_or_else(|| CliError::Parse("--red is required".into()))?;
    let blue = match blue {
        Some(b) => parse_blue(b)?,
        None => dblue.ok_or_else(|| CliError::Parse("--blue is required".into()))?,
    };
    let g = parse_red(&red_spec)?;
    Ok((red_spec, g, blue))
}

pub fn make_builder(
    spec: &str,
    red: &OrderedGraph,
    blue: BlueTarget,
    cap: usize,
) -> Result<Box<dyn BuilderStrategy>, CliError> {
    let (name, rest) = split_name(spec);
    let p = Params::parse(rest)?;
    let n = p.get("n")?.unwrap_or(blue.n());
    let b: Box<dyn BuilderStrategy> = match name {
        "p3" => Box::new(p3_builder(n)?),
        "x" => Box::new(x_builder(n)?),
        "k1k" => Box::new(k1k_builder(p.need("k")?, n)?),
        "mk" => Box::new(mk_builder(p.need("k")?, n)?),
        "exploit" => Box::new(exploit_builder(n, p.need("k")?)?),
        "left-degree" => Box::new(left_degree_builder(red, n)?),
        "tripartite" => {
            let parts = Parts {
                a: p.need("a")?,
                b: p.need("b")?,
                c: p.need("c")?,
            };
            Box::new(tripartite_builder(red, parts, p.need("d")?, n)?)
        }
        "cycle" => Box::new(cycle_builder(red, n)?),
        "st-ives" => Box::new(partial_st_ives_builder(p.need("k")?, n)?),
        "optimal" => {
            let r = solve(red, blue, cap)?;
            if r.value.is_none() {
                return Err(CliError::Cap(format!("game value exceeds {cap}")));
            }
            Box::new(extract_policies(r).0)
        }
        _ => return Err(CliError::Parse(format!("unknown builder {name:?}"))),
    };
    Ok(b)
}

pub fn make_painter(
    spec: &str,
    red: &OrderedGraph,
    blue: BlueTarget,
    seed: u64,
    cap: usize,
) -> Result<Box<dyn PainterStrategy>, CliError> {
    let (name, rest) = split_name(spec);
    let p: Box<dyn PainterStrategy> = match name {
        "all-red" => Box::new(all_red()),
        "all-blue" => Box::new(all_blue()),
        "greedy-red" if rest.is_empty() => Box::new(greedy_red_unless(red)),
        "greedy-red" => Box::new(greedy_red_unless(&parse_red(rest)?)),
        "greedy-blue" => match Params::parse(rest)?.get("n")? {
            Some(n) => Box::new(greedy_blue_unless_target(BlueTarget::Path { n })),
            None => Box::new(greedy_blue_unless_target(blue)),
        },
        "random" => Box::new(random_painter(
            Params::parse(rest)?.u64("seed")?.unwrap_or(seed),
        )),
        "optimal" => Box::new(optimal_painter(red, blue, cap)?),
        _ => return Err(CliError::Parse(format!("unknown painter {name:?}"))),
    };
    Ok(p)
}
