//! Painter strategies.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::{ColoredBoard, VertexId};
use crate::color::Color;
use crate::family::build_family;
use crate::game::{Avoids, BlueTarget, PainterStrategy};
use crate::graph::{find_embedding, OrderedGraph};

/// Whether drawing `{u, v}` red on `board` completes a red copy of `g`
/// (isolated vertices of `g` ignored).
pub fn completes_red(board: &ColoredBoard, u: VertexId, v: VertexId, g: &OrderedGraph) -> bool {
    let next = board.with_edge(u, v, Color::Red);
    let (sub, _) = next.color_subgraph(Color::Red);
    find_embedding(&sub, g, None).is_some()
}

/// Whether drawing `{u, v}` blue on `board` completes the blue target.
pub fn completes_blue(board: &ColoredBoard, u: VertexId, v: VertexId, target: BlueTarget) -> bool {
    let (u, v) = if board.position(u) < board.position(v) {
        (u, v)
    } else {
        (v, u)
    };
    match target {
        BlueTarget::Path { n } => {
            let ending = board.path_lengths_ending_at(Color::Blue);
            let starting = board.path_lengths_starting_at(Color::Blue);
            ending[u.0 as usize] + starting[v.0 as usize] >= n
        }
        BlueTarget::Cycle { n } => {
            board
                .with_edge(u, v, Color::Blue)
                .cycle_through_edge(u, v, n, Color::Blue)
        }
    }
}

/// Red unless red would complete `g`.
#[derive(Debug, Clone)]
pub struct GreedyRedUnless {
    g: OrderedGraph,
}

pub fn greedy_red_unless(g: &OrderedGraph) -> GreedyRedUnless {
    assert!(
        g.edge_count() >= 1,
        "greedy_red_unless needs a graph with an edge"
    );
    GreedyRedUnless {
        g: g.strip_isolated(),
    }
}

impl PainterStrategy for GreedyRedUnless {
    fn name(&self) -> String {
        format!("greedy-red:{}", self.g)
    }

    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color {
        if completes_red(board, u, v, &self.g) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    fn avoids(&self) -> Option<Avoids> {
        Some(Avoids::Red(self.g.clone()))
    }

    fn is_positional(&self) -> bool {
        true
    }
}

/// Blue unless blue would complete the target.
#[derive(Debug, Clone)]
pub struct GreedyBlueUnless {
    target: BlueTarget,
}

pub fn greedy_blue_unless(n: usize) -> GreedyBlueUnless {
    assert!(n >= 2, "greedy_blue_unless needs n >= 2");
    GreedyBlueUnless {
        target: BlueTarget::Path { n },
    }
}

pub fn greedy_blue_unless_target(target: BlueTarget) -> GreedyBlueUnless {
    GreedyBlueUnless { target }
}

impl PainterStrategy for GreedyBlueUnless {
    fn name(&self) -> String {
        format!("greedy-blue:{}", self.target)
    }

    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color {
        if completes_blue(board, u, v, self.target) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    fn avoids(&self) -> Option<Avoids> {
        Some(Avoids::Blue(self.target))
    }

    fn is_positional(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Constant(pub Color);

pub fn all_red() -> Constant {
    Constant(Color::Red)
}

pub fn all_blue() -> Constant {
    Constant(Color::Blue)
}

impl PainterStrategy for Constant {
    fn name(&self) -> String {
        format!("all-{}", self.0)
    }

    fn color(&mut self, _: &ColoredBoard, _: VertexId, _: VertexId) -> Color {
        self.0
    }

    fn is_positional(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone)]
pub struct RandomPainter {
    seed: u64,
    rng: ChaCha8Rng,
}

pub fn random_painter(seed: u64) -> RandomPainter {
    RandomPainter {
        seed,
        rng: ChaCha8Rng::seed_from_u64(seed),
    }
}

impl PainterStrategy for RandomPainter {
    fn name(&self) -> String {
        format!("random:seed={}", self.seed)
    }

    fn color(&mut self, _: &ColoredBoard, _: VertexId, _: VertexId) -> Color {
        if self.rng.gen_bool(0.5) {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

/// Plays a fixed color sequence, then `fallback` forever.
#[derive(Debug, Clone)]
pub struct SequencePainter {
    colors: Vec<Color>,
    next: usize,
    fallback: Color,
}

pub fn sequence_painter(
    colors: impl IntoIterator<Item = Color>,
    fallback: Color,
) -> SequencePainter {
    SequencePainter {
        colors: colors.into_iter().collect(),
        next: 0,
        fallback,
    }
}

impl SequencePainter {
    /// Parses letters such as `"RBBR"`; whitespace is ignored.
    pub fn from_letters(s: &str, fallback: Color) -> Option<Self> {
        let colors = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Color::from_letter(&c.to_string()))
            .collect::<Option<Vec<_>>>()?;
        Some(sequence_painter(colors, fallback))
    }
}

impl PainterStrategy for SequencePainter {
    fn name(&self) -> String {
        "sequence".into()
    }

    fn color(&mut self, _: &ColoredBoard, _: VertexId, _: VertexId) -> Color {
        let c = self.colors.get(self.next).copied().unwrap_or(self.fallback);
        self.next += 1;
        c
    }
}

/// Adapter for closures.
pub struct FnPainter<F> {
    name: String,
    f: F,
}

pub fn fn_painter<F>(name: &str, f: F) -> FnPainter<F>
where
    F: FnMut(&ColoredBoard, VertexId, VertexId) -> Color + Send,
{
    FnPainter {
        name: name.into(),
        f,
    }
}

impl<F> PainterStrategy for FnPainter<F>
where
    F: FnMut(&ColoredBoard, VertexId, VertexId) -> Color + Send,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color {
        (self.f)(board, u, v)
    }
}

/// Painter selection as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PainterSpec {
    GreedyRed(String),
    GreedyBlue(usize),
    AllRed,
    AllBlue,
    Random(u64),
    Optimal,
}

impl FromStr for PainterSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let keyed = |arg: Option<&str>, key: &str| -> Result<String, String> {
            let a = arg.ok_or_else(|| format!("{head} needs an argument"))?;
            Ok(a.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .unwrap_or(a)
                .to_string())
        };
        match head {
            "greedy-red" => {
                let g = arg.ok_or("greedy-red needs a graph spec")?;
                let graph = build_family(g).map_err(|e| e.to_string())?;
                if graph.edge_count() == 0 {
                    return Err("greedy-red needs a graph with an edge".into());
                }
                Ok(PainterSpec::GreedyRed(g.to_string()))
            }
            "greedy-blue" => {
                let n: usize = keyed(arg, "n")?
                    .parse()
                    .map_err(|_| format!("bad n in {s:?}"))?;
                if n < 2 {
                    return Err("greedy-blue needs n >= 2".into());
                }
                Ok(PainterSpec::GreedyBlue(n))
            }
            "all-red" => Ok(PainterSpec::AllRed),
            "all-blue" => Ok(PainterSpec::AllBlue),
            "random" => Ok(PainterSpec::Random(
                keyed(arg, "seed")?
                    .parse()
                    .map_err(|_| format!("bad seed in {s:?}"))?,
            )),
            "optimal" => Ok(PainterSpec::Optimal),
            _ => Err(format!("unknown painter {s:?}")),
        }
    }
}

impl fmt::Display for PainterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PainterSpec::GreedyRed(g) => write!(f, "greedy-red:{g}"),
            PainterSpec::GreedyBlue(n) => write!(f, "greedy-blue:n={n}"),
            PainterSpec::AllRed => f.write_str("all-red"),
            PainterSpec::AllBlue => f.write_str("all-blue"),
            PainterSpec::Random(s) => write!(f, "random:seed={s}"),
            PainterSpec::Optimal => f.write_str("optimal"),
        }
    }
}

impl PainterSpec {
    /// Builds every painter except `optimal`, which needs a solved game.
    pub fn build(&self) -> Option<Box<dyn PainterStrategy>> {
        Some(match self {
            PainterSpec::GreedyRed(g) => Box::new(greedy_red_unless(&build_family(g).ok()?)),
            PainterSpec::GreedyBlue(n) => Box::new(greedy_blue_unless(*n)),
            PainterSpec::AllRed => Box::new(all_red()),
            PainterSpec::AllBlue => Box::new(all_blue()),
            PainterSpec::Random(s) => Box::new(random_painter(*s)),
            PainterSpec::Optimal => return None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Endpoint::Fresh;
    use crate::board::Move;
    use crate::family::{clique, path};

    fn fresh_pair() -> (ColoredBoard, VertexId, VertexId) {
        ColoredBoard::new()
            .preview(&Move::new(Fresh(0), Fresh(0)))
            .unwrap()
    }

    #[test]
    fn first_queries() {
        let (b, u, v) = fresh_pair();
        assert_eq!(greedy_red_unless(&path(3)).color(&b, u, v), Color::Red);
        assert_eq!(greedy_blue_unless(4).color(&b, u, v), Color::Blue);
        assert_eq!(greedy_red_unless(&clique(2)).color(&b, u, v), Color::Blue);
    }

    #[test]
    fn greedy_blue_reds_the_closing_link() {
        let mut painter = greedy_blue_unless(4);
        let mut board = ColoredBoard::new();
        let mut colors = Vec::new();
        let (_, mut last) = board
            .apply_move(&Move::new(Fresh(0), Fresh(0)), Color::Blue)
            .unwrap();
        colors.push(Color::Blue);
        for _ in 0..2 {
            let mv = Move::new(
                crate::board::Endpoint::Existing(last),
                Fresh(board.vertex_count()),
            );
            let (preview, u, v) = board.preview(&mv).unwrap();
            let c = painter.color(&preview, u, v);
            board.apply_move(&mv, c).unwrap();
            colors.push(c);
            last = v;
        }
        assert_eq!(colors, vec![Color::Blue, Color::Blue, Color::Red]);
    }

    #[test]
    fn specs_round_trip() {
        for s in [
            "greedy-red:P:3",
            "greedy-blue:n=5",
            "all-red",
            "all-blue",
            "random:seed=7",
            "optimal",
        ] {
            assert_eq!(s.parse::<PainterSpec>().unwrap().to_string(), s);
        }
        assert_eq!(
            "greedy-blue:5".parse::<PainterSpec>().unwrap(),
            PainterSpec::GreedyBlue(5)
        );
        assert!("greedy-blue:n=1".parse::<PainterSpec>().is_err());
        assert!("sneaky".parse::<PainterSpec>().is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let (b, u, v) = fresh_pair();
        let mut a = random_painter(7);
        let mut c = random_painter(7);
        let xs: Vec<_> = (0..32).map(|_| a.color(&b, u, v)).collect();
        let ys: Vec<_> = (0..32).map(|_| c.color(&b, u, v)).collect();
        assert_eq!(xs, ys);
    }
}
