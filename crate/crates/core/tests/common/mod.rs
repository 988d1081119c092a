#![allow(dead_code)]

use ordered_ramsey::board::{ColoredBoard, Endpoint, Move, VertexId};
use ordered_ramsey::graph::{Host, OrderedGraph};
use ordered_ramsey::{BuilderStrategy, Color, StrategyError};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every legal move on `board`, fresh endpoints in every gap.
pub fn all_moves(board: &ColoredBoard) -> Vec<Move> {
    let v = board.vertex_count();
    let order = board.order();
    let mut out = Vec::new();
    for j in 0..v {
        for i in 0..j {
            if board.color(order[i], order[j]).is_none() {
                out.push(Move::existing(order[i], order[j]));
            }
        }
    }
    for p in 0..v {
        for g in 0..=v {
            let (l, r) = if g <= p {
                (Endpoint::Fresh(g), Endpoint::Existing(order[p]))
            } else {
                (Endpoint::Existing(order[p]), Endpoint::Fresh(g))
            };
            out.push(Move::new(l, r));
        }
    }
    for g in 0..=v {
        for h in g..=v {
            out.push(Move::new(Endpoint::Fresh(g), Endpoint::Fresh(h)));
        }
    }
    out
}

/// Uniformly random legal moves.
pub struct RandomBuilder(ChaCha8Rng);

impl RandomBuilder {
    pub fn new(seed: u64) -> Self {
        RandomBuilder(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl BuilderStrategy for RandomBuilder {
    fn name(&self) -> String {
        "random".into()
    }

    fn next_move(&mut self, board: &ColoredBoard) -> Result<Move, StrategyError> {
        Ok(*all_moves(board)
            .choose(&mut self.0)
            .expect("fresh pairs always exist"))
    }
}

pub fn graph_from_mask(n: usize, mask: u64) -> OrderedGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    OrderedGraph::new(n, edges).unwrap()
}

/// Ascending index subsets of `0..n` of the given size.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

pub fn brute_interval_chromatic(g: &OrderedGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // bit i of `cuts` cuts between i and i+1
    (0u32..1 << (n - 1))
        .filter(|cuts| g.edges().all(|(i, j)| (i..j).any(|c| cuts >> c & 1 == 1)))
        .map(|cuts| cuts.count_ones() as usize + 1)
        .min()
        .unwrap()
}

pub fn brute_longest<H: Host>(h: &H, color: Color) -> usize {
    let n = h.vertex_count();
    (1..=n)
        .rev()
        .find(|&k| {
            subsets(n, k)
                .iter()
                .any(|s| s.windows(2).all(|w| h.has_edge(w[0], w[1], Some(color))))
        })
        .unwrap_or(0)
}

pub fn brute_embeds(host: &OrderedGraph, pattern: &OrderedGraph) -> bool {
    subsets(host.n(), pattern.n())
        .iter()
        .any(|s| pattern.edges().all(|(i, j)| host.contains_edge(s[i], s[j])))
}

/// Board drawn from `(left, right, red)` choices; fresh vertices stop once
/// `max` would be exceeded.
pub fn board_from_steps(steps: &[(u16, u16, bool)], max: usize) -> ColoredBoard {
    let mut b = ColoredBoard::new();
    for &(x, y, red) in steps {
        let v = b.vertex_count();
        let color = if red { Color::Red } else { Color::Blue };
        let pick = |z: u16| z as usize % (2 * v + 1);
        let end = |z: usize| {
            if z < v {
                Endpoint::Existing(b.id_at(z))
            } else {
                Endpoint::Fresh(z - v)
            }
        };
        let (mut a, mut c) = (pick(x), pick(y));
        if v + 2 > max {
            a %= v.max(1);
            c %= v.max(1);
        }
        let mv = match (end(a), end(c)) {
            (Endpoint::Existing(p), Endpoint::Existing(q)) if p == q => continue,
            (Endpoint::Fresh(g), Endpoint::Fresh(h)) => {
                Move::new(Endpoint::Fresh(g.min(h)), Endpoint::Fresh(g.max(h)))
            }
            (l, r) => {
                let slot = |e: Endpoint| match e {
                    Endpoint::Existing(id) => 2 * b.position(id).unwrap() + 1,
                    Endpoint::Fresh(g) => 2 * g,
                };
                if slot(l) < slot(r) {
                    Move::new(l, r)
                } else {
                    Move::new(r, l)
                }
            }
        };
        if b.validate(&mv).is_ok() {
            b.apply_move(&mv, color).unwrap();
        }
    }
    b
}

/// Colored pairs among non-isolated vertices, by position among them.
pub fn explicit_form(b: &ColoredBoard) -> (usize, Vec<(usize, usize, Color)>) {
    let mut used: Vec<VertexId> = b.edges().iter().flat_map(|&(u, v, _)| [u, v]).collect();
    used.sort_by_key(|&v| b.position(v).unwrap());
    used.dedup();
    let idx = |v: VertexId| used.iter().position(|&w| w == v).unwrap();
    let mut pairs: Vec<_> = b
        .edges()
        .iter()
        .map(|&(u, v, c)| (idx(u), idx(v), c))
        .collect();
    pairs.sort_by_key(|&(i, j, _)| (i, j));
    (used.len(), pairs)
}

/// Same colored pairs replayed in another order, with an isolated vertex
/// previewed into `extra`.
pub fn shuffled_copy(b: &ColoredBoard, seed: u64, extra: usize) -> ColoredBoard {
    let (m, mut pairs) = explicit_form(b);
    let k = pairs.len().max(1);
    pairs.rotate_left(seed as usize % k);
    if seed & 1 == 1 {
        pairs.reverse();
    }
    let mut out = ColoredBoard::new();
    let mut ids: Vec<Option<VertexId>> = vec![None; m];
    for (i, j, c) in pairs {
        let gap =
            |ids: &[Option<VertexId>], p: usize| ids[..p].iter().filter(|x| x.is_some()).count();
        let end = |ids: &[Option<VertexId>], p: usize| {
            ids[p].map_or(Endpoint::Fresh(gap(ids, p)), Endpoint::Existing)
        };
        let (u, v) = out
            .apply_move(&Move::new(end(&ids, i), end(&ids, j)), c)
            .unwrap();
        ids[i] = Some(u);
        ids[j] = Some(v);
    }
    let v = out.vertex_count();
    let g = extra % (v + 1);
    out.preview(&Move::new(Endpoint::Fresh(g), Endpoint::Fresh(g)))
        .unwrap()
        .0
}

pub fn letters(parts: &[(&str, usize)]) -> ordered_ramsey::painters::SequencePainter {
    let s: String = parts.iter().map(|(l, r)| l.repeat(*r)).collect();
    ordered_ramsey::painters::SequencePainter::from_letters(&s, Color::Red).unwrap()
}

/// Plays the chain-oracle builder for `moves` moves and returns the recorded
/// states. The script only learns a color when asked for its next move, so
/// the game runs one move longer.
pub fn states(
    k: usize,
    painter: &mut dyn ordered_ramsey::PainterStrategy,
    moves: usize,
) -> Vec<Vec<i64>> {
    let mut b = ordered_ramsey::builders::partial_st_ives_builder_with(
        k,
        1000,
        ordered_ramsey::builders::ChainOracle,
    )
    .unwrap();
    let trace = b.trace();
    let g = ordered_ramsey::build_family(&format!("Sp:{k}")).unwrap();
    let t = ordered_ramsey::play_game(
        &mut b,
        painter,
        &g,
        ordered_ramsey::BlueTarget::Path { n: 1000 },
        moves + 1,
    )
    .unwrap();
    assert_eq!(t.result, ordered_ramsey::Outcome::Capped);
    assert_eq!(t.moves.len(), moves + 1);
    drop(b);
    trace.with_tag("state")
}

pub fn to_stitch_round() -> Vec<(&'static str, usize)> {
    // k = 2: base 27, three nesting rounds reach b = 3
    let mut parts = vec![("B", 26)];
    for _ in 0..3 {
        parts.extend([("R", 1), ("B", 26), ("R", 1)]);
    }
    parts
}

pub fn blue_cycle_board(
    len: usize,
) -> (ordered_ramsey::ColoredBoard, Vec<ordered_ramsey::VertexId>) {
    use ordered_ramsey::{Color, ColoredBoard, Endpoint, Move};
    let mut board = ColoredBoard::new();
    let (first, mut last) = board
        .apply_move(
            &Move::new(Endpoint::Fresh(0), Endpoint::Fresh(0)),
            Color::Blue,
        )
        .unwrap();
    let mut ids = vec![first, last];
    while ids.len() < len {
        let (_, v) = board
            .apply_move(
                &Move::new(Endpoint::Existing(last), Endpoint::Fresh(ids.len())),
                Color::Blue,
            )
            .unwrap();
        ids.push(v);
        last = v;
    }
    board
        .apply_move(&Move::existing(first, last), Color::Blue)
        .unwrap();
    (board, ids)
}
