//! Referee, strategy interfaces, the Builder/Painter loop and transcripts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::board::{ColoredBoard, Endpoint, Move, PlayedMove, VertexId};
use crate::color::Color;
use crate::error::{GameError, StrategyError};
use crate::family::{build_family, format_raw};
use crate::graph::{find_embedding, find_ordered_cycle, OrderedGraph};

/// Blue side of the game: a monotone path or an ordered cycle on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BlueTarget {
    Path { n: usize },
    Cycle { n: usize },
}

impl BlueTarget {
    pub fn n(&self) -> usize {
        match *self {
            BlueTarget::Path { n } | BlueTarget::Cycle { n } => n,
        }
    }

    pub fn graph(&self) -> OrderedGraph {
        match *self {
            BlueTarget::Path { n } => crate::family::path(n),
            BlueTarget::Cycle { n } => crate::family::cycle(n),
        }
    }
}

impl fmt::Display for BlueTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlueTarget::Path { n } => write!(f, "path:{n}"),
            BlueTarget::Cycle { n } => write!(f, "cycle:{n}"),
        }
    }
}

impl FromStr for BlueTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| format!("expected path:<n> or cycle:<n>, got {s:?}"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| format!("bad length in {s:?}"))?;
        match kind {
            "path" | "P" if n >= 1 => Ok(BlueTarget::Path { n }),
            "cycle" | "C" if n >= 3 => Ok(BlueTarget::Cycle { n }),
            "path" | "P" | "cycle" | "C" => Err(format!("length too small in {s:?}")),
            _ => Err(format!("unknown blue target kind {kind:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    #[serde(rename = "red")]
    RedWin,
    #[serde(rename = "blue")]
    BlueWin,
    #[serde(rename = "cap")]
    Capped,
}

/// Win detection for one pair of targets.
#[derive(Debug, Clone)]
pub struct Referee {
    red: OrderedGraph,
    blue: BlueTarget,
}

impl Referee {
    /// The red target must have at least one edge; its isolated vertices are
    /// ignored for win detection.
    pub fn new(red: &OrderedGraph, blue: BlueTarget) -> Result<Self, GameError> {
        if red.edge_count() == 0 {
            return Err(GameError::Target("red target has no edges".into()));
        }
        if let BlueTarget::Cycle { n } = blue {
            if n < 3 {
                return Err(GameError::Target(
                    "blue cycle needs at least 3 vertices".into(),
                ));
            }
        }
        Ok(Referee {
            red: red.strip_isolated(),
            blue,
        })
    }

    pub fn red(&self) -> &OrderedGraph {
        &self.red
    }

    pub fn blue(&self) -> BlueTarget {
        self.blue
    }

    pub fn red_win(&self, board: &ColoredBoard) -> bool {
        let (sub, _) = board.color_subgraph(Color::Red);
        find_embedding(&sub, &self.red, None).is_some()
    }

    pub fn blue_win(&self, board: &ColoredBoard) -> bool {
        match self.blue {
            BlueTarget::Path { n } => board.longest_path(Color::Blue).0 >= n,
            BlueTarget::Cycle { n } => find_ordered_cycle(board, n, Color::Blue).is_some(),
        }
    }

    /// Full check of a position.
    pub fn outcome(&self, board: &ColoredBoard) -> Option<Outcome> {
        if self.red_win(board) {
            Some(Outcome::RedWin)
        } else if self.blue_win(board) {
            Some(Outcome::BlueWin)
        } else {
            None
        }
    }

    /// Check after `played` on a board that had no win before it.
    pub fn after_move(&self, board: &ColoredBoard, played: &PlayedMove) -> Option<Outcome> {
        match played.color {
            Color::Red => self.red_win(board).then_some(Outcome::RedWin),
            Color::Blue => {
                let won = match self.blue {
                    BlueTarget::Path { n } => board.longest_path(Color::Blue).0 >= n,
                    BlueTarget::Cycle { n } => {
                        board.cycle_through_edge(played.left, played.right, n, Color::Blue)
                    }
                };
                won.then_some(Outcome::BlueWin)
            }
        }
    }
}

pub trait BuilderStrategy: Send {
    fn name(&self) -> String;

    /// Next query for `board`. The board's last move, if any, is this
    /// builder's previous query with Painter's color.
    fn next_move(&mut self, board: &ColoredBoard) -> Result<Move, StrategyError>;

    /// Declared move bound for the game this strategy was built for.
    fn bound(&self) -> Option<u64> {
        None
    }
}

/// A painter promise that can be relied on by searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Avoids {
    Red(OrderedGraph),
    Blue(BlueTarget),
}

pub trait PainterStrategy: Send {
    fn name(&self) -> String;

    /// Color for the pair `u < v`; `board` already holds any fresh vertices
    /// the query introduced.
    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color;

    /// Target this painter never completes, when it makes such a promise.
    fn avoids(&self) -> Option<Avoids> {
        None
    }

    /// True when `color` depends only on the position (no internal state).
    fn is_positional(&self) -> bool {
        false
    }
}

impl<T: BuilderStrategy + ?Sized> BuilderStrategy for Box<T> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn next_move(&mut self, board: &ColoredBoard) -> Result<Move, StrategyError> {
        (**self).next_move(board)
    }
    fn bound(&self) -> Option<u64> {
        (**self).bound()
    }
}

impl<T: PainterStrategy + ?Sized> PainterStrategy for Box<T> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn color(&mut self, board: &ColoredBoard, u: VertexId, v: VertexId) -> Color {
        (**self).color(board, u, v)
    }
    fn avoids(&self) -> Option<Avoids> {
        (**self).avoids()
    }
    fn is_positional(&self) -> bool {
        (**self).is_positional()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub red: String,
    pub blue: BlueTarget,
    pub moves: Vec<PlayedMove>,
    pub result: Outcome,
    pub order: Vec<VertexId>,
}

impl Transcript {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Plays from an empty board.
pub fn play_game(
    builder: &mut dyn BuilderStrategy,
    painter: &mut dyn PainterStrategy,
    red: &OrderedGraph,
    blue: BlueTarget,
    move_cap: usize,
) -> Result<Transcript, GameError> {
    play_from(ColoredBoard::new(), builder, painter, red, blue, move_cap).map(|(t, _)| t)
}

/// Plays from `start` (which must not already be won) and also returns the
/// final board. Moves already on `start` are not part of the transcript.
pub fn play_from(
    start: ColoredBoard,
    builder: &mut dyn BuilderStrategy,
    painter: &mut dyn PainterStrategy,
    red: &OrderedGraph,
    blue: BlueTarget,
    move_cap: usize,
) -> Result<(Transcript, ColoredBoard), GameError> {
    let referee = Referee::new(red, blue)?;
    let mut board = start;
    let mut transcript = Transcript {
        red: format_raw(red),
        blue,
        moves: Vec::new(),
        result: Outcome::Capped,
        order: Vec::new(),
    };
    if let Some(result) = referee.outcome(&board) {
        transcript.result = result;
        transcript.order = board.order().to_vec();
        return Ok((transcript, board));
    }
    while transcript.moves.len() < move_cap {
        let moves = transcript.moves.len();
        let mv = match builder.next_move(&board) {
            Ok(mv) => mv,
            Err(e) => {
                transcript.order = board.order().to_vec();
                return Err(GameError::BuilderFault {
                    moves,
                    reason: e.to_string(),
                    transcript: Box::new(transcript),
                });
            }
        };
        let (preview, u, v) = match board.preview(&mv) {
            Ok(p) => p,
            Err(source) => {
                transcript.order = board.order().to_vec();
                return Err(GameError::IllegalMove {
                    moves,
                    source,
                    transcript: Box::new(transcript),
                });
            }
        };
        let color = painter.color(&preview, u, v);
        board.apply_move(&mv, color).expect("validated by preview");
        let played = *board.last_move().unwrap();
        transcript.moves.push(played);
        if let Some(result) = referee.after_move(&board, &played) {
            transcript.result = result;
            break;
        }
    }
    transcript.order = board.order().to_vec();
    Ok((transcript, board))
}

/// Rebuilds the final board and checks the recorded result: no win after
/// any proper prefix, and the recorded outcome after the last move.
pub fn replay(transcript: &Transcript) -> Result<ColoredBoard, GameError> {
    let red = build_family(&transcript.red).map_err(|e| GameError::Format(e.to_string()))?;
    let referee = Referee::new(&red, transcript.blue)?;
    let mut board = ColoredBoard::new();
    let mut result = None;
    for (i, played) in transcript.moves.iter().enumerate() {
        if result.is_some() {
            return Err(GameError::Inconsistent(format!(
                "game already won before move {}",
                i + 1
            )));
        }
        let (u, v) = board
            .apply_move(&played.query, played.color)
            .map_err(|e| GameError::Inconsistent(format!("move {} is illegal: {e}", i + 1)))?;
        if (u, v) != (played.left, played.right) {
            return Err(GameError::Inconsistent(format!(
                "move {} resolved to {u}-{v}",
                i + 1
            )));
        }
        result = referee.after_move(&board, board.last_move().unwrap());
    }
    let result = result.unwrap_or(Outcome::Capped);
    if result != transcript.result {
        return Err(GameError::Inconsistent(format!(
            "recorded {:?}, replay gives {:?}",
            transcript.result, result
        )));
    }
    if board.order() != transcript.order.as_slice() {
        return Err(GameError::Inconsistent("final vertex order differs".into()));
    }
    Ok(board)
}

#[derive(Serialize, Deserialize)]
struct FreshJson {
    id: VertexId,
    gap: usize,
}

#[derive(Serialize, Deserialize)]
struct MoveJson {
    u: VertexId,
    v: VertexId,
    #[serde(default)]
    fresh: Vec<FreshJson>,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct TranscriptJson {
    v: u32,
    red: String,
    blue: BlueTarget,
    moves: Vec<MoveJson>,
    order: Vec<VertexId>,
    result: Outcome,
}

impl Transcript {
    pub fn to_json(&self) -> serde_json::Value {
        let moves = self
            .moves
            .iter()
            .map(|m| {
                let mut fresh = Vec::new();
                if let Endpoint::Fresh(gap) = m.query.left {
                    fresh.push(FreshJson { id: m.left, gap });
                }
                if let Endpoint::Fresh(gap) = m.query.right {
                    fresh.push(FreshJson { id: m.right, gap });
                }
                MoveJson {
                    u: m.left,
                    v: m.right,
                    fresh,
                    color: m.color,
                }
            })
            .collect();
        let doc = TranscriptJson {
            v: 1,
            red: self.red.clone(),
            blue: self.blue,
            moves,
            order: self.order.clone(),
            result: self.result,
        };
        serde_json::to_value(doc).expect("transcript serializes")
    }

    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Transcript, GameError> {
        let doc: TranscriptJson =
            serde_json::from_value(value.clone()).map_err(|e| GameError::Format(e.to_string()))?;
        if doc.v != 1 {
            return Err(GameError::Format(format!(
                "unsupported transcript version {}",
                doc.v
            )));
        }
        let moves = doc
            .moves
            .into_iter()
            .map(|m| {
                let endpoint = |id: VertexId| {
                    m.fresh
                        .iter()
                        .find(|f| f.id == id)
                        .map_or(Endpoint::Existing(id), |f| Endpoint::Fresh(f.gap))
                };
                PlayedMove {
                    query: Move::new(endpoint(m.u), endpoint(m.v)),
                    left: m.u,
                    right: m.v,
                    color: m.color,
                }
            })
            .collect();
        Ok(Transcript {
            red: doc.red,
            blue: doc.blue,
            moves,
            result: doc.result,
            order: doc.order,
        })
    }

    pub fn from_json_str(s: &str) -> Result<Transcript, GameError> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| GameError::Format(e.to_string()))?;
        Self::from_json(&value)
    }
}
