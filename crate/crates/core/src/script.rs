//! Sequential Builder scripts.
//!
//! A strategy is written as straight-line code against a [`Driver`]: it
//! creates vertex handles wherever it likes on a private dense line and calls
//! [`Driver::draw`], which blocks until Painter has answered. Handles are
//! turned into real board vertices lazily, the first time they are drawn, so a
//! script may reserve positions ahead of time. [`ScriptedBuilder`] runs the
//! script on its own thread and exposes it as a [`BuilderStrategy`].

use std::sync::mpsc::{channel, Receiver, Sender};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;

use serde::Serialize;

use crate::board::{ColoredBoard, Endpoint, Move, VertexId};
use crate::color::Color;
use crate::error::StrategyError;
use crate::game::BuilderStrategy;

/// A vertex handle on a script's line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vx(usize);

/// Why a script stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Halt {
    /// The game ended or the builder was dropped.
    Stopped,
    Fault(StrategyError),
}

impl From<StrategyError> for Halt {
    fn from(e: StrategyError) -> Self {
        Halt::Fault(e)
    }
}

pub type Step<T> = Result<T, Halt>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub tag: String,
    pub values: Vec<i64>,
}

/// Shared event log a script writes to while it runs.
#[derive(Debug, Clone, Default)]
pub struct Trace(Arc<Mutex<Vec<TraceEvent>>>);

impl Trace {
    pub fn push(&self, tag: &str, values: Vec<i64>) {
        self.0.lock().unwrap().push(TraceEvent {
            tag: tag.to_string(),
            values,
        });
    }

    pub fn events(&self) -> Vec<TraceEvent> {
        self.0.lock().unwrap().clone()
    }

    pub fn with_tag(&self, tag: &str) -> Vec<Vec<i64>> {
        self.0
            .lock()
            .unwrap()
            .iter()
            .filter(|e| e.tag == tag)
            .map(|e| e.values.clone())
            .collect()
    }
}

enum Request {
    Move(Move),
    Finished(Result<(), StrategyError>),
}

pub struct Driver {
    board: ColoredBoard,
    ids: Vec<Option<VertexId>>,
    line: Vec<Vx>,
    to_engine: Sender<Request>,
    from_engine: Receiver<Color>,
    trace: Trace,
    initial: Vec<Vx>,
}

impl Driver {
    fn new(
        board: ColoredBoard,
        to_engine: Sender<Request>,
        from_engine: Receiver<Color>,
        trace: Trace,
    ) -> Self {
        let mut d = Driver {
            board,
            ids: Vec::new(),
            line: Vec::new(),
            to_engine,
            from_engine,
            trace,
            initial: Vec::new(),
        };
        for &id in d.board.order().to_vec().iter() {
            let h = Vx(d.ids.len());
            d.ids.push(Some(id));
            d.line.push(h);
            d.initial.push(h);
        }
        d
    }

    /// Handles of the vertices the board had when the script started.
    pub fn initial_vertices(&self) -> &[Vx] {
        &self.initial
    }

    pub fn board(&self) -> &ColoredBoard {
        &self.board
    }

    pub fn trace(&self, tag: &str, values: Vec<i64>) {
        self.trace.push(tag, values);
    }

    pub fn moves(&self) -> usize {
        self.board.history().len()
    }

    fn index(&self, h: Vx) -> usize {
        self.line
            .iter()
            .position(|&x| x == h)
            .expect("handle belongs to this driver")
    }

    fn insert(&mut self, at: usize) -> Vx {
        let h = Vx(self.ids.len());
        self.ids.push(None);
        self.line.insert(at, h);
        h
    }

    pub fn rightmost(&mut self) -> Vx {
        self.insert(self.line.len())
    }

    pub fn leftmost(&mut self) -> Vx {
        self.insert(0)
    }

    /// New handle immediately right of `h`.
    pub fn after(&mut self, h: Vx) -> Vx {
        let i = self.index(h);
        self.insert(i + 1)
    }

    /// New handle immediately left of `h`.
    pub fn before(&mut self, h: Vx) -> Vx {
        let i = self.index(h);
        self.insert(i)
    }

    /// `count` new handles immediately right of `h`, left to right.
    pub fn run_after(&mut self, h: Vx, count: usize) -> Vec<Vx> {
        let mut out = Vec::with_capacity(count);
        let mut last = h;
        for _ in 0..count {
            last = self.after(last);
            out.push(last);
        }
        out
    }

    /// `count` new handles immediately left of `h`, left to right.
    pub fn run_before(&mut self, h: Vx, count: usize) -> Vec<Vx> {
        let i = self.index(h);
        (0..count).map(|k| self.insert(i + k)).collect()
    }

    pub fn is_left_of(&self, a: Vx, b: Vx) -> bool {
        self.index(a) < self.index(b)
    }

    pub fn id(&self, h: Vx) -> Option<VertexId> {
        self.ids[h.0]
    }

    pub fn color(&self, a: Vx, b: Vx) -> Option<Color> {
        match (self.ids[a.0], self.ids[b.0]) {
            (Some(u), Some(v)) => self.board.color(u, v),
            _ => None,
        }
    }

    fn gap(&self, h: Vx) -> usize {
        self.line
            .iter()
            .take_while(|&&x| x != h)
            .filter(|x| self.ids[x.0].is_some())
            .count()
    }

    /// Queries the pair and returns Painter's answer.
    pub fn draw(&mut self, a: Vx, b: Vx) -> Step<Color> {
        let (a, b) = if self.is_left_of(a, b) {
            (a, b)
        } else {
            (b, a)
        };
        if a == b {
            return Err(StrategyError::Precondition("pair with equal endpoints".into()).into());
        }
        if let Some(c) = self.color(a, b) {
            return Err(StrategyError::Precondition(format!("pair already drawn ({c})")).into());
        }
        let endpoint = |d: &Self, h: Vx| match d.ids[h.0] {
            Some(id) => Endpoint::Existing(id),
            None => Endpoint::Fresh(d.gap(h)),
        };
        let mv = Move::new(endpoint(self, a), endpoint(self, b));
        self.to_engine
            .send(Request::Move(mv))
            .map_err(|_| Halt::Stopped)?;
        let color = self.from_engine.recv().map_err(|_| Halt::Stopped)?;
        let (u, v) = self.board.apply_move(&mv, color).map_err(|e| {
            Halt::Fault(StrategyError::Precondition(format!(
                "script produced an illegal move: {e}"
            )))
        })?;
        self.ids[a.0] = Some(u);
        self.ids[b.0] = Some(v);
        Ok(color)
    }

    /// Color of the pair, drawing it first if needed.
    pub fn get_or_draw(&mut self, a: Vx, b: Vx) -> Step<Color> {
        match self.color(a, b) {
            Some(c) => Ok(c),
            None => self.draw(a, b),
        }
    }

    /// Draws consecutive pairs of `seq`, stopping at the first pair whose
    /// color is `stop`. Returns the index `i` of the pair `(seq[i], seq[i+1])`
    /// that stopped it.
    pub fn draw_chain_until(&mut self, seq: &[Vx], stop: Color) -> Step<Option<usize>> {
        for i in 0..seq.len().saturating_sub(1) {
            if self.get_or_draw(seq[i], seq[i + 1])? == stop {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

type Script = Box<dyn FnOnce(&mut Driver) -> Step<()> + Send>;

/// Runs a script on a dedicated thread, one query per [`next_move`] call.
///
/// [`next_move`]: BuilderStrategy::next_move
pub struct ScriptedBuilder {
    name: String,
    bound: Option<u64>,
    script: Option<Script>,
    to_script: Option<Sender<Color>>,
    from_script: Option<Receiver<Request>>,
    thread: Option<JoinHandle<()>>,
    awaiting: bool,
    trace: Trace,
}

impl ScriptedBuilder {
    pub fn new(
        name: impl Into<String>,
        script: impl FnOnce(&mut Driver) -> Step<()> + Send + 'static,
    ) -> Self {
        ScriptedBuilder {
            name: name.into(),
            bound: None,
            script: Some(Box::new(script)),
            to_script: None,
            from_script: None,
            thread: None,
            awaiting: false,
            trace: Trace::default(),
        }
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn trace(&self) -> Trace {
        self.trace.clone()
    }

    fn start(&mut self, board: &ColoredBoard) {
        let script = self.script.take().expect("script started once");
        let (req_tx, req_rx) = channel();
        let (col_tx, col_rx) = channel();
        let trace = self.trace.clone();
        let board = board.clone();
        let thread = std::thread::Builder::new()
            .name(format!("builder:{}", self.name))
            .stack_size(64 << 20)
            .spawn(move || {
                let mut driver = Driver::new(board, req_tx.clone(), col_rx, trace);
                let result = match script(&mut driver) {
                    Ok(()) => Ok(()),
                    Err(Halt::Stopped) => return,
                    Err(Halt::Fault(e)) => Err(e),
                };
                let _ = req_tx.send(Request::Finished(result));
            })
            .expect("spawn strategy thread");
        self.to_script = Some(col_tx);
        self.from_script = Some(req_rx);
        self.thread = Some(thread);
    }
}

impl BuilderStrategy for ScriptedBuilder {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn next_move(&mut self, board: &ColoredBoard) -> Result<Move, StrategyError> {
        if self.thread.is_none() {
            if self.script.is_none() {
                return Err(StrategyError::Disconnected);
            }
            self.start(board);
        } else if self.awaiting {
            let color = board
                .last_move()
                .map(|m| m.color)
                .ok_or(StrategyError::Disconnected)?;
            self.to_script
                .as_ref()
                .unwrap()
                .send(color)
                .map_err(|_| StrategyError::Disconnected)?;
        }
        self.awaiting = false;
        match self.from_script.as_ref().unwrap().recv() {
            Ok(Request::Move(mv)) => {
                self.awaiting = true;
                Ok(mv)
            }
            Ok(Request::Finished(Ok(()))) => Err(StrategyError::Exhausted(format!(
                "{} stopped without completing a target",
                self.name
            ))),
            Ok(Request::Finished(Err(e))) => Err(e),
            Err(_) => Err(StrategyError::Disconnected),
        }
    }

    fn bound(&self) -> Option<u64> {
        self.bound
    }
}

impl Drop for ScriptedBuilder {
    fn drop(&mut self) {
        self.to_script = None;
        self.from_script = None;
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::path;
    use crate::game::{play_game, BlueTarget, Outcome, PainterStrategy};

    struct Alternate(bool);

    impl PainterStrategy for Alternate {
        fn name(&self) -> String {
            "alternate".into()
        }
        fn color(&mut self, _: &ColoredBoard, _: VertexId, _: VertexId) -> Color {
            self.0 = !self.0;
            if self.0 {
                Color::Blue
            } else {
                Color::Red
            }
        }
    }

    #[test]
    fn reserved_handles_materialize_in_line_order() {
        let mut builder = ScriptedBuilder::new("demo", |q| {
            let a = q.rightmost();
            let c = q.rightmost();
            let b = q.after(a);
            q.draw(a, c)?;
            q.draw(a, b)?;
            let ids: Vec<_> = [a, b, c].iter().map(|&h| q.id(h).unwrap()).collect();
            assert_eq!(q.board().order(), ids.as_slice());
            q.draw(b, c)?;
            let d = q.rightmost();
            q.draw(c, d)?;
            Ok(())
        });
        let t = play_game(
            &mut builder,
            &mut Alternate(false),
            &path(3),
            BlueTarget::Path { n: 3 },
            3,
        )
        .unwrap();
        assert_eq!(t.moves.len(), 3);
        assert_eq!(t.result, Outcome::Capped);
    }

    #[test]
    fn exhausted_script_is_a_fault() {
        let mut builder = ScriptedBuilder::new("short", |q| {
            let a = q.rightmost();
            let b = q.rightmost();
            q.draw(a, b)?;
            Ok(())
        });
        let err = play_game(
            &mut builder,
            &mut Alternate(false),
            &path(3),
            BlueTarget::Path { n: 3 },
            10,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            crate::error::GameError::BuilderFault { moves: 1, .. }
        ));
    }
}
