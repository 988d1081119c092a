//! HTTP game service: a human plays one side live against an engine
//! strategy.
//!
//! - `POST /games` `{red, blue, human_role, engine, seed?, cap?}` → `{game_id, state}`
//! - `GET /games` → ids of live sessions
//! - `GET /games/{id}` → state plus transcript
//! - `POST /games/{id}/move` `{"move": Move}` (human Builder) or
//!   `{"color": "red"|"blue"}` (human Painter) → state
//! - `DELETE /games/{id}`
//!
//! Errors: 400 malformed or illegal input, 404 unknown game, 409 input out of
//! turn or game over.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use ordered_ramsey::family::format_raw;
use ordered_ramsey::{
    BlueTarget, BuilderStrategy, Color, ColoredBoard, Move, Outcome, PainterStrategy, PlayedMove,
    Referee, Transcript,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::DEFAULT_SOLVER_CAP;
use crate::error::CliError;
use crate::registry::{make_builder, make_painter, parse_blue, parse_red};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Builder,
    Painter,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NewGame {
    pub red: String,
    pub blue: String,
    pub human_role: Role,
    /// Builder name when the human paints, painter name when the human builds.
    pub engine: String,
    #[serde(default)]
    pub seed: u64,
    /// Move cap for the session; also the solver cap for `optimal`.
    #[serde(default)]
    pub cap: Option<usize>,
}

#[derive(Debug)]
pub struct ApiError(StatusCode, String);

impl ApiError {
    fn bad(msg: impl Into<String>) -> Self {
        ApiError(StatusCode::BAD_REQUEST, msg.into())
    }
    fn conflict(msg: impl Into<String>) -> Self {
        ApiError(StatusCode::CONFLICT, msg.into())
    }
    fn not_found(id: u64) -> Self {
        ApiError(StatusCode::NOT_FOUND, format!("no game {id}"))
    }
}

impl From<CliError> for ApiError {
    fn from(e: CliError) -> Self {
        ApiError::bad(e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "v": 1, "error": self.1 }))).into_response()
    }
}

enum Engine {
    Builder(Box<dyn BuilderStrategy>),
    Painter(Box<dyn PainterStrategy>),
}

pub struct Session {
    id: u64,
    config: NewGame,
    red_raw: String,
    blue: BlueTarget,
    referee: Referee,
    engine: Engine,
    engine_name: String,
    bound: Option<u64>,
    cap: usize,
    board: ColoredBoard,
    moves: Vec<PlayedMove>,
    result: Option<Outcome>,
    /// Engine Builder's query waiting for the human's color.
    pending: Option<Move>,
    fault: Option<String>,
}

fn parse_color(v: &Value) -> Result<Color, ApiError> {
    match v.as_str().map(str::to_ascii_lowercase).as_deref() {
        Some("red" | "r") => Ok(Color::Red),
        Some("blue" | "b") => Ok(Color::Blue),
        _ => Err(ApiError::bad(format!("bad color {v}"))),
    }
}

impl Session {
    pub fn new(id: u64, config: NewGame) -> Result<Session, ApiError> {
        let red = parse_red(&config.red)?;
        let blue = parse_blue(&config.blue)?;
        let referee = Referee::new(&red, blue).map_err(|e| ApiError::bad(e.to_string()))?;
        let solver_cap = config.cap.unwrap_or(DEFAULT_SOLVER_CAP);
        let (engine, name, bound) = match config.human_role {
            Role::Painter => {
                let b = make_builder(&config.engine, &red, blue, solver_cap)?;
                let (name, bound) = (b.name(), b.bound());
                (Engine::Builder(b), name, bound)
            }
            Role::Builder => {
                let p = make_painter(&config.engine, &red, blue, config.seed, solver_cap)?;
                let name = p.name();
                (Engine::Painter(p), name, None)
            }
        };
        let cap = config.cap.or(bound.map(|b| b as usize + 1)).unwrap_or(1000);
        let mut s = Session {
            id,
            red_raw: format_raw(&red),
            blue,
            referee,
            engine,
            engine_name: name,
            bound,
            cap,
            board: ColoredBoard::new(),
            moves: Vec::new(),
            result: None,
            pending: None,
            fault: None,
            config,
        };
        s.ask_builder();
        Ok(s)
    }

    fn finished(&self) -> bool {
        self.result.is_some() || self.fault.is_some()
    }

    fn ask_builder(&mut self) {
        if self.finished() {
            return;
        }
        if let Engine::Builder(b) = &mut self.engine {
            match b.next_move(&self.board) {
                Ok(mv) => match self.board.validate(&mv) {
                    Ok(()) => self.pending = Some(mv),
                    Err(e) => self.fault = Some(format!("engine played an illegal move: {e}")),
                },
                Err(e) => self.fault = Some(e.to_string()),
            }
        }
    }

    fn record(&mut self, mv: &Move, color: Color) {
        self.board.apply_move(mv, color).expect("validated move");
        let played = *self.board.last_move().unwrap();
        self.moves.push(played);
        self.result = self.referee.after_move(&self.board, &played);
        if self.result.is_none() && self.moves.len() >= self.cap {
            self.result = Some(Outcome::Capped);
        }
    }

    /// Applies one human input: `{"move": …}` or `{"color": …}`.
    pub fn input(&mut self, body: &Value) -> Result<(), ApiError> {
        let (mv, color) = (body.get("move"), body.get("color"));
        if mv.is_none() && color.is_none() {
            return Err(ApiError::bad("expected a move or a color"));
        }
        if self.finished() {
            return Err(ApiError::conflict("game is over"));
        }
        match (self.config.human_role, mv, color) {
            (Role::Builder, Some(mv), None) => {
                let mv: Move = serde_json::from_value(mv.clone())
                    .map_err(|e| ApiError::bad(format!("bad move: {e}")))?;
                let (preview, u, v) = self
                    .board
                    .preview(&mv)
                    .map_err(|e| ApiError::bad(format!("illegal move: {e}")))?;
                let Engine::Painter(p) = &mut self.engine else {
                    unreachable!("human builder plays an engine painter")
                };
                let color = p.color(&preview, u, v);
                self.record(&mv, color);
                Ok(())
            }
            (Role::Painter, None, Some(c)) => {
                let color = parse_color(c)?;
                let mv = self
                    .pending
                    .take()
                    .ok_or_else(|| ApiError::conflict("no pending query"))?;
                self.record(&mv, color);
                self.ask_builder();
                Ok(())
            }
            (Role::Builder, _, _) => Err(ApiError::conflict("Builder's turn: submit a move")),
            (Role::Painter, _, _) => Err(ApiError::conflict("Painter's turn: submit a color")),
        }
    }

    pub fn transcript(&self) -> Transcript {
        Transcript {
            red: self.red_raw.clone(),
            blue: self.blue,
            moves: self.moves.clone(),
            result: self.result.unwrap_or(Outcome::Capped),
            order: self.board.order().to_vec(),
        }
    }

    fn hints(&self) -> Value {
        if self.finished() {
            return Value::Null;
        }
        match self.config.human_role {
            Role::Painter => json!({ "colors": ["red", "blue"] }),
            Role::Builder => {
                let order = self.board.order();
                let mut open = Vec::new();
                for (i, &u) in order.iter().enumerate() {
                    for &v in &order[i + 1..] {
                        if self.board.color(u, v).is_none() {
                            open.push([u, v]);
                        }
                    }
                }
                json!({ "gaps": order.len() + 1, "open_pairs": open })
            }
        }
    }

    pub fn state(&self) -> Value {
        let edges: Vec<Value> = self
            .board
            .edges()
            .into_iter()
            .map(|(u, v, c)| json!({ "u": u, "v": v, "color": c }))
            .collect();
        let pending = self.pending.map(|mv| {
            let (_, u, v) = self.board.preview(&mv).expect("validated move");
            json!({ "query": mv, "u": u, "v": v })
        });
        json!({
            "v": 1,
            "game_id": self.id,
            "red": self.red_raw,
            "blue": self.blue.to_string(),
            "human_role": self.config.human_role,
            "engine": self.engine_name,
            "order": self.board.order(),
            "edges": edges,
            "longest_blue_path": self.board.longest_path(Color::Blue).1,
            "moves": self.moves.len(),
            "bound": self.bound,
            "cap": self.cap,
            "last_move": self.moves.last(),
            "pending": pending,
            "result": self.result,
            "finished": self.finished(),
            "fault": self.fault,
            "hints": self.hints(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Record {
    config: NewGame,
    inputs: Vec<Value>,
}

#[derive(Default)]
pub struct AppState {
    sessions: Mutex<HashMap<u64, Arc<Mutex<Session>>>>,
    next: AtomicU64,
    journal: Option<PathBuf>,
    records: Mutex<BTreeMap<u64, Record>>,
}

impl AppState {
    pub fn new(journal: Option<PathBuf>) -> Result<AppState, CliError> {
        let state = AppState {
            journal,
            ..AppState::default()
        };
        state.next.store(1, Ordering::SeqCst);
        state.restore()?;
        Ok(state)
    }

    /// Rebuilds the sessions in the journal by replaying their inputs.
    fn restore(&self) -> Result<(), CliError> {
        let Some(path) = &self.journal else {
            return Ok(());
        };
        if !path.exists() {
            return Ok(());
        }
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(path)?)
            .map_err(|e| CliError::Parse(format!("journal: {e}")))?;
        let games: BTreeMap<u64, Record> = serde_json::from_value(doc["games"].clone())
            .map_err(|e| CliError::Parse(format!("journal: {e}")))?;
        let mut sessions = self.sessions.lock().unwrap();
        for (id, rec) in &games {
            let Ok(mut s) = Session::new(*id, rec.config.clone()) else {
                continue;
            };
            for input in &rec.inputs {
                let _ = s.input(input);
            }
            sessions.insert(*id, Arc::new(Mutex::new(s)));
            self.next.fetch_max(id + 1, Ordering::SeqCst);
        }
        *self.records.lock().unwrap() = games;
        Ok(())
    }

    fn save(&self) {
        if let Some(path) = &self.journal {
            let records = self.records.lock().unwrap();
            let doc = json!({ "v": 1, "games": &*records });
            if let Err(e) = std::fs::write(path, doc.to_string()) {
                eprintln!("journal write failed: {e}");
            }
        }
    }

    fn session(&self, id: u64) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .lock()
            .unwrap()
            .get(&id)
            .cloned()
            .ok_or(ApiError::not_found(id))
    }
}

fn parse_body<T: serde::de::DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad(format!("bad request body: {e}")))
}

async fn blocking<T: Send + 'static>(
    f: impl FnOnce() -> Result<T, ApiError> + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
}

async fn create(State(app): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let config: NewGame = parse_body(&body)?;
    let id = app.next.fetch_add(1, Ordering::SeqCst);
    let cfg = config.clone();
    let session = blocking(move || Session::new(id, cfg)).await?;
    let state = session.state();
    app.sessions
        .lock()
        .unwrap()
        .insert(id, Arc::new(Mutex::new(session)));
    app.records.lock().unwrap().insert(
        id,
        Record {
            config,
            inputs: Vec::new(),
        },
    );
    app.save();
    Ok((
        StatusCode::CREATED,
        Json(json!({ "v": 1, "game_id": id, "state": state })),
    )
        .into_response())
}

async fn list(State(app): State<Arc<AppState>>) -> Json<Value> {
    let mut ids: Vec<u64> = app.sessions.lock().unwrap().keys().copied().collect();
    ids.sort_unstable();
    Json(json!({ "v": 1, "games": ids }))
}

async fn show(
    State(app): State<Arc<AppState>>,
    Path(id): Path<u64>,
) -> Result<Json<Value>, ApiError> {
    let s = app.session(id)?;
    let s = s.lock().unwrap();
    let mut state = s.state();
    state["transcript"] = s.transcript().to_json();
    Ok(Json(state))
}

async fn play_move(
    State(app): State<Arc<AppState>>,
    Path(id): Path<u64>,
    body: Bytes,
) -> Result<Json<Value>, ApiError> {
    let input: Value = parse_body(&body)?;
    let s = app.session(id)?;
    let stored = input.clone();
    let state = blocking(move || {
        let mut s = s.lock().unwrap();
        s.input(&input)?;
        Ok(s.state())
    })
    .await?;
    if let Some(rec) = app.records.lock().unwrap().get_mut(&id) {
        rec.inputs.push(stored);
    }
    app.save();
    Ok(Json(state))
}

async fn remove(
    State(app): State<Arc<AppState>>,
    Path(id): Path<u64>,
) -> Result<StatusCode, ApiError> {
    app.sessions
        .lock()
        .unwrap()
        .remove(&id)
        .ok_or(ApiError::not_found(id))?;
    app.records.lock().unwrap().remove(&id);
    app.save();
    Ok(StatusCode::NO_CONTENT)
}

pub fn router(app: Arc<AppState>) -> Router {
    Router::new()
        .route("/games", post(create).get(list))
        .route("/games/{id}", get(show).delete(remove))
        .route("/games/{id}/move", post(play_move))
        .with_state(app)
}

pub async fn serve(port: u16, journal: Option<PathBuf>) -> Result<(), CliError> {
    let app = Arc::new(AppState::new(journal)?);
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(app)).await?;
    Ok(())
}
