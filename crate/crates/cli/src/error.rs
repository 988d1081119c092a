use ordered_ramsey::{GameError, GraphError, StrategyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("cap exhausted: {0}")]
    Cap(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Infeasible(_) | CliError::Io(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::Format(_) => CliError::Parse(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<StrategyError> for CliError {
    fn from(e: StrategyError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}
