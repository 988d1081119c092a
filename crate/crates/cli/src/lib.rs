//! Command-line harness and HTTP game service for ordered online Ramsey
//! games.

pub mod commands;
pub mod error;
pub mod registry;
pub mod service;

pub use commands::{Report, Status};
pub use error::CliError;
