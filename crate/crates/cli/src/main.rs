use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orl_cli::commands::{self, PlayArgs, DEFAULT_SOLVER_CAP};
use orl_cli::{service, CliError, Report};
use serde_json::json;

#[derive(Parser)]
#[command(name = "orl", version, about = "Online Ramsey games on ordered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact game value by memoized search.
    Solve {
        #[arg(long)]
        red: String,
        /// `path:<n>` or `cycle:<n>`.
        #[arg(long)]
        blue: String,
        #[arg(long, default_value_t = 12)]
        cap: usize,
        /// Write the optimal Builder policy here.
        #[arg(long)]
        emit_policy: Option<PathBuf>,
    },
    /// Play one game and print its transcript.
    Play {
        #[arg(long)]
        builder: String,
        #[arg(long)]
        painter: String,
        /// Defaults to the builder's own target.
        #[arg(long)]
        red: Option<String>,
        #[arg(long)]
        blue: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append the transcript to `<dir>/transcripts.jsonl`.
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Fewest moves Builder needs against a fixed positional painter.
    BestResponse {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long)]
        painter: String,
        #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound compliance and lower-bound certificates; exits 1 on any failure.
    Invariants {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random painters per builder.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        /// Include the slow certificates.
        #[arg(long)]
        full: bool,
    },
    /// Known bounds per family with exact values where the search is small.
    BoundsTable {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Serve the game API.
    Serve {
        #[arg(long, env = "ORL_PORT", default_value_t = 8080)]
        port: u16,
        /// Session journal, replayed on start.
        #[arg(long)]
        journal: Option<PathBuf>,
    },
}

fn run(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Solve {
            red,
            blue,
            cap,
            emit_policy,
        } => commands::solve_cmd(&red, &blue, cap, emit_policy.as_deref()),
        Command::Play {
            builder,
            painter,
            red,
            blue,
            cap,
            seed,
            record,
        } => commands::play_cmd(&PlayArgs {
            red: red.as_deref(),
            blue: blue.as_deref(),
            builder: &builder,
            painter: &painter,
            cap,
            seed,
            record: record.as_deref(),
        }),
        Command::BestResponse {
            red,
            blue,
            painter,
            cap,
            seed,
        } => commands::best_response_cmd(&red, &blue, &painter, cap, seed),
        Command::Invariants { seed, seeds, full } => commands::invariants_cmd(seed, seeds, full),
        Command::BoundsTable { max_n } => commands::bounds_table_cmd(max_n),
        Command::Serve { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Serve { port, journal } => tokio::runtime::Runtime::new()
            .map_err(CliError::from)
            .and_then(|rt| rt.block_on(service::serve(port, journal)))
            .map(|()| None),
        cmd => run(cmd).map(Some),
    };
    match result {
        Ok(Some(report)) => {
            println!("{}", report.json);
            ExitCode::from(report.status.exit_code() as u8)
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({ "v": 1, "error": e.to_string() }));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
