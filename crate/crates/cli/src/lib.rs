//! Command-line front end: claim verification, trajectory export and gate
//! matching, each rendered as JSON, CSV or text.

pub mod config;
pub mod gates;
pub mod trajectory;
pub mod verify;

pub use config::{Args, Command, Format, RunConfig};
pub use gates::{run_gates, GatesReport};
pub use trajectory::{run_trajectory, Trajectory, TrajectoryRow, CSV_HEADER};
pub use verify::{run_verify, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] qbrach_core::Error),
    #[error("serialization failed: {0}")]
    Serialize(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            _ => EXIT_MISMATCH,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Serialize(e.to_string())
    }
}

pub(crate) fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Rendered output and the process exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Verify => {
            let report = run_verify(cfg)?;
            let output = match cfg.format {
                Format::Json => json(&report)?,
                Format::Csv => verify::render_csv(&report)?,
                Format::Text => verify::render_text(&report),
            };
            let exit_code = if report.all_as_expected() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok(Outcome { output, exit_code })
        }
        Command::Trajectory => {
            let traj = run_trajectory(cfg)?;
            let output = match cfg.format {
                Format::Json => json(&traj)?,
                Format::Csv => trajectory::render_csv(&traj)?,
                Format::Text => trajectory::render_text(&traj),
            };
            Ok(Outcome {
                output,
                exit_code: EXIT_OK,
            })
        }
        Command::Gates => {
            let report = run_gates(cfg)?;
            let output = match cfg.format {
                Format::Json => json(&report)?,
                Format::Csv => gates::render_csv(&report)?,
                Format::Text => gates::render_text(&report),
            };
            Ok(Outcome {
                output,
                exit_code: EXIT_OK,
            })
        }
    }
}

/// Parses arguments, runs, and writes the output. Returns the exit status.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::try_from(args).and_then(|cfg| {
        let outcome = execute(&cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, &outcome.output)?,
            None => {
                use std::io::Write;
                std::io::stdout().write_all(outcome.output.as_bytes())?;
            }
        }
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qbrach: {e}");
            e.exit_code()
        }
    }
}
