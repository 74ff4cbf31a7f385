use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use qbrach_core::brach::OptimalQubitParams;
use qbrach_core::stark::{AcStarkParams, DcStarkParams};
use qbrach_core::suite::SuiteParams;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Verify,
    Trajectory,
    Gates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Verify the identity ledger, export a propagator trajectory, or match
/// standard gates against the propagator families.
#[derive(Debug, Clone, Parser)]
#[command(name = "qbrach", version, about)]
pub struct Args {
    #[arg(long, value_enum, default_value = "verify")]
    pub command: Command,

    /// Amplitude R of the optimal Hamiltonian.
    #[arg(long = "R", default_value_t = 1.0, allow_negative_numbers = true)]
    pub r: f64,

    /// Frame frequency ω (the constraint strength Ω is set equal to it).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,

    /// Stark energy offset E.
    #[arg(long = "E", default_value_t = 0.5, allow_negative_numbers = true)]
    pub e: f64,

    /// Static Stark detuning Δ.
    #[arg(long = "Delta", default_value_t = 1.0, allow_negative_numbers = true)]
    pub delta: f64,

    /// Stark coupling amplitude V.
    #[arg(long = "V", default_value_t = 1.0, allow_negative_numbers = true)]
    pub v: f64,

    /// Coupling phase φ.
    #[arg(long, default_value_t = 0.7, allow_negative_numbers = true)]
    pub phi: f64,

    /// Drive frequency of the driven Stark system.
    #[arg(
        long = "omega-drive",
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    pub omega_drive: f64,

    #[arg(long = "t-start", default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_start: f64,

    #[arg(long = "t-end", default_value_t = 2.0, allow_negative_numbers = true)]
    pub t_end: f64,

    /// Sample count: claim grid, trajectory rows, or gate search grid.
    #[arg(long, default_value_t = 21)]
    pub samples: usize,

    /// Run tolerance for claims without their own tolerance.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,

    /// Propagator family for trajectories.
    #[arg(long, default_value = "eigenframe")]
    pub family: String,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Defaults to csv for trajectories and json otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Validated run configuration. Serialized as the report's config echo.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(rename = "R")]
    pub r: f64,
    pub omega: f64,
    #[serde(rename = "E")]
    pub e: f64,
    #[serde(rename = "Delta")]
    pub delta: f64,
    #[serde(rename = "V")]
    pub v: f64,
    pub phi: f64,
    pub omega_drive: f64,
    pub t_start: f64,
    pub t_end: f64,
    pub samples: usize,
    pub tol: f64,
    pub family: String,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Args::parse_from(["qbrach"])
            .try_into()
            .expect("defaults are valid")
    }
}

impl TryFrom<Args> for RunConfig {
    type Error = CliError;

    fn try_from(a: Args) -> Result<Self, CliError> {
        let format = a.format.unwrap_or(match a.command {
            Command::Trajectory => Format::Csv,
            _ => Format::Json,
        });
        let cfg = RunConfig {
            command: a.command,
            r: a.r,
            omega: a.omega,
            e: a.e,
            delta: a.delta,
            v: a.v,
            phi: a.phi,
            omega_drive: a.omega_drive,
            t_start: a.t_start,
            t_end: a.t_end,
            samples: a.samples,
            tol: a.tol,
            family: a.family,
            format,
            out: a.out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let named = [
            ("R", self.r),
            ("omega", self.omega),
            ("E", self.e),
            ("Delta", self.delta),
            ("V", self.v),
            ("phi", self.phi),
            ("omega-drive", self.omega_drive),
            ("t-start", self.t_start),
            ("t-end", self.t_end),
            ("tol", self.tol),
        ];
        if let Some((name, _)) = named.iter().find(|(_, x)| !x.is_finite()) {
            return Err(CliError::Config(format!("--{name} must be finite")));
        }
        if self.samples < 2 {
            return Err(CliError::Config(format!(
                "--samples must be at least 2, got {}",
                self.samples
            )));
        }
        if self.t_end <= self.t_start {
            return Err(CliError::Config(format!(
                "--t-end ({}) must exceed --t-start ({})",
                self.t_end, self.t_start
            )));
        }
        if self.tol <= 0.0 {
            return Err(CliError::Config(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        if self.omega_drive <= 0.0 {
            return Err(CliError::Config(format!(
                "--omega-drive must be positive, got {}",
                self.omega_drive
            )));
        }
        Ok(())
    }

    pub fn optimal(&self) -> OptimalQubitParams {
        OptimalQubitParams::on_solution(self.r, self.omega)
    }

    /// Evenly spaced samples from `t_start` to `t_end` inclusive.
    pub fn times(&self) -> Vec<f64> {
        let span = self.t_end - self.t_start;
        let last = (self.samples - 1) as f64;
        (0..self.samples)
            .map(|k| self.t_start + span * (k as f64 / last))
            .collect()
    }

    pub fn suite_params(&self) -> Result<SuiteParams, CliError> {
        let config = |e: qbrach_core::Error| CliError::Config(e.to_string());
        Ok(SuiteParams {
            optimal: self.optimal(),
            dc: DcStarkParams::new(self.e, self.delta, self.v, self.phi).map_err(config)?,
            ac: AcStarkParams::new(self.e, self.v, self.phi, self.omega_drive).map_err(config)?,
            times: self.times(),
        })
    }
}
