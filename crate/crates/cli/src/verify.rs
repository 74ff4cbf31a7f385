use serde::Serialize;

use qbrach_core::claims::{Status, Verdict};
use qbrach_core::suite::run_suite;

use crate::config::RunConfig;
use crate::{CliError, SCHEMA_VERSION, TOOL_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub status: &'static str,
    pub expected: &'static str,
    pub as_expected: bool,
    pub max_residual: f64,
    pub worst_time: Option<f64>,
    pub sample_count: usize,
    pub tolerance: f64,
    pub error: Option<String>,
}

impl From<&Verdict> for ClaimRecord {
    fn from(v: &Verdict) -> Self {
        Self {
            id: v.id.clone(),
            anchor: v.anchor.clone(),
            statement: v.statement.clone(),
            status: v.status.as_str(),
            expected: v.expected.as_str(),
            as_expected: v.matches_expectation(),
            max_residual: v.max_residual,
            worst_time: v.worst_time,
            sample_count: v.sample_count,
            tolerance: v.tolerance,
            error: v.error.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub deviate: usize,
    pub error: usize,
    pub unexpected: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: &'static str,
    pub config: RunConfig,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_as_expected(&self) -> bool {
        self.summary.unexpected == 0
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }
}

pub fn run_verify(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let verdicts = run_suite(&cfg.suite_params()?, cfg.tol)?;
    let mut summary = Summary {
        total: verdicts.len(),
        ..Summary::default()
    };
    for v in &verdicts {
        match v.status {
            Status::Pass => summary.pass += 1,
            Status::Deviate => summary.deviate += 1,
            Status::Error => summary.error += 1,
        }
        if !v.matches_expectation() {
            summary.unexpected += 1;
        }
    }
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        config: cfg.clone(),
        claims: verdicts.iter().map(ClaimRecord::from).collect(),
        summary,
    })
}

pub fn render_csv(report: &VerificationReport) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record([
        "id",
        "anchor",
        "status",
        "expected",
        "as_expected",
        "max_residual",
        "sample_count",
    ])?;
    for c in &report.claims {
        w.write_record([
            c.id.clone(),
            c.anchor.clone(),
            c.status.to_string(),
            c.expected.to_string(),
            c.as_expected.to_string(),
            c.max_residual.to_string(),
            c.sample_count.to_string(),
        ])?;
    }
    crate::finish_csv(w)
}

pub fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.claims {
        let mark = if c.as_expected { "ok " } else { "BAD" };
        out.push_str(&format!(
            "{mark} {:<8} (expected {:<10}) {:>10.3e}  {:<44} {}\n",
            c.status, c.expected, c.max_residual, c.id, c.statement
        ));
        if let Some(e) = &c.error {
            out.push_str(&format!("    {e}\n"));
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "{} claims: {} pass, {} deviate, {} error; {} not as expected\n",
        s.total, s.pass, s.deviate, s.error, s.unexpected
    ));
    out
}
