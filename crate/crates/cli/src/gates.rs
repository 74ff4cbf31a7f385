use serde::Serialize;

use qbrach_core::gates::{run_gate_search, standard_targets, GateMatch};

use crate::config::RunConfig;
use crate::{CliError, SCHEMA_VERSION, TOOL_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchRecord {
    pub family: String,
    pub phi: f64,
    pub fidelity: f64,
}

impl From<&GateMatch> for MatchRecord {
    fn from(m: &GateMatch) -> Self {
        Self {
            family: m.family.clone(),
            phi: m.phi,
            fidelity: m.fidelity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateRecord {
    pub gate: String,
    pub best: MatchRecord,
    pub ties: Vec<String>,
    pub per_family: Vec<MatchRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GatesReport {
    pub schema: u32,
    pub tool_version: &'static str,
    pub config: RunConfig,
    pub gates: Vec<GateRecord>,
}

impl GatesReport {
    pub fn gate(&self, name: &str) -> Option<&GateRecord> {
        self.gates.iter().find(|g| g.gate == name)
    }
}

pub fn run_gates(cfg: &RunConfig) -> Result<GatesReport, CliError> {
    let reports = run_gate_search(&standard_targets(), cfg.samples)?;
    Ok(GatesReport {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        config: cfg.clone(),
        gates: reports
            .iter()
            .map(|r| GateRecord {
                gate: r.gate.clone(),
                best: (&r.best).into(),
                ties: r.ties.clone(),
                per_family: r.per_family.iter().map(MatchRecord::from).collect(),
            })
            .collect(),
    })
}

pub fn render_csv(report: &GatesReport) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["gate", "family", "phi", "fidelity", "best"])?;
    for g in &report.gates {
        for m in &g.per_family {
            let best = m.family == g.best.family;
            w.write_record([
                g.gate.clone(),
                m.family.clone(),
                m.phi.to_string(),
                m.fidelity.to_string(),
                best.to_string(),
            ])?;
        }
    }
    crate::finish_csv(w)
}

pub fn render_text(report: &GatesReport) -> String {
    report
        .gates
        .iter()
        .map(|g| {
            format!(
                "{:<9} best {:<10} phi = {:.12}  fidelity = {:.15}  reached by: {}\n",
                g.gate,
                g.best.family,
                g.best.phi,
                g.best.fidelity,
                g.ties.join(", ")
            )
        })
        .collect()
}
