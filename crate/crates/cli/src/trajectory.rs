use serde::Serialize;

use qbrach_core::cmat::Mat2;
use qbrach_core::families::FamilyRegistry;

use crate::config::RunConfig;
use crate::{CliError, SCHEMA_VERSION, TOOL_VERSION};

pub const CSV_HEADER: [&str; 12] = [
    "t", "re_u11", "im_u11", "re_u12", "im_u12", "re_u21", "im_u21", "re_u22", "im_u22", "bx",
    "by", "bz",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub u: [[f64; 2]; 4],
    /// Bloch vector of `U|0⟩`, not renormalised.
    pub bloch: [f64; 3],
}

impl TrajectoryRow {
    fn new(t: f64, u: &Mat2) -> Self {
        let (a, b) = (u.a11, u.a21);
        let cross = a.conj() * b;
        Self {
            t,
            u: u.entries().map(|z| [z.re, z.im]),
            bloch: [2.0 * cross.re, 2.0 * cross.im, a.norm_sqr() - b.norm_sqr()],
        }
    }

    pub fn bloch_norm(&self) -> f64 {
        self.bloch.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub schema: u32,
    pub tool_version: &'static str,
    pub config: RunConfig,
    pub family: String,
    pub rows: Vec<TrajectoryRow>,
}

/// Samples `U(t, t_start)` of the selected family on the configured grid.
pub fn run_trajectory(cfg: &RunConfig) -> Result<Trajectory, CliError> {
    let registry = FamilyRegistry::with_defaults(&cfg.optimal());
    let family = registry.get(&cfg.family).map_err(|_| {
        CliError::Config(format!(
            "unknown family `{}`; known: {}",
            cfg.family,
            registry.names().join(", ")
        ))
    })?;
    let rows = cfg
        .times()
        .into_iter()
        .map(|t| Ok(TrajectoryRow::new(t, &family.propagator(t, cfg.t_start)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Trajectory {
        schema: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        config: cfg.clone(),
        family: family.name().to_string(),
        rows,
    })
}

pub fn render_csv(traj: &Trajectory) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for row in &traj.rows {
        let mut fields = vec![row.t];
        fields.extend(row.u.iter().flatten());
        fields.extend(row.bloch);
        w.write_record(fields.iter().map(|x| (x + 0.0).to_string()))?;
    }
    crate::finish_csv(w)
}

pub fn render_text(traj: &Trajectory) -> String {
    let mut out = format!("family {}\n", traj.family);
    for r in &traj.rows {
        out.push_str(&format!(
            "t = {:>10.6}  bloch = ({:>9.6}, {:>9.6}, {:>9.6})  |b| = {:.6}\n",
            r.t,
            r.bloch[0],
            r.bloch[1],
            r.bloch[2],
            r.bloch_norm()
        ));
    }
    out
}
