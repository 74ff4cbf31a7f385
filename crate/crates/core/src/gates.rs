//! Matching standard single-qubit gates with one-parameter propagator
//! families, up to global phase.
//!
//! Every closed-form family has the shape `e^{iφ}(cos φ I + i sin φ n·σ)`
//! for a fixed axis `n`, so a single family reaches only rotations about one
//! axis. Gates off those axes (the Hadamard among the standard targets) are
//! reported with the best fidelity found.

use std::f64::consts::TAU;

use crate::cmat::{c, gate_fidelity, Mat2};
use crate::error::{Error, Result};
use crate::frames::{transformed_propagator_at_phase, v_matrix, FrameLabel};

const GOLDEN: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateTarget {
    pub name: &'static str,
    pub matrix: Mat2,
}

pub fn standard_targets() -> Vec<GateTarget> {
    vec![
        GateTarget {
            name: "Pauli-X",
            matrix: Mat2::pauli_x(),
        },
        GateTarget {
            name: "Pauli-Z",
            matrix: Mat2::pauli_z(),
        },
        GateTarget {
            name: "Hadamard",
            matrix: v_matrix(),
        },
        GateTarget {
            name: "S-gate",
            matrix: Mat2::diag(c(1.0, 0.0), c(0.0, 1.0)),
        },
    ]
}

/// Family names as reported; the untransformed family is the eigenframe one.
pub fn family_name(label: FrameLabel) -> &'static str {
    match label {
        FrameLabel::Identity => "eigenframe",
        other => other.as_str(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateMatch {
    pub gate: String,
    pub family: String,
    /// In `[0, 2π)`.
    pub phi: f64,
    pub fidelity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GateReport {
    pub gate: String,
    pub per_family: Vec<GateMatch>,
    pub best: GateMatch,
    /// Every family whose fidelity is within [`TIE_TOL`] of the best.
    pub ties: Vec<String>,
}

pub const TIE_TOL: f64 = 1e-12;

fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo < 1e-13 {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Grid search over `φ = 2πk/samples` followed by golden-section refinement
/// in the neighbouring grid cells.
pub fn match_gate(target: &GateTarget, label: FrameLabel, samples: usize) -> Result<GateMatch> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 grid samples, got {samples}"
        )));
    }
    let fidelity = |phi: f64| -> Result<f64> {
        gate_fidelity(
            &transformed_propagator_at_phase(label, phi)?,
            &target.matrix,
        )
    };
    let step = TAU / samples as f64;
    let mut best = (0.0, f64::NEG_INFINITY);
    for k in 0..samples {
        let phi = k as f64 * step;
        let f = fidelity(phi)?;
        if f > best.1 {
            best = (phi, f);
        }
    }
    let (phi, f) = golden_section_max(
        |x| fidelity(x).unwrap_or(f64::NEG_INFINITY),
        best.0 - step,
        best.0 + step,
    );
    let (phi, f) = if f >= best.1 { (phi, f) } else { best };
    Ok(GateMatch {
        gate: target.name.to_string(),
        family: family_name(label).to_string(),
        phi: phi.rem_euclid(TAU),
        fidelity: f,
    })
}

/// Matches every target against the six unitary closed-form families. Ties
/// go to the family listed first.
pub fn run_gate_search(targets: &[GateTarget], samples: usize) -> Result<Vec<GateReport>> {
    targets
        .iter()
        .map(|target| {
            let per_family = FrameLabel::PROPAGATOR_FRAMES
                .iter()
                .map(|&label| match_gate(target, label, samples))
                .collect::<Result<Vec<_>>>()?;
            let best = per_family
                .iter()
                .fold(None::<&GateMatch>, |acc, m| match acc {
                    Some(a) if a.fidelity >= m.fidelity - TIE_TOL => Some(a),
                    _ => Some(m),
                })
                .cloned()
                .ok_or_else(|| Error::InvalidArgument("no families to search".into()))?;
            let ties = per_family
                .iter()
                .filter(|m| m.fidelity >= best.fidelity - TIE_TOL)
                .map(|m| m.family.clone())
                .collect();
            Ok(GateReport {
                gate: target.name.to_string(),
                per_family,
                best,
                ties,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUARTER_TURN: f64 = std::f64::consts::FRAC_PI_2;

    fn target(name: &str) -> GateTarget {
        standard_targets()
            .into_iter()
            .find(|t| t.name == name)
            .unwrap()
    }

    #[test]
    fn pauli_z_from_eigenframe() {
        let m = match_gate(&target("Pauli-Z"), FrameLabel::Identity, 21).unwrap();
        assert!(m.fidelity >= 1.0 - 1e-10);
        // φ = π/2 and 3π/2 are equivalent up to phase.
        assert!(
            (m.phi - QUARTER_TURN).abs() < 1e-6 || (m.phi - 3.0 * QUARTER_TURN).abs() < 1e-6,
            "{}",
            m.phi
        );
    }

    #[test]
    fn pauli_x_from_hadamard_frame() {
        let m = match_gate(&target("Pauli-X"), FrameLabel::V, 21).unwrap();
        assert!(m.fidelity >= 1.0 - 1e-10);
        assert!((m.phi - QUARTER_TURN).abs() < 1e-6 || (m.phi - 3.0 * QUARTER_TURN).abs() < 1e-6);
    }

    #[test]
    fn s_gate_from_eigenframe() {
        let m = match_gate(&target("S-gate"), FrameLabel::Identity, 16).unwrap();
        assert!(m.fidelity >= 1.0 - 1e-10);
    }

    #[test]
    fn hadamard_not_reached_by_one_family() {
        let reports = run_gate_search(&[target("Hadamard")], 32).unwrap();
        let best = &reports[0].best;
        assert!(best.fidelity < 1.0 - 1e-3);
        assert!(
            (best.fidelity - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8,
            "{}",
            best.fidelity
        );
    }

    #[test]
    fn report_covers_all_families() {
        let reports = run_gate_search(&standard_targets(), 12).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.per_family.len() == 6));
        assert!(match_gate(&target("Pauli-X"), FrameLabel::V, 1).is_err());
        let x = &reports[0];
        assert_eq!(x.ties, ["S-inv", "V"]);
    }
}
