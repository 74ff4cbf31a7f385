//! Identity claims and their verdicts.
//!
//! A claim is a pair of evaluation rules `t ↦ value` that are asserted to be
//! equal, a list of sample times, and the status an independent oracle run
//! established for it. [`verify_identity`] measures the largest discrepancy
//! over the samples; nothing is taken on trust.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::adjoint::Rot3;
use crate::cmat::{c, Mat2, MATRIX_TOL};
use crate::error::Result;

/// A claim that is expected to deviate must miss by more than this.
pub const DEVIATION_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClaimValue {
    Matrix(Mat2),
    Rotation(Rot3),
    Scalar(f64),
}

impl ClaimValue {
    fn kind(&self) -> &'static str {
        match self {
            ClaimValue::Matrix(_) => "matrix",
            ClaimValue::Rotation(_) => "rotation",
            ClaimValue::Scalar(_) => "scalar",
        }
    }

    /// Largest entrywise absolute difference.
    pub fn distance(&self, other: &ClaimValue) -> std::result::Result<f64, String> {
        match (self, other) {
            (ClaimValue::Matrix(a), ClaimValue::Matrix(b)) => Ok(a.max_abs_diff(b)),
            (ClaimValue::Rotation(a), ClaimValue::Rotation(b)) => Ok(a.max_abs_diff(b)),
            (ClaimValue::Scalar(a), ClaimValue::Scalar(b)) => Ok((a - b).abs()),
            (a, b) => Err(format!("cannot compare {} with {}", a.kind(), b.kind())),
        }
    }
}

impl From<Mat2> for ClaimValue {
    fn from(m: Mat2) -> Self {
        ClaimValue::Matrix(m)
    }
}

impl From<Rot3> for ClaimValue {
    fn from(r: Rot3) -> Self {
        ClaimValue::Rotation(r)
    }
}

impl From<f64> for ClaimValue {
    fn from(x: f64) -> Self {
        ClaimValue::Scalar(x)
    }
}

pub type EvalRule = Arc<dyn Fn(f64) -> Result<ClaimValue> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpectedStatus {
    Holds,
    Deviates,
    /// Reported but not gated.
    UnderTest,
}

impl ExpectedStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExpectedStatus::Holds => "holds",
            ExpectedStatus::Deviates => "deviates",
            ExpectedStatus::UnderTest => "under-test",
        }
    }
}

#[derive(Clone)]
pub struct IdentityClaim {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub lhs: EvalRule,
    pub rhs: EvalRule,
    pub sample_times: Vec<f64>,
    pub expected: ExpectedStatus,
    /// Overrides the run-wide tolerance (finite-difference or integrator claims).
    pub tolerance: Option<f64>,
    /// Whether a failing claim gets a column-swap/sign repair search.
    pub repairable: bool,
}

impl fmt::Debug for IdentityClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityClaim")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("samples", &self.sample_times.len())
            .field("expected", &self.expected)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl IdentityClaim {
    pub fn new<L, R, A, B>(id: &str, anchor: &str, statement: &str, lhs: L, rhs: R) -> Self
    where
        L: Fn(f64) -> Result<A> + Send + Sync + 'static,
        R: Fn(f64) -> Result<B> + Send + Sync + 'static,
        A: Into<ClaimValue>,
        B: Into<ClaimValue>,
    {
        Self {
            id: id.to_string(),
            anchor: anchor.to_string(),
            statement: statement.to_string(),
            lhs: Arc::new(move |t| lhs(t).map(Into::into)),
            rhs: Arc::new(move |t| rhs(t).map(Into::into)),
            sample_times: Vec::new(),
            expected: ExpectedStatus::Holds,
            tolerance: None,
            repairable: false,
        }
    }

    pub fn at(mut self, times: Vec<f64>) -> Self {
        self.sample_times = times;
        self
    }

    pub fn expect(mut self, expected: ExpectedStatus) -> Self {
        self.expected = expected;
        self
    }

    pub fn deviates(self) -> Self {
        self.expect(ExpectedStatus::Deviates)
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn repairable(mut self) -> Self {
        self.repairable = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Deviate,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Deviate => "deviate",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub id: String,
    pub anchor: String,
    pub statement: String,
    pub status: Status,
    pub expected: ExpectedStatus,
    pub max_residual: f64,
    /// Sample time of the largest residual, or of the failed evaluation.
    pub worst_time: Option<f64>,
    pub sample_count: usize,
    pub tolerance: f64,
    pub error: Option<String>,
}

impl Verdict {
    /// Whether the measured status agrees with the oracle-fixed expectation.
    pub fn matches_expectation(&self) -> bool {
        match self.expected {
            ExpectedStatus::Holds => self.status == Status::Pass,
            ExpectedStatus::Deviates => {
                self.status == Status::Deviate && self.max_residual > DEVIATION_FLOOR
            }
            ExpectedStatus::UnderTest => true,
        }
    }
}

/// Evaluates a claim at every sample time. The claim's own tolerance, when
/// set, takes precedence over `tol`.
pub fn verify_identity(claim: &IdentityClaim, tol: f64) -> Verdict {
    let tolerance = claim.tolerance.unwrap_or(tol);
    let mut verdict = Verdict {
        id: claim.id.clone(),
        anchor: claim.anchor.clone(),
        statement: claim.statement.clone(),
        status: Status::Pass,
        expected: claim.expected,
        max_residual: 0.0,
        worst_time: None,
        sample_count: claim.sample_times.len(),
        tolerance,
        error: None,
    };
    if claim.sample_times.is_empty() {
        verdict.status = Status::Error;
        verdict.error = Some("claim has no sample times".into());
        return verdict;
    }
    for &t in &claim.sample_times {
        let residual = (claim.lhs)(t)
            .and_then(|l| (claim.rhs)(t).map(|r| (l, r)))
            .map_err(|e| e.to_string())
            .and_then(|(l, r)| l.distance(&r));
        match residual {
            Ok(r) if r.is_finite() => {
                if r > verdict.max_residual || verdict.worst_time.is_none() {
                    verdict.max_residual = verdict.max_residual.max(r);
                    if r >= verdict.max_residual {
                        verdict.worst_time = Some(t);
                    }
                }
            }
            Ok(_) => {
                verdict.status = Status::Error;
                verdict.worst_time = Some(t);
                verdict.error = Some(format!("non-finite residual at t = {t}"));
                return verdict;
            }
            Err(e) => {
                verdict.status = Status::Error;
                verdict.worst_time = Some(t);
                verdict.error = Some(format!("evaluation failed at t = {t}: {e}"));
                return verdict;
            }
        }
    }
    if verdict.max_residual > tolerance {
        verdict.status = Status::Deviate;
    }
    verdict
}

/// Right-multiplications tried by [`repair_variant`], with their names.
fn column_operations() -> Vec<(Mat2, String)> {
    let mut ops = Vec::new();
    for swap in [false, true] {
        for (s1, s2) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            if !swap && s1 > 0.0 && s2 > 0.0 {
                continue;
            }
            let signs = Mat2::diag(c(s1, 0.0), c(s2, 0.0));
            let op = if swap { Mat2::pauli_x() * signs } else { signs };
            let sign = |s: f64| if s > 0.0 { '+' } else { '-' };
            let name = format!(
                "{}signs({}{})",
                if swap { "swap-columns," } else { "" },
                sign(s1),
                sign(s2)
            );
            ops.push((op, name));
        }
    }
    ops
}

/// Searches for the smallest edit of the right-hand side (a column swap
/// and/or column sign flips) that makes a deviating matrix claim hold. The
/// returned companion claim is informational only.
pub fn repair_variant(claim: &IdentityClaim, tol: f64) -> Option<IdentityClaim> {
    let tolerance = claim.tolerance.unwrap_or(tol);
    for (op, name) in column_operations() {
        let rhs = claim.rhs.clone();
        let repaired: EvalRule = Arc::new(move |t| match rhs(t)? {
            ClaimValue::Matrix(m) => Ok(ClaimValue::Matrix(m * op)),
            other => Ok(other),
        });
        let candidate = IdentityClaim {
            id: format!("{}~repaired", claim.id),
            anchor: claim.anchor.clone(),
            statement: format!("{} [rhs edited: {name}]", claim.statement),
            lhs: claim.lhs.clone(),
            rhs: repaired,
            sample_times: claim.sample_times.clone(),
            expected: ExpectedStatus::UnderTest,
            tolerance: claim.tolerance,
            repairable: false,
        };
        if verify_identity(&candidate, tolerance).status == Status::Pass {
            return Some(candidate);
        }
    }
    None
}

/// Verifies every claim (in parallel) and appends a repaired companion
/// verdict after each repairable claim that deviates. Output order follows
/// declaration order.
pub fn verify_all(claims: &[IdentityClaim], tol: f64) -> Vec<Verdict> {
    claims
        .par_iter()
        .map(|claim| {
            let verdict = verify_identity(claim, tol);
            let mut out = Vec::with_capacity(2);
            let repair = if claim.repairable && verdict.status == Status::Deviate {
                repair_variant(claim, tol)
            } else {
                None
            };
            out.push(verdict);
            if let Some(fixed) = repair {
                out.push(verify_identity(&fixed, tol));
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Default tolerance for claims without an override.
pub const DEFAULT_CLAIM_TOL: f64 = MATRIX_TOL;
