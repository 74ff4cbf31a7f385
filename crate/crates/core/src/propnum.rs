//! Numerical propagators used as independent oracles.
//!
//! [`schrodinger_propagate`] composes midpoint exponentials
//! `exp(−i h H(t + h/2))`. Every substep is unitary to rounding, so
//! unitarity drift reflects accumulated round-off only. Steps are controlled
//! by step doubling: one step of size `h` is compared with two of size `h/2`
//! and the step is halved until the discrepancy is below the tolerance.

use crate::cmat::{c, expm2, trace_overlap, Mat2};
use crate::error::{Error, Result};
use crate::generator::Generator;

/// Adaptive integrator settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    /// `None` means `(t1 − t0)/256`.
    pub initial_step: Option<f64>,
    /// Bound on the local (per-step) error estimate.
    pub tolerance: f64,
    /// Bound on the number of attempted steps.
    pub max_steps: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            initial_step: None,
            tolerance: 1e-10,
            max_steps: 1_000_000,
        }
    }
}

impl IntegratorConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "integrator tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if let Some(h) = self.initial_step {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "initial step must be positive, got {h}"
                )));
            }
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidArgument(
                "max_steps must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationResult {
    pub propagator: Mat2,
    /// `max |UU† − I|` of the returned propagator.
    pub unitarity_drift: f64,
    pub steps_taken: usize,
    /// `false` when `max_steps` ran out; `propagator` then covers `[t0, t_reached]`.
    pub accepted: bool,
    pub t_reached: f64,
}

fn midpoint_step(h_gen: &dyn Generator, t: f64, h: f64) -> Mat2 {
    expm2(&(h_gen.at(t + 0.5 * h) * c(0.0, -h)))
}

/// Solves `i dU/dt = H(t) U`, `U(t0) = I`, on `[t0, t1]` (either direction).
pub fn schrodinger_propagate(
    h_gen: &dyn Generator,
    t0: f64,
    t1: f64,
    cfg: &IntegratorConfig,
) -> Result<PropagationResult> {
    cfg.validate()?;
    if !(t0.is_finite() && t1.is_finite()) {
        return Err(Error::NonFinite {
            context: "integration interval",
        });
    }
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(PropagationResult {
            propagator: Mat2::identity(),
            unitarity_drift: 0.0,
            steps_taken: 0,
            accepted: true,
            t_reached: t1,
        });
    }
    let dir = span.signum();
    let length = span.abs();
    let min_step = length * f64::EPSILON * 16.0;

    let mut u = Mat2::identity();
    let mut done = 0.0_f64;
    let mut step = cfg.initial_step.unwrap_or(length / 256.0).min(length);
    let mut attempts = 0usize;
    let mut accepted_steps = 0usize;

    while done < length {
        if attempts >= cfg.max_steps {
            return Ok(PropagationResult {
                propagator: u,
                unitarity_drift: u.unitarity_residual(),
                steps_taken: accepted_steps,
                accepted: false,
                t_reached: t0 + dir * done,
            });
        }
        attempts += 1;

        let last = step >= length - done;
        let h = if last { length - done } else { step };
        let t = t0 + dir * done;
        let full = midpoint_step(h_gen, t, dir * h);
        let first = midpoint_step(h_gen, t, dir * h * 0.5);
        let second = midpoint_step(h_gen, t + dir * h * 0.5, dir * h * 0.5);
        let halves = second * first;
        let err = full.max_abs_diff(&halves);
        if !err.is_finite() {
            return Err(Error::NonFinite {
                context: "propagator substep",
            });
        }

        if err <= cfg.tolerance || h <= min_step {
            u = halves * u;
            done = if last { length } else { done + h };
            accepted_steps += 1;
            // Local error scales as h³: doubling is safe well below tolerance.
            if err < cfg.tolerance / 16.0 {
                step = h * 2.0;
            }
        } else {
            step = h * 0.5;
        }
    }

    Ok(PropagationResult {
        propagator: u,
        unitarity_drift: u.unitarity_residual(),
        steps_taken: accepted_steps,
        accepted: true,
        t_reached: t1,
    })
}

/// Fixed-step midpoint-exponential product with `steps` equal substeps.
pub fn midpoint_product(h_gen: &dyn Generator, t0: f64, t1: f64, steps: usize) -> Result<Mat2> {
    if steps == 0 {
        return Err(Error::InvalidArgument("need at least one step".into()));
    }
    let h = (t1 - t0) / steps as f64;
    Ok((0..steps).fold(Mat2::identity(), |u, k| {
        midpoint_step(h_gen, t0 + k as f64 * h, h) * u
    }))
}

/// Composite Simpson approximation of `∫_{t0}^{t1} H(τ) dτ`. An odd interval
/// count is rounded up.
pub fn simpson_integral(h_gen: &dyn Generator, t0: f64, t1: f64, intervals: usize) -> Result<Mat2> {
    if intervals < 2 {
        return Err(Error::InvalidArgument(format!(
            "quadrature needs at least 2 intervals, got {intervals}"
        )));
    }
    let n = intervals + intervals % 2;
    let h = (t1 - t0) / n as f64;
    let mut sum = h_gen.at(t0) + h_gen.at(t1);
    for k in 1..n {
        let weight = if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += h_gen.at(t0 + k as f64 * h) * weight;
    }
    Ok(sum * (h / 3.0))
}

/// `exp(−i ∫ H dτ)` with the integral by composite Simpson quadrature.
/// Equals the time-ordered propagator only when the `H(t)` commute.
pub fn naive_integral_exponential(
    h_gen: &dyn Generator,
    t0: f64,
    t1: f64,
    quad_steps: usize,
) -> Result<Mat2> {
    let integral = simpson_integral(h_gen, t0, t1, quad_steps)?;
    Ok(expm2(&(integral * c(0.0, -1.0))))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorComparison {
    pub max_abs_diff: f64,
    /// `1 − |Tr(A†B)|/2`.
    pub phase_insensitive_distance: f64,
}

pub fn compare_propagators(a: &Mat2, b: &Mat2) -> PropagatorComparison {
    PropagatorComparison {
        max_abs_diff: a.max_abs_diff(b),
        phase_insensitive_distance: 1.0 - trace_overlap(a, b),
    }
}
