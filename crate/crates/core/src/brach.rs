//! The quantum brachistochrone for a single qubit.
//!
//! A time-optimal control problem is a pair of Hermitian generators, the
//! Hamiltonian `H(t)` and the constraint `F(t)`, obeying
//! `i d/dt (H + F) = [H, F]` together with `Tr(HF) = 0` and
//! `Tr(H²)/2 = k`. For `F = Ω σz` the solution is a Hamiltonian rotating in
//! the x–y plane at frequency `2ω`; it is a solution exactly when `Ω = ω`.
//!
//! Three different "propagators" are associated with that Hamiltonian and
//! they are kept apart here on purpose:
//!
//! * [`eigenframe_propagator`]: `W(t)W†(s)` built from the eigenmatrix. It
//!   transports `H(s)` to `H(t)` but is the propagator of the constant
//!   generator `−ω(I + σz)`, not of `H`.
//! * [`optimal_time_ordered_propagator`]: the genuine solution of
//!   `i dU/dt = H(t) U`, in closed form via the co-rotating frame.
//! * the naive `exp(−i∫H)`, see [`crate::propnum::naive_integral_exponential`].

use crate::cmat::{c, cis, commutator, expm2, Complex, Mat2, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::generator::SharedGenerator;

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// A Hamiltonian/constraint pair together with the isotropy constant `k`.
#[derive(Debug, Clone)]
pub struct ControlSystem {
    pub hamiltonian: SharedGenerator,
    pub constraint: SharedGenerator,
    pub isotropy: f64,
}

impl ControlSystem {
    pub fn new(hamiltonian: SharedGenerator, constraint: SharedGenerator, isotropy: f64) -> Self {
        Self {
            hamiltonian,
            constraint,
            isotropy,
        }
    }

    /// Checks Hermiticity of both generators at the given times.
    pub fn check_hermitian(&self, times: &[f64]) -> Result<()> {
        for &t in times {
            self.hamiltonian
                .at(t)
                .ensure_hermitian(crate::cmat::HERMITIAN_TOL)?;
            self.constraint
                .at(t)
                .ensure_hermitian(crate::cmat::HERMITIAN_TOL)?;
        }
        Ok(())
    }
}

/// Parameters of the optimal qubit Hamiltonian.
///
/// `constraint_strength` is kept separate from `frame_frequency` so that
/// off-solution systems (`Ω ≠ ω`) can be represented.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalQubitParams {
    pub amplitude: f64,
    pub frame_frequency: f64,
    pub constraint_strength: f64,
}

impl OptimalQubitParams {
    /// The solution branch `Ω = ω`.
    pub fn on_solution(amplitude: f64, frame_frequency: f64) -> Self {
        Self {
            amplitude,
            frame_frequency,
            constraint_strength: frame_frequency,
        }
    }

    /// `φ = ω(t − s)`.
    pub fn phase(&self, t: f64, s: f64) -> f64 {
        self.frame_frequency * (t - s)
    }
}

/// Pure qubit state `c0|0⟩ + c1|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    pub c0: Complex,
    pub c1: Complex,
}

impl QubitState {
    pub fn new(c0: Complex, c1: Complex) -> Result<Self> {
        let norm = c0.norm_sqr() + c1.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { c0, c1 })
    }

    pub fn ground() -> Self {
        Self { c0: ONE, c1: ZERO }
    }

    pub fn excited() -> Self {
        Self { c0: ZERO, c1: ONE }
    }

    fn apply(&self, m: &Mat2) -> (Complex, Complex) {
        (
            m.a11 * self.c0 + m.a12 * self.c1,
            m.a21 * self.c0 + m.a22 * self.c1,
        )
    }

    fn expectation(&self, m: &Mat2) -> Complex {
        let (a, b) = self.apply(m);
        self.c0.conj() * a + self.c1.conj() * b
    }
}

/// Residual of the brachistochrone equation, `i d/dt(H+F) − [H, F]`, with a
/// second-order central difference of step `h`.
pub fn brach_residual(sys: &ControlSystem, t: f64, h: f64) -> Result<Mat2> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "difference step must be positive, got {h}"
        )));
    }
    let total = |x: f64| sys.hamiltonian.at(x) + sys.constraint.at(x);
    let derivative = (total(t + h) - total(t - h)) * (1.0 / (2.0 * h));
    let bracket = commutator(&sys.hamiltonian.at(t), &sys.constraint.at(t));
    Ok(derivative * I - bracket)
}

/// `Tr(HF)` and `Tr(H²)/2` at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceConstraints {
    pub orthogonality: f64,
    pub isotropy: f64,
}

pub fn trace_constraints(sys: &ControlSystem, t: f64) -> TraceConstraints {
    let h = sys.hamiltonian.at(t);
    let f = sys.constraint.at(t);
    TraceConstraints {
        orthogonality: (h * f).trace().re,
        isotropy: 0.5 * (h * h).trace().re,
    }
}

/// `ΔE = √(⟨H²⟩ − ⟨H⟩²)`.
pub fn energy_dispersion(psi: &QubitState, h: &Mat2) -> Result<f64> {
    h.ensure_hermitian(crate::cmat::HERMITIAN_TOL)?;
    let mean = psi.expectation(h).re;
    let second = psi.expectation(&(*h * *h)).re;
    let radicand = second - mean * mean;
    if radicand < -1e-12 {
        return Err(Error::NegativeVariance { radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// `R [[0, e^{2iωt}], [e^{−2iωt}, 0]]`.
pub fn optimal_hamiltonian(p: &OptimalQubitParams, t: f64) -> Mat2 {
    let rot = cis(2.0 * p.frame_frequency * t);
    Mat2::new(ZERO, rot, rot.conj(), ZERO) * p.amplitude
}

/// The optimal Hamiltonian with constraint `Ω σz` and isotropy `k = R²`.
pub fn optimal_system(p: &OptimalQubitParams) -> ControlSystem {
    let params = *p;
    ControlSystem::new(
        SharedGenerator::new(move |t: f64| optimal_hamiltonian(&params, t)),
        SharedGenerator::constant(Mat2::pauli_z() * p.constraint_strength),
        p.amplitude * p.amplitude,
    )
}

/// Eigenmatrix `(1/√2)[[e^{2iωt}, −e^{2iωt}], [1, 1]]`; `W† H W = R σz`.
pub fn optimal_eigenmatrix(p: &OptimalQubitParams, t: f64) -> Mat2 {
    let rot = cis(2.0 * p.frame_frequency * t);
    Mat2::new(rot, -rot, ONE, ONE) * std::f64::consts::FRAC_1_SQRT_2
}

/// `W(t) W†(s) = diag(e^{2iφ}, 1)`, `φ = ω(t − s)`.
pub fn eigenframe_propagator(p: &OptimalQubitParams, t: f64, s: f64) -> Mat2 {
    optimal_eigenmatrix(p, t) * optimal_eigenmatrix(p, s).dagger()
}

/// `e^{iφ} diag(e^{iφ}, e^{−iφ})` written out directly.
pub fn eigenframe_propagator_closed_form(phi: f64) -> Mat2 {
    Mat2::diag(cis(phi), cis(-phi)) * cis(phi)
}

/// `i dW/dt − H W`, by central difference.
pub fn eigenmatrix_ode_residual(p: &OptimalQubitParams, t: f64, h: f64) -> Result<Mat2> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "difference step must be positive, got {h}"
        )));
    }
    let dw = (optimal_eigenmatrix(p, t + h) - optimal_eigenmatrix(p, t - h)) * (1.0 / (2.0 * h));
    Ok(dw * I - optimal_hamiltonian(p, t) * optimal_eigenmatrix(p, t))
}

/// Exact solution of `i dU/dt = H_opt(t) U`, `U(s, s) = I`.
///
/// `H_opt(t) = e^{iωtσz} Rσx e^{−iωtσz}`, so in the co-rotating frame the
/// generator is the constant `Rσx + ωσz` and
/// `U(t, 0) = e^{iωtσz} exp(−it(Rσx + ωσz))`.
pub fn optimal_time_ordered_propagator(p: &OptimalQubitParams, t: f64, s: f64) -> Mat2 {
    let from_zero = |x: f64| {
        let frame = Mat2::diag(cis(p.frame_frequency * x), cis(-p.frame_frequency * x));
        let rotating = Mat2::pauli_x() * p.amplitude + Mat2::pauli_z() * p.frame_frequency;
        frame * expm2(&(rotating * c(0.0, -x)))
    };
    from_zero(t) * from_zero(s).dagger()
}
