//! Constant frame transformations of the brachistochrone.
//!
//! Conjugating both the Hamiltonian and the constraint by a constant
//! invertible matrix `Q` maps a solution of the brachistochrone equations to
//! another solution with the same trace constraints. The catalog holds the
//! unitary transforms used throughout: `T = exp(−iπσx/4)`, the `S` matrix,
//! the Hadamard `V`, the phase matrix `Z` and `Y = Z·S`, plus inverses.

mod ledger;

use std::fmt;
use std::str::FromStr;

use crate::brach::{eigenframe_propagator, ControlSystem, OptimalQubitParams};
use crate::cmat::{c, cis, pauli_decompose, Mat2, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::generator::SharedGenerator;

pub use ledger::identity_ledger;
pub(crate) use ledger::partner_time;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameLabel {
    Identity,
    T,
    TInv,
    S,
    SInv,
    V,
    Z,
    ZInv,
    Y,
    YInv,
}

impl FrameLabel {
    pub const ALL: [FrameLabel; 10] = [
        FrameLabel::Identity,
        FrameLabel::T,
        FrameLabel::TInv,
        FrameLabel::S,
        FrameLabel::SInv,
        FrameLabel::V,
        FrameLabel::Z,
        FrameLabel::ZInv,
        FrameLabel::Y,
        FrameLabel::YInv,
    ];

    /// Transforms with closed-form propagators and constraint images.
    pub const PROPAGATOR_FRAMES: [FrameLabel; 6] = [
        FrameLabel::Identity,
        FrameLabel::T,
        FrameLabel::TInv,
        FrameLabel::S,
        FrameLabel::SInv,
        FrameLabel::V,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FrameLabel::Identity => "1",
            FrameLabel::T => "T",
            FrameLabel::TInv => "T-inv",
            FrameLabel::S => "S",
            FrameLabel::SInv => "S-inv",
            FrameLabel::V => "V",
            FrameLabel::Z => "Z",
            FrameLabel::ZInv => "Z-inv",
            FrameLabel::Y => "Y",
            FrameLabel::YInv => "Y-inv",
        }
    }
}

impl fmt::Display for FrameLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FrameLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FrameLabel::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// A constant invertible matrix and its exact inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameTransform {
    pub label: FrameLabel,
    pub forward: Mat2,
    pub inverse: Mat2,
}

impl FrameTransform {
    fn unitary(label: FrameLabel, forward: Mat2) -> Self {
        Self {
            label,
            forward,
            inverse: forward.dagger(),
        }
    }

    pub fn inverted(&self, label: FrameLabel) -> Self {
        Self {
            label,
            forward: self.inverse,
            inverse: self.forward,
        }
    }
}

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub fn t_matrix() -> Mat2 {
    Mat2::new(ONE, -I, -I, ONE) * H
}

pub fn s_matrix() -> Mat2 {
    Mat2::new(I, -I, c(-1.0, 0.0), c(-1.0, 0.0)) * H
}

pub fn v_matrix() -> Mat2 {
    Mat2::from_real(1.0, 1.0, 1.0, -1.0) * H
}

pub fn z_matrix() -> Mat2 {
    Mat2::diag(-I, ONE)
}

pub fn y_matrix() -> Mat2 {
    z_matrix() * s_matrix()
}

pub fn frame(label: FrameLabel) -> FrameTransform {
    use FrameLabel::*;
    match label {
        Identity => FrameTransform::unitary(Identity, Mat2::identity()),
        T => FrameTransform::unitary(T, t_matrix()),
        S => FrameTransform::unitary(S, s_matrix()),
        V => FrameTransform::unitary(V, v_matrix()),
        Z => FrameTransform::unitary(Z, z_matrix()),
        Y => FrameTransform::unitary(Y, y_matrix()),
        TInv => frame(T).inverted(TInv),
        SInv => frame(S).inverted(SInv),
        ZInv => frame(Z).inverted(ZInv),
        YInv => frame(Y).inverted(YInv),
    }
}

/// Every catalog transform, in [`FrameLabel::ALL`] order.
pub fn catalog() -> Vec<FrameTransform> {
    FrameLabel::ALL.into_iter().map(frame).collect()
}

pub fn lookup(label: &str) -> Result<FrameTransform> {
    label.parse().map(frame)
}

/// `Q M Q⁻¹`.
pub fn conjugate(q: &FrameTransform, m: &Mat2) -> Mat2 {
    q.forward * *m * q.inverse
}

/// Conjugates both generators; `k` is unchanged.
pub fn transform_system(q: &FrameTransform, sys: &ControlSystem) -> ControlSystem {
    let (qh, qf) = (*q, *q);
    let h = sys.hamiltonian.clone();
    let f = sys.constraint.clone();
    ControlSystem::new(
        SharedGenerator::new(move |t: f64| conjugate(&qh, &h.at(t))),
        SharedGenerator::new(move |t: f64| conjugate(&qf, &f.at(t))),
        sys.isotropy,
    )
}

fn require_propagator_frame(label: FrameLabel) -> Result<()> {
    if FrameLabel::PROPAGATOR_FRAMES.contains(&label) {
        Ok(())
    } else {
        Err(Error::UnknownLabel(format!(
            "{label} (no closed-form propagator)"
        )))
    }
}

/// Closed-form transformed propagator `U_Q(φ)`, `φ = ω(t − s)`.
pub fn transformed_propagator_at_phase(label: FrameLabel, phi: f64) -> Result<Mat2> {
    require_propagator_frame(label)?;
    let (sn, cs) = phi.sin_cos();
    let (cs, sn_re, sn_im) = (c(cs, 0.0), c(sn, 0.0), c(0.0, sn));
    let body = match label {
        FrameLabel::Identity => Mat2::diag(cis(phi), cis(-phi)),
        FrameLabel::T => Mat2::new(cs, -sn_re, sn_re, cs),
        FrameLabel::TInv | FrameLabel::S => Mat2::new(cs, sn_re, -sn_re, cs),
        FrameLabel::SInv => Mat2::new(cs, -sn_im, -sn_im, cs),
        FrameLabel::V => Mat2::new(cs, sn_im, sn_im, cs),
        _ => unreachable!(),
    };
    Ok(body * cis(phi))
}

pub fn transformed_propagator(
    label: FrameLabel,
    p: &OptimalQubitParams,
    t: f64,
    s: f64,
) -> Result<Mat2> {
    transformed_propagator_at_phase(label, p.phase(t, s))
}

/// `Q·W(t)W†(s)·Q⁻¹`, the conjugation route to the same propagator.
pub fn conjugated_eigenframe_propagator(
    q: &FrameTransform,
    p: &OptimalQubitParams,
    t: f64,
    s: f64,
) -> Mat2 {
    conjugate(q, &eigenframe_propagator(p, t, s))
}

/// Closed-form transformed Hamiltonians `H_Q(t)` for the propagator frames.
pub fn transformed_hamiltonian(label: FrameLabel, p: &OptimalQubitParams, t: f64) -> Result<Mat2> {
    require_propagator_frame(label)?;
    let (sn, cs) = (2.0 * p.frame_frequency * t).sin_cos();
    let m = match label {
        FrameLabel::Identity => {
            let rot = cis(2.0 * p.frame_frequency * t);
            Mat2::new(ZERO, rot, rot.conj(), ZERO)
        }
        FrameLabel::T => Mat2::from_real(-sn, cs, cs, sn),
        FrameLabel::TInv => Mat2::from_real(sn, cs, cs, -sn),
        FrameLabel::S => Mat2::from_real(-cs, sn, sn, cs),
        FrameLabel::SInv => Mat2::new(c(-sn, 0.0), c(0.0, cs), c(0.0, -cs), c(sn, 0.0)),
        FrameLabel::V => Mat2::new(c(cs, 0.0), c(0.0, -sn), c(0.0, sn), c(-cs, 0.0)),
        _ => unreachable!(),
    };
    Ok(m * p.amplitude)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub fn matrix(&self) -> Mat2 {
        match self {
            PauliAxis::X => Mat2::pauli_x(),
            PauliAxis::Y => Mat2::pauli_y(),
            PauliAxis::Z => Mat2::pauli_z(),
        }
    }
}

/// `±σ_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pub negative: bool,
    pub axis: PauliAxis,
}

impl SignedPauli {
    pub fn matrix(&self, strength: f64) -> Mat2 {
        self.axis.matrix() * if self.negative { -strength } else { strength }
    }

    /// Identifies `M` as `±λ σ_axis`; `None` when `M` is not of that form.
    pub fn identify(m: &Mat2, tol: f64) -> Option<(SignedPauli, f64)> {
        let p = pauli_decompose(m);
        let parts = [
            (PauliAxis::X, p.ax),
            (PauliAxis::Y, p.ay),
            (PauliAxis::Z, p.az),
        ];
        let (axis, coeff) = parts
            .into_iter()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))?;
        let rest = p.a0.norm()
            + parts
                .iter()
                .filter(|(a, _)| *a != axis)
                .map(|(_, z)| z.norm())
                .sum::<f64>();
        if rest > tol || coeff.im.abs() > tol || coeff.re == 0.0 {
            return None;
        }
        Some((
            SignedPauli {
                negative: coeff.re < 0.0,
                axis,
            },
            coeff.re.abs(),
        ))
    }
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "+" };
        let axis = match self.axis {
            PauliAxis::X => "x",
            PauliAxis::Y => "y",
            PauliAxis::Z => "z",
        };
        write!(f, "{sign}sigma_{axis}")
    }
}

/// Image of the constraint `Ω σz` under each propagator frame.
pub fn constraint_image(label: FrameLabel) -> Result<SignedPauli> {
    require_propagator_frame(label)?;
    let (negative, axis) = match label {
        FrameLabel::Identity => (false, PauliAxis::Z),
        FrameLabel::T => (true, PauliAxis::Y),
        FrameLabel::TInv => (false, PauliAxis::Y),
        FrameLabel::S => (false, PauliAxis::Y),
        FrameLabel::SInv => (true, PauliAxis::X),
        FrameLabel::V => (false, PauliAxis::X),
        _ => unreachable!(),
    };
    Ok(SignedPauli { negative, axis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brach::{brach_residual, optimal_hamiltonian, optimal_system, trace_constraints};

    #[test]
    fn catalog_is_unitary_and_inverse_exact() {
        for q in catalog() {
            assert!(
                (q.forward * q.inverse).approx_eq(&Mat2::identity(), 1e-14),
                "{}",
                q.label
            );
            assert!(
                (q.inverse * q.forward).approx_eq(&Mat2::identity(), 1e-14),
                "{}",
                q.label
            );
            assert!(q.forward.unitarity_residual() < 1e-14, "{}", q.label);
        }
    }

    #[test]
    fn catalog_examples() {
        let v = v_matrix();
        assert!(v.approx_eq(&v.dagger(), 0.0));
        assert!((v * v).approx_eq(&Mat2::identity(), 1e-15));
        let y = y_matrix();
        assert!((y * y).approx_eq(&Mat2::identity(), 1e-15));
        assert!((t_matrix() * t_matrix().dagger()).approx_eq(&Mat2::identity(), 1e-15));
    }

    #[test]
    fn labels_round_trip() {
        for l in FrameLabel::ALL {
            assert_eq!(l.as_str().parse::<FrameLabel>().unwrap(), l);
        }
        assert!(matches!(
            "W".parse::<FrameLabel>(),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn conjugation_examples() {
        let t = frame(FrameLabel::T);
        assert!(conjugate(&t, &Mat2::pauli_z()).approx_eq(&(Mat2::pauli_y() * -1.0), 1e-15));
        let m = Mat2::new(c(0.1, 0.2), c(1.0, -3.0), c(0.5, 0.0), c(-2.0, 1.0));
        assert_eq!(conjugate(&frame(FrameLabel::Identity), &m), m);
        let v = frame(FrameLabel::V);
        assert!(conjugate(&v, &Mat2::pauli_z()).approx_eq(&Mat2::pauli_x(), 1e-15));
    }

    #[test]
    fn transformed_system_preserves_structure() {
        let p = OptimalQubitParams::on_solution(1.2, 0.9);
        let sys = optimal_system(&p);
        let tsys = transform_system(&frame(FrameLabel::T), &sys);
        let t = 0.37;
        let (a, b) = (trace_constraints(&sys, t), trace_constraints(&tsys, t));
        assert!((a.orthogonality - b.orthogonality).abs() < 1e-14);
        assert!((a.isotropy - b.isotropy).abs() < 1e-14);
        assert!(brach_residual(&tsys, t, 1e-4).unwrap().max_abs() < 1e-6);

        let (sn, cs) = (2.0 * 0.9 * t).sin_cos();
        let expected = Mat2::from_real(-sn, cs, cs, sn) * 1.2;
        assert!(tsys.hamiltonian.at(t).approx_eq(&expected, 1e-14));

        let same = transform_system(&frame(FrameLabel::Identity), &sys);
        assert_eq!(same.hamiltonian.at(t), optimal_hamiltonian(&p, t));
    }

    #[test]
    fn transformed_propagator_examples() {
        for l in FrameLabel::PROPAGATOR_FRAMES {
            assert!(transformed_propagator_at_phase(l, 0.0)
                .unwrap()
                .approx_eq(&Mat2::identity(), 0.0));
        }
        let uv =
            transformed_propagator_at_phase(FrameLabel::V, std::f64::consts::FRAC_PI_2).unwrap();
        assert!(uv.approx_eq(&(Mat2::pauli_x() * -1.0), 1e-15));
        assert!(transformed_propagator_at_phase(FrameLabel::Z, 0.3).is_err());
    }

    #[test]
    fn constraint_table_matches_conjugation() {
        for l in FrameLabel::PROPAGATOR_FRAMES {
            let image = conjugate(&frame(l), &(Mat2::pauli_z() * 0.8));
            let (sp, strength) = SignedPauli::identify(&image, 1e-14).unwrap();
            assert_eq!(sp, constraint_image(l).unwrap(), "{l}");
            assert!((strength - 0.8).abs() < 1e-15);
        }
        assert!(constraint_image(FrameLabel::Y).is_err());
    }
}
