//! Two-level Stark systems: a static (DC) coupling with a closed-form
//! propagator, and a sinusoidally driven (AC) coupling whose instantaneous
//! eigensystem is known but whose propagator is not.
//!
//! The `*_as_printed` functions reproduce the commonly quoted textbook forms
//! verbatim so the claim ledger can measure how far they are from the
//! operations' contracts. They are not used by any other computation.

use crate::cmat::{c, cis, eig_hermitian2, expm2, Complex, Mat2, I, ONE};
use crate::error::{Error, Result};

/// Static Stark Hamiltonian parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DcStarkParams {
    pub energy: f64,
    pub detuning: f64,
    pub coupling: f64,
    pub phase: f64,
}

impl DcStarkParams {
    pub fn new(energy: f64, detuning: f64, coupling: f64, phase: f64) -> Result<Self> {
        let p = Self {
            energy,
            detuning,
            coupling,
            phase,
        };
        if [energy, detuning, coupling, phase]
            .iter()
            .all(|x| x.is_finite())
        {
            Ok(p)
        } else {
            Err(Error::NonFinite {
                context: "DC Stark parameters",
            })
        }
    }

    /// Half-splitting `Ω = √(Δ² + V²)`.
    pub fn splitting(&self) -> f64 {
        self.detuning.hypot(self.coupling)
    }
}

/// Driven Stark Hamiltonian parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcStarkParams {
    pub energy: f64,
    pub amplitude: f64,
    pub phase: f64,
    pub drive_frequency: f64,
}

impl AcStarkParams {
    pub fn new(energy: f64, amplitude: f64, phase: f64, drive_frequency: f64) -> Result<Self> {
        if ![energy, amplitude, phase, drive_frequency]
            .iter()
            .all(|x| x.is_finite())
        {
            return Err(Error::NonFinite {
                context: "AC Stark parameters",
            });
        }
        if drive_frequency <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "drive frequency must be positive, got {drive_frequency}"
            )));
        }
        Ok(Self {
            energy,
            amplitude,
            phase,
            drive_frequency,
        })
    }

    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.drive_frequency
    }

    /// Instantaneous half-splitting `λ(t) = √(E² + V²cos²ωt)`.
    pub fn splitting(&self, t: f64) -> f64 {
        self.energy
            .hypot(self.amplitude * (self.drive_frequency * t).cos())
    }
}

pub fn dc_hamiltonian(p: &DcStarkParams) -> Mat2 {
    let v = p.coupling;
    Mat2::new(
        c(p.energy + p.detuning, 0.0),
        cis(-p.phase) * v,
        cis(p.phase) * v,
        c(p.energy - p.detuning, 0.0),
    )
}

/// Orthonormal eigenmatrix `w` and `l = diag(E+Ω, E−Ω)`.
#[derive(Debug, Clone, Copy)]
pub struct DcEigensystem {
    pub w: Mat2,
    pub l: Mat2,
}

/// Diagonalises the static Hamiltonian. The fully degenerate case `Ω = 0`
/// returns `w = I`.
pub fn dc_eigensystem(p: &DcStarkParams) -> Result<DcEigensystem> {
    let omega = p.splitting();
    let l = Mat2::diag(c(p.energy + omega, 0.0), c(p.energy - omega, 0.0));
    if omega == 0.0 {
        return Ok(DcEigensystem {
            w: Mat2::identity(),
            l,
        });
    }
    let eig = eig_hermitian2(&dc_hamiltonian(p))?;
    Ok(DcEigensystem { w: eig.w, l })
}

/// `exp(−iH̃t)`, including the global phase `e^{−iEt}`.
pub fn dc_propagator(p: &DcStarkParams, t: f64) -> Mat2 {
    expm2(&(dc_hamiltonian(p) * c(0.0, -t)))
}

/// `e^{−iEt}[cos Ωt·I − i (sin Ωt/Ω)(Δσz + V cos φ σx + V sin φ σy)]`.
pub fn dc_propagator_closed_form(p: &DcStarkParams, t: f64) -> Mat2 {
    let omega = p.splitting();
    let sinc = if omega == 0.0 {
        t
    } else {
        (omega * t).sin() / omega
    };
    let cos = (omega * t).cos();
    let (nx, ny, nz) = (
        p.coupling * p.phase.cos(),
        p.coupling * p.phase.sin(),
        p.detuning,
    );
    let n_sigma = Mat2::pauli_x() * nx + Mat2::pauli_y() * ny + Mat2::pauli_z() * nz;
    (Mat2::scalar(c(cos, 0.0)) - n_sigma * (I * sinc)) * cis(-p.energy * t)
}

/// The frequently printed compact propagator: no `e^{−iEt}` factor and a
/// `+i` in the lower-left entry.
pub fn dc_propagator_as_printed(p: &DcStarkParams, t: f64) -> Mat2 {
    let omega = p.splitting();
    let sinc = if omega == 0.0 {
        t
    } else {
        (omega * t).sin() / omega
    };
    let cos = (omega * t).cos();
    let v = p.coupling;
    Mat2::new(
        c(cos, -p.detuning * sinc),
        -I * cis(-p.phase) * (v * sinc),
        I * cis(p.phase) * (v * sinc),
        c(cos, p.detuning * sinc),
    )
}

/// The printed eigenvector matrix and its printed "inverse", both with the
/// `1/√2` prefactor and unnormalised columns.
pub fn dc_eigenmatrix_as_printed(p: &DcStarkParams) -> Result<(Mat2, Mat2)> {
    let omega = p.splitting();
    printed_pair(p.detuning, omega, cis(-p.phase) * p.coupling)
}

fn printed_pair(diag: f64, omega: f64, off: Complex) -> Result<(Mat2, Mat2)> {
    if omega == 0.0 || diag - omega == 0.0 || diag + omega == 0.0 {
        return Err(Error::Degenerate(
            "printed eigenmatrix has a vanishing denominator".into(),
        ));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let w = Mat2::new(-off / (diag - omega), -off / (diag + omega), ONE, ONE) * s;
    let w_inv = Mat2::new(
        -off.conj(),
        c(-(diag - omega), 0.0),
        off.conj(),
        c(diag + omega, 0.0),
    ) * (s / omega);
    Ok((w, w_inv))
}

pub fn ac_hamiltonian(p: &AcStarkParams, t: f64) -> Mat2 {
    let drive = p.amplitude * (p.drive_frequency * t).cos();
    Mat2::new(
        c(p.energy, 0.0),
        cis(-p.phase) * drive,
        cis(p.phase) * drive,
        c(-p.energy, 0.0),
    )
}

/// Instantaneous eigenmatrix and half-splitting `λ(t)`; eigenvalues are `±λ`.
#[derive(Debug, Clone, Copy)]
pub struct AcEigensystem {
    pub w: Mat2,
    pub lambda: f64,
}

pub fn ac_eigensystem(p: &AcStarkParams, t: f64) -> Result<AcEigensystem> {
    let lambda = p.splitting(t);
    if lambda < 1e-12 {
        return Err(Error::Degenerate(format!(
            "AC Stark eigenvalues coincide at t = {t} (E = 0 and cos ωt = 0)"
        )));
    }
    let eig = eig_hermitian2(&ac_hamiltonian(p, t))?;
    Ok(AcEigensystem { w: eig.w, lambda })
}

pub fn ac_eigenmatrix_as_printed(p: &AcStarkParams, t: f64) -> Result<(Mat2, Mat2)> {
    let drive = p.amplitude * (p.drive_frequency * t).cos();
    printed_pair(p.energy, p.splitting(t), cis(-p.phase) * drive)
}
