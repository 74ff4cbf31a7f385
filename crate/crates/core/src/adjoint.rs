//! Adjoint action of a 2×2 unitary on the Pauli vector.
//!
//! `adjoint_matrix(U)` is the real 3×3 matrix `R` with
//! `U σ_i U† = Σ_j R_ij σ_j`. With this row convention `U = exp(iθ n·σ/2)`
//! maps to the usual right-handed rotation about `n` by `θ`, and products
//! compose in reverse: `R(U₁U₂) = R(U₂)·R(U₁)`.

use std::ops::Mul;

use crate::cmat::{Mat2, UNITARY_TOL};
use crate::error::Result;

/// Real 3×3 matrix indexed by `x, y, z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot3 {
    pub r: [[f64; 3]; 3],
}

impl Rot3 {
    pub const fn identity() -> Self {
        Self {
            r: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    pub fn about_x(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            r: [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
        }
    }

    pub fn about_y(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            r: [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]],
        }
    }

    pub fn about_z(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            r: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in self.r.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Self { r: out }
    }

    pub fn det(&self) -> f64 {
        let r = &self.r;
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    }

    pub fn max_abs_diff(&self, other: &Rot3) -> f64 {
        self.r
            .iter()
            .flatten()
            .zip(other.r.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `max |R Rᵀ − I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        (*self * self.transpose()).max_abs_diff(&Rot3::identity())
    }
}

impl Mul for Rot3 {
    type Output = Rot3;
    fn mul(self, rhs: Rot3) -> Rot3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.r[i][k] * rhs.r[k][j]).sum();
            }
        }
        Rot3 { r: out }
    }
}

fn pauli(i: usize) -> Mat2 {
    match i {
        0 => Mat2::pauli_x(),
        1 => Mat2::pauli_y(),
        _ => Mat2::pauli_z(),
    }
}

/// `R_ij = Tr(σ_j U σ_i U†)/2`. A global phase on `U` cancels.
pub fn adjoint_matrix(u: &Mat2) -> Result<Rot3> {
    u.ensure_unitary(UNITARY_TOL)?;
    let mut r = [[0.0; 3]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        let image = *u * pauli(i) * u.dagger();
        for (j, v) in row.iter_mut().enumerate() {
            *v = 0.5 * (pauli(j) * image).trace().re;
        }
    }
    Ok(Rot3 { r })
}
