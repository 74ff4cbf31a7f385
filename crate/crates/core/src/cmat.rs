//! Complex 2×2 linear algebra.
//!
//! Everything in this crate is carried by [`Mat2`]: Hamiltonians, constraint
//! operators, eigenmatrices, propagators and frame transforms. The routines
//! here are closed-form wherever possible. A 2×2 matrix decomposes as
//! `a0·I + n·σ`, and `(n·σ)² = (n·n)·I`, which is enough to exponentiate and
//! diagonalise it without iteration.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout.
pub type Complex = Complex64;

/// Default absolute tolerance for matrix equality.
pub const MATRIX_TOL: f64 = 1e-12;

/// Tolerance used when a routine requires a Hermitian argument.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Tolerance used when a routine requires a unitary argument.
pub const UNITARY_TOL: f64 = 1e-10;

/// Below this `|r|` the exponential switches to its series limit.
const EXPM_SERIES_THRESHOLD: f64 = 1e-6;

/// Eigenvalue splitting below which a Hermitian matrix counts as degenerate.
const DEGENERATE_SPLIT: f64 = 1e-12;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex {
    Complex::from_polar(1.0, theta)
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a11: Complex,
    pub a12: Complex,
    pub a21: Complex,
    pub a22: Complex,
}

impl Mat2 {
    pub const fn new(a11: Complex, a12: Complex, a21: Complex, a22: Complex) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn from_real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self::new(c(a11, 0.0), c(a12, 0.0), c(a21, 0.0), c(a22, 0.0))
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn pauli_x() -> Self {
        Self::new(ZERO, ONE, ONE, ZERO)
    }

    pub const fn pauli_y() -> Self {
        Self::new(ZERO, Complex::new(0.0, -1.0), I, ZERO)
    }

    pub const fn pauli_z() -> Self {
        Self::new(ONE, ZERO, ZERO, Complex::new(-1.0, 0.0))
    }

    pub fn diag(d1: Complex, d2: Complex) -> Self {
        Self::new(d1, ZERO, ZERO, d2)
    }

    pub fn scalar(s: Complex) -> Self {
        Self::diag(s, s)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [Complex; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        Self::new(f(self.a11), f(self.a12), f(self.a21), f(self.a22))
    }

    pub fn scale(&self, s: Complex) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::new(
            self.a11.conj(),
            self.a21.conj(),
            self.a12.conj(),
            self.a22.conj(),
        )
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn trace(&self) -> Complex {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Complex {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Exact inverse by the adjugate formula.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return Err(Error::Degenerate("singular matrix has no inverse".into()));
        }
        let inv = d.inv();
        Ok(Self::new(
            self.a22 * inv,
            -self.a12 * inv,
            -self.a21 * inv,
            self.a11 * inv,
        ))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn approx_eq(&self, other: &Mat2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.is_finite())
    }

    /// `max |M − M†|`.
    pub fn hermitian_residual(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// `max |M M† − I|`.
    pub fn unitarity_residual(&self) -> f64 {
        (*self * self.dagger()).max_abs_diff(&Mat2::identity())
    }

    pub fn ensure_finite(&self, context: &'static str) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite { context })
        }
    }

    pub fn ensure_hermitian(&self, tol: f64) -> Result<()> {
        let residual = self.hermitian_residual();
        if residual <= tol * self.max_abs().max(1.0) {
            Ok(())
        } else {
            Err(Error::NonHermitian { residual })
        }
    }

    pub fn ensure_unitary(&self, tol: f64) -> Result<()> {
        let residual = self.unitarity_residual();
        if residual <= tol {
            Ok(())
        } else {
            Err(Error::NonUnitary { residual })
        }
    }
}

impl Default for Mat2 {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 + rhs.a11,
            self.a12 + rhs.a12,
            self.a21 + rhs.a21,
            self.a22 + rhs.a22,
        )
    }
}

impl AddAssign for Mat2 {
    fn add_assign(&mut self, rhs: Mat2) {
        *self = *self + rhs;
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|z| -z)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 * rhs.a11 + self.a12 * rhs.a21,
            self.a11 * rhs.a12 + self.a12 * rhs.a22,
            self.a21 * rhs.a11 + self.a22 * rhs.a21,
            self.a21 * rhs.a12 + self.a22 * rhs.a22,
        )
    }
}

impl Mul<Complex> for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Complex) -> Mat2 {
        self.scale(rhs)
    }
}

impl Mul<Mat2> for Complex {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        rhs.scale(self)
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: f64) -> Mat2 {
        self.scale_re(rhs)
    }
}

impl Mul<Mat2> for f64 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        rhs.scale_re(self)
    }
}

/// Coefficients of `M = a0·I + ax·σx + ay·σy + az·σz`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliDecomposition {
    pub a0: Complex,
    pub ax: Complex,
    pub ay: Complex,
    pub az: Complex,
}

impl PauliDecomposition {
    pub fn compose(&self) -> Mat2 {
        Mat2::new(
            self.a0 + self.az,
            self.ax - I * self.ay,
            self.ax + I * self.ay,
            self.a0 - self.az,
        )
    }

    /// `ax² + ay² + az²` (complex, no conjugation).
    pub fn vector_square(&self) -> Complex {
        self.ax * self.ax + self.ay * self.ay + self.az * self.az
    }
}

pub fn pauli_decompose(m: &Mat2) -> PauliDecomposition {
    PauliDecomposition {
        a0: (m.a11 + m.a22) * 0.5,
        ax: (m.a12 + m.a21) * 0.5,
        ay: I * (m.a12 - m.a21) * 0.5,
        az: (m.a11 - m.a22) * 0.5,
    }
}

/// Matrix exponential via the Cayley–Hamilton closed form
/// `exp(a0)·(cosh r·I + sinh r / r·(M − a0·I))`, `r² = ax² + ay² + az²`.
///
/// Both `cosh r` and `sinh r / r` are even in `r`, so the branch of the
/// square root is irrelevant.
pub fn expm2(m: &Mat2) -> Mat2 {
    let p = pauli_decompose(m);
    let r2 = p.vector_square();
    let r = r2.sqrt();
    let (cosh_r, sinhc_r) = if r.norm() < EXPM_SERIES_THRESHOLD {
        (
            ONE + r2 / 2.0 + r2 * r2 / 24.0,
            ONE + r2 / 6.0 + r2 * r2 / 120.0,
        )
    } else {
        (r.cosh(), r.sinh() / r)
    };
    let traceless = *m - Mat2::scalar(p.a0);
    (Mat2::scalar(cosh_r) + traceless * sinhc_r) * p.a0.exp()
}

/// Unit-norm eigenvectors (columns of `w`) and descending eigenvalues of a
/// Hermitian matrix.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen {
    pub w: Mat2,
    pub eigenvalues: [f64; 2],
}

impl HermitianEigen {
    pub fn diagonal(&self) -> Mat2 {
        Mat2::diag(c(self.eigenvalues[0], 0.0), c(self.eigenvalues[1], 0.0))
    }
}

/// Rotates a column so its first non-negligible component is real-positive.
fn fix_column_phase(v0: Complex, v1: Complex) -> (Complex, Complex) {
    let lead = if v0.norm() > 1e-14 { v0 } else { v1 };
    let n = lead.norm();
    if n == 0.0 {
        return (v0, v1);
    }
    let phase = lead.conj() / n;
    (v0 * phase, v1 * phase)
}

pub fn eig_hermitian2(m: &Mat2) -> Result<HermitianEigen> {
    m.ensure_finite("eig_hermitian2 input")?;
    m.ensure_hermitian(HERMITIAN_TOL)?;

    let a0 = 0.5 * (m.a11.re + m.a22.re);
    let nz = 0.5 * (m.a11.re - m.a22.re);
    // Average the two off-diagonal entries so tiny anti-Hermitian noise is dropped.
    let off = (m.a12 + m.a21.conj()) * 0.5;
    let nx = off.re;
    let ny = -off.im;
    let r = nz.hypot(nx.hypot(ny));

    if 2.0 * r < DEGENERATE_SPLIT {
        return Ok(HermitianEigen {
            w: Mat2::identity(),
            eigenvalues: [a0 + r, a0 - r],
        });
    }

    let (v0, v1) = if nz >= 0.0 {
        (c(r + nz, 0.0), c(nx, ny))
    } else {
        (c(nx, -ny), c(r - nz, 0.0))
    };
    let norm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
    let (v0, v1) = fix_column_phase(v0 / norm, v1 / norm);
    let (u0, u1) = fix_column_phase(-v1.conj(), v0.conj());

    Ok(HermitianEigen {
        w: Mat2::new(v0, u0, v1, u1),
        eigenvalues: [a0 + r, a0 - r],
    })
}

pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b - *b * *a
}

/// `|Tr(A†B)|/2` without checking unitarity.
pub fn trace_overlap(a: &Mat2, b: &Mat2) -> f64 {
    (a.dagger() * *b).trace().norm() / 2.0
}

/// Global-phase-insensitive gate fidelity `|Tr(A†B)|/2`.
pub fn gate_fidelity(a: &Mat2, b: &Mat2) -> Result<f64> {
    a.ensure_unitary(UNITARY_TOL)?;
    b.ensure_unitary(UNITARY_TOL)?;
    Ok(trace_overlap(a, b).clamp(0.0, 1.0))
}

/// `M·η·M† − η`; zero iff `M` preserves the form `η`.
pub fn metric_residual(m: &Mat2, eta: &Mat2) -> Mat2 {
    *m * *eta * m.dagger() - *eta
}
