//! Hyperbolic (imaginary-time) counterpart of the S-frame brachistochrone.
//!
//! Substituting `t → it` in the S-frame Hamiltonian and propagator turns the
//! circular functions into hyperbolic ones. The resulting propagators are not
//! unitary: the unscaled factor preserves the indefinite form `σz`, and the
//! scaled propagator preserves it up to the conformal factor `e^{−2ωτ}`.
//! Hyperbolic entries are assembled from `exp(±x)` pairs.

use crate::cmat::{c, commutator, Complex, Mat2, I, ONE};
use crate::error::{Error, Result};

/// The indefinite Hermitian form preserved by the unscaled propagator.
pub const HYPERBOLIC_METRIC: Mat2 = Mat2::pauli_z();

/// Largest `|x|` for which `e^{|x|}` is finite.
const EXP_LIMIT: f64 = 709.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicParams {
    pub amplitude: f64,
    pub frequency: f64,
}

fn cosh_sinh(x: f64) -> (f64, f64) {
    let (up, down) = (x.exp(), (-x).exp());
    (0.5 * (up + down), 0.5 * (up - down))
}

/// `R [[−cosh 2ωt, i sinh 2ωt], [i sinh 2ωt, cosh 2ωt]]`.
pub fn wick_hamiltonian(p: &HyperbolicParams, t: f64) -> Mat2 {
    let (ch, sh) = cosh_sinh(2.0 * p.frequency * t);
    Mat2::new(c(-ch, 0.0), c(0.0, sh), c(0.0, sh), c(ch, 0.0)) * p.amplitude
}

/// `[[cosh x, i sinh x], [−i sinh x, cosh x]]` with `x = ω(t − s)`.
pub fn hyper_propagator_unscaled(p: &HyperbolicParams, t: f64, s: f64) -> Mat2 {
    let (ch, sh) = cosh_sinh(p.frequency * (t - s));
    Mat2::new(c(ch, 0.0), c(0.0, sh), c(0.0, -sh), c(ch, 0.0))
}

/// `e^{−x}[[cosh x, i sinh x], [−i sinh x, cosh x]]`, `x = ω(t − s)`.
///
/// The scaled entries reduce to `(1 ± e^{−2x})/2`, which stay bounded for
/// positive `x`.
pub fn hyper_propagator(p: &HyperbolicParams, t: f64, s: f64) -> Mat2 {
    let decay = (-2.0 * p.frequency * (t - s)).exp();
    let diag = 0.5 * (1.0 + decay);
    let off = 0.5 * (1.0 - decay);
    Mat2::new(c(diag, 0.0), c(0.0, off), c(0.0, -off), c(diag, 0.0))
}

/// `−d/dt(ℋ + ℱ) − [ℋ, ℱ]` with `ℱ = Ω σy`, by central difference.
pub fn hyper_brach_residual(
    p: &HyperbolicParams,
    constraint_strength: f64,
    t: f64,
    h: f64,
) -> Result<Mat2> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "difference step must be positive, got {h}"
        )));
    }
    let constraint = Mat2::pauli_y() * constraint_strength;
    let total = |x: f64| wick_hamiltonian(p, x) + constraint;
    let derivative = (total(t + h) - total(t - h)) * (1.0 / (2.0 * h));
    let bracket = commutator(&wick_hamiltonian(p, t), &constraint);
    Ok(-derivative - bracket)
}

/// `Tr(ℋ²)/2 = R²(cosh² − sinh²)`, evaluated in the factored form
/// `R²·e^{x}·e^{−x}` so that it stays exact for large `|x|`.
pub fn hyper_isotropy(p: &HyperbolicParams, t: f64) -> Result<f64> {
    let x = 2.0 * p.frequency * t;
    if !x.is_finite() || x.abs() > EXP_LIMIT {
        return Err(Error::Overflow { argument: x });
    }
    let (up, down) = (x.exp(), (-x).exp());
    // cosh² − sinh² = (cosh + sinh)(cosh − sinh) = e^{x} e^{−x}
    Ok(p.amplitude * p.amplitude * (up * down))
}

/// `Tr(ℋ²)/2` from the matrix product itself; loses relative accuracy like
/// `cosh²(2ωt)·ε` and is only a cross-check.
pub fn hyper_isotropy_entrywise(p: &HyperbolicParams, t: f64) -> f64 {
    let h = wick_hamiltonian(p, t);
    0.5 * (h * h).trace().re
}

/// S-frame Hamiltonian `R[[−cos 2ωz, sin 2ωz], [sin 2ωz, cos 2ωz]]` at a
/// complex time.
pub fn continued_s_hamiltonian(p: &HyperbolicParams, z: Complex) -> Mat2 {
    let arg = z * (2.0 * p.frequency);
    let (cs, sn) = (arg.cos(), arg.sin());
    Mat2::new(-cs, sn, sn, cs) * p.amplitude
}

/// S-frame eigenmatrix `(1/√2)[[e^{2iωz}, i], [i e^{2iωz}, 1]]` at a complex
/// time.
pub fn continued_s_eigenmatrix(p: &HyperbolicParams, z: Complex) -> Mat2 {
    let rot = (I * z * (2.0 * p.frequency)).exp();
    Mat2::new(rot, I, I * rot, ONE) * std::f64::consts::FRAC_1_SQRT_2
}

/// S-frame propagator `e^{iφ}[[cos φ, sin φ], [−sin φ, cos φ]]` at a complex
/// phase.
pub fn continued_s_propagator(phi: Complex) -> Mat2 {
    let (cs, sn) = (phi.cos(), phi.sin());
    Mat2::new(cs, sn, -sn, cs) * (I * phi).exp()
}

/// `W_S(it)·(W_S(−is))†`, the eigenframe construction in imaginary time.
pub fn hyper_eigenframe_construction(p: &HyperbolicParams, t: f64, s: f64) -> Mat2 {
    continued_s_eigenmatrix(p, c(0.0, t)) * continued_s_eigenmatrix(p, c(0.0, -s)).dagger()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmat::metric_residual;

    fn unit() -> HyperbolicParams {
        HyperbolicParams {
            amplitude: 1.0,
            frequency: 1.0,
        }
    }

    #[test]
    fn wick_hamiltonian_examples() {
        let p = HyperbolicParams {
            amplitude: 1.8,
            frequency: 0.6,
        };
        assert_eq!(wick_hamiltonian(&p, 0.0), Mat2::pauli_z() * -1.8);
        for t in [-1.0, 0.0, 0.4, 3.0] {
            let h = wick_hamiltonian(&p, t);
            assert!((h * Mat2::pauli_y()).trace().norm() < 1e-12);
            let sq = h * h;
            let scale = sq.max_abs().max(1.0);
            assert!(sq.approx_eq(&(Mat2::identity() * (1.8 * 1.8)), 1e-14 * scale));
        }
    }

    #[test]
    fn propagator_examples() {
        let p = unit();
        assert_eq!(hyper_propagator(&p, 0.7, 0.7), Mat2::identity());
        let one: f64 = 1.0;
        let expected = Mat2::new(
            c(one.cosh(), 0.0),
            c(0.0, one.sinh()),
            c(0.0, -one.sinh()),
            c(one.cosh(), 0.0),
        ) * (-one).exp();
        assert!(hyper_propagator(&p, 1.0, 0.0).approx_eq(&expected, 1e-15));
        let k = hyper_propagator_unscaled(&p, 1.3, -0.2);
        assert!(metric_residual(&k, &HYPERBOLIC_METRIC).max_abs() < 1e-13);
    }

    #[test]
    fn brach_residual_examples() {
        let p = unit();
        assert!(hyper_brach_residual(&p, -1.0, 0.3, 1e-4).unwrap().max_abs() <= 1e-6);
        let off = hyper_brach_residual(&p, 1.0, 0.3, 1e-4).unwrap();
        // −4ωR [[−sinh, i cosh], [i cosh, sinh]] at 2ωt.
        let (ch, sh) = (0.6_f64.cosh(), 0.6_f64.sinh());
        let expected = Mat2::new(c(sh, 0.0), c(0.0, -ch), c(0.0, -ch), c(-sh, 0.0)) * 4.0;
        assert!(off.approx_eq(&expected, 1e-6));
        let still = HyperbolicParams {
            amplitude: 0.0,
            frequency: 1.0,
        };
        assert_eq!(
            hyper_brach_residual(&still, 2.0, 0.3, 1e-4).unwrap(),
            Mat2::zero()
        );
    }

    #[test]
    fn isotropy_examples() {
        assert_eq!(hyper_isotropy(&unit(), 0.0).unwrap(), 1.0);
        let zero = HyperbolicParams {
            amplitude: 0.0,
            frequency: 1.0,
        };
        assert_eq!(hyper_isotropy(&zero, 2.0).unwrap(), 0.0);
        let p = HyperbolicParams {
            amplitude: 3.0,
            frequency: 1.0,
        };
        assert!((hyper_isotropy(&p, 2.0).unwrap() - 9.0).abs() < 1e-12);
        // Direct entries: cosh 4 ≈ 27.3, so the product loses ~3 digits.
        assert!((hyper_isotropy_entrywise(&p, 2.0) - 9.0).abs() < 1e-11);
        assert!(matches!(
            hyper_isotropy(&p, 400.0),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn continuation_matches_closed_forms() {
        let p = HyperbolicParams {
            amplitude: 1.1,
            frequency: 0.7,
        };
        for t in [-0.8, 0.0, 0.45, 1.9] {
            let continued = continued_s_hamiltonian(&p, c(0.0, t));
            assert!(continued.approx_eq(&wick_hamiltonian(&p, t), 1e-12));
            let via_phase = continued_s_propagator(c(0.0, p.frequency * (t - 0.3)));
            assert!(via_phase.approx_eq(&hyper_propagator(&p, t, 0.3), 1e-13));
            assert!(hyper_eigenframe_construction(&p, t, 0.3)
                .approx_eq(&hyper_propagator(&p, t, 0.3), 1e-12));
        }
    }
}
