//! The complete verification ledger: frame algebra plus Stark, brachistochrone,
//! hyperbolic and adjoint cross-checks, each against an independent route.

use crate::adjoint::{adjoint_matrix, Rot3};
use crate::brach::{
    brach_residual, eigenframe_propagator, eigenframe_propagator_closed_form,
    eigenmatrix_ode_residual, energy_dispersion, optimal_eigenmatrix, optimal_hamiltonian,
    optimal_system, optimal_time_ordered_propagator, trace_constraints, OptimalQubitParams,
    QubitState, DEFAULT_STEP,
};
use crate::claims::{verify_all, IdentityClaim, Verdict};
use crate::cmat::{c, cis, eig_hermitian2, expm2, Mat2};
use crate::error::{Error, Result};
use crate::frames::{identity_ledger, partner_time, transformed_propagator_at_phase, FrameLabel};
use crate::generator::Generator;
use crate::hyper::{
    continued_s_hamiltonian, continued_s_propagator, hyper_brach_residual,
    hyper_eigenframe_construction, hyper_isotropy, hyper_propagator, hyper_propagator_unscaled,
    wick_hamiltonian, HyperbolicParams, HYPERBOLIC_METRIC,
};
use crate::propnum::{naive_integral_exponential, schrodinger_propagate, IntegratorConfig};
use crate::stark::{
    ac_eigenmatrix_as_printed, ac_eigensystem, ac_hamiltonian, dc_eigenmatrix_as_printed,
    dc_eigensystem, dc_hamiltonian, dc_propagator, dc_propagator_as_printed,
    dc_propagator_closed_form, AcStarkParams, DcStarkParams,
};

/// Tolerance for claims that involve a central difference.
pub const DIFFERENCE_TOL: f64 = 1e-6;
/// Tolerance for claims checked against the adaptive integrator.
pub const INTEGRATOR_TOL: f64 = 1e-9;

const QUADRATURE_STEPS: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub optimal: OptimalQubitParams,
    pub dc: DcStarkParams,
    pub ac: AcStarkParams,
    pub times: Vec<f64>,
}

impl SuiteParams {
    fn hyperbolic(&self) -> HyperbolicParams {
        HyperbolicParams {
            amplitude: self.optimal.amplitude,
            frequency: self.optimal.frame_frequency,
        }
    }
}

fn middle_time(t: f64) -> f64 {
    0.5 * (t + partner_time(t)) + 0.3
}

fn integrate(gen: &dyn Generator, t0: f64, t1: f64, tol: f64) -> Result<Mat2> {
    let res = schrodinger_propagate(gen, t0, t1, &IntegratorConfig::with_tolerance(tol))?;
    if !res.accepted {
        return Err(Error::InvalidArgument(format!(
            "integrator stopped at t = {}",
            res.t_reached
        )));
    }
    Ok(res.propagator)
}

fn stark_claims(p: &SuiteParams) -> Result<Vec<IdentityClaim>> {
    let (dc, ac) = (p.dc, p.ac);
    let anchor = "static Stark system";
    let h = dc_hamiltonian(&dc);
    let eig = dc_eigensystem(&dc)?;
    let period = ac.period();

    Ok(vec![
        IdentityClaim::new(
            "stark.dc-pauli-form",
            anchor,
            "H = E I + Delta sigma_z + V cos(phi) sigma_x + V sin(phi) sigma_y",
            move |_t: f64| Ok(h),
            move |_t: f64| {
                Ok(Mat2::identity() * dc.energy
                    + Mat2::pauli_z() * dc.detuning
                    + Mat2::pauli_x() * (dc.coupling * dc.phase.cos())
                    + Mat2::pauli_y() * (dc.coupling * dc.phase.sin()))
            },
        ),
        IdentityClaim::new(
            "stark.dc-diagonalised",
            anchor,
            "W^dag H W = diag(E + Omega, E - Omega)",
            move |_t: f64| Ok(eig.w.dagger() * h * eig.w),
            move |_t: f64| Ok(eig.l),
        ),
        IdentityClaim::new(
            "stark.dc-printed-eigenmatrix-diagonalises",
            anchor,
            "printed W: W^-1 H W = diag(E + Omega, E - Omega)",
            move |_t: f64| {
                let (w, _) = dc_eigenmatrix_as_printed(&dc)?;
                Ok(w.inverse()? * h * w)
            },
            move |_t: f64| Ok(eig.l),
        ),
        IdentityClaim::new(
            "stark.dc-printed-inverse",
            anchor,
            "printed W times printed W^-1 = I",
            move |_t: f64| {
                let (w, w_inv) = dc_eigenmatrix_as_printed(&dc)?;
                Ok(w * w_inv)
            },
            |_t: f64| Ok(Mat2::identity()),
        )
        .deviates(),
        IdentityClaim::new(
            "stark.dc-closed-form",
            anchor,
            "exp(-iHt) = e^{-iEt}[cos(Omega t) I - i sin(Omega t)/Omega n.sigma]",
            move |t: f64| Ok(dc_propagator(&dc, t)),
            move |t: f64| Ok(dc_propagator_closed_form(&dc, t)),
        ),
        IdentityClaim::new(
            "stark.dc-printed-unitarity",
            anchor,
            "printed propagator is unitary",
            move |t: f64| {
                let u = dc_propagator_as_printed(&dc, t);
                Ok(u * u.dagger())
            },
            |_t: f64| Ok(Mat2::identity()),
        )
        .deviates(),
        IdentityClaim::new(
            "stark.dc-printed-vs-exponential",
            anchor,
            "printed propagator = exp(-iHt)",
            move |t: f64| Ok(dc_propagator_as_printed(&dc, t)),
            move |t: f64| Ok(dc_propagator(&dc, t)),
        )
        .deviates(),
        IdentityClaim::new(
            "stark.dc-vs-integrator",
            anchor,
            "exp(-iHt) = numerically integrated propagator",
            move |t: f64| Ok(dc_propagator(&dc, t)),
            move |t: f64| integrate(&move |_x: f64| h, 0.0, t, 1e-10),
        )
        .tolerance(INTEGRATOR_TOL),
        IdentityClaim::new(
            "stark.dc-semigroup",
            anchor,
            "U(t) U(s) = U(t + s)",
            move |t: f64| Ok(dc_propagator(&dc, t) * dc_propagator(&dc, partner_time(t))),
            move |t: f64| Ok(dc_propagator(&dc, t + partner_time(t))),
        ),
        IdentityClaim::new(
            "stark.ac-eigenvalues",
            "driven Stark system",
            "lambda(t) = sqrt(E^2 + V^2 cos^2 wt) is the upper eigenvalue",
            move |t: f64| Ok(ac_eigensystem(&ac, t)?.lambda),
            move |t: f64| Ok(eig_hermitian2(&ac_hamiltonian(&ac, t))?.eigenvalues[0]),
        ),
        IdentityClaim::new(
            "stark.ac-diagonalised",
            "driven Stark system",
            "W(t)^dag H(t) W(t) = diag(lambda, -lambda)",
            move |t: f64| {
                let e = ac_eigensystem(&ac, t)?;
                Ok(e.w.dagger() * ac_hamiltonian(&ac, t) * e.w)
            },
            move |t: f64| {
                let l = ac.splitting(t);
                Ok(Mat2::diag(c(l, 0.0), c(-l, 0.0)))
            },
        ),
        IdentityClaim::new(
            "stark.ac-printed-eigenmatrix-diagonalises",
            "driven Stark system",
            "printed W(t): H W = W diag(lambda, -lambda)",
            // Inverse-free and scaled by |W|: a column of W grows like
            // 1/cos(wt) near zeros of the drive.
            move |t: f64| {
                let (w, _) = ac_eigenmatrix_as_printed(&ac, t)?;
                Ok(ac_hamiltonian(&ac, t) * w * (1.0 / w.max_abs()))
            },
            move |t: f64| {
                let (w, _) = ac_eigenmatrix_as_printed(&ac, t)?;
                let l = ac.splitting(t);
                Ok(w * Mat2::diag(c(l, 0.0), c(-l, 0.0)) * (1.0 / w.max_abs()))
            },
        ),
        IdentityClaim::new(
            "stark.ac-printed-inverse",
            "driven Stark system",
            "printed W(t) times printed W^-1(t) = I",
            move |t: f64| {
                let (w, w_inv) = ac_eigenmatrix_as_printed(&ac, t)?;
                Ok(w * w_inv)
            },
            |_t: f64| Ok(Mat2::identity()),
        )
        .deviates(),
        IdentityClaim::new(
            "stark.ac-naive-exponential",
            "driven Stark system",
            "exp(-i int_0^T H) = time-ordered propagator over one drive period",
            move |t: f64| {
                naive_integral_exponential(
                    &move |x: f64| ac_hamiltonian(&ac, x),
                    0.0,
                    t,
                    QUADRATURE_STEPS,
                )
            },
            move |t: f64| integrate(&move |x: f64| ac_hamiltonian(&ac, x), 0.0, t, 1e-10),
        )
        .at(vec![period])
        .deviates(),
        IdentityClaim::new(
            "stark.ac-unitarity-drift",
            "driven Stark system",
            "unitarity drift after ten drive periods vanishes",
            move |t: f64| {
                let gen = move |x: f64| ac_hamiltonian(&ac, x);
                Ok(
                    schrodinger_propagate(&gen, 0.0, t, &IntegratorConfig::default())?
                        .unitarity_drift,
                )
            },
            |_t: f64| Ok(0.0),
        )
        .at(vec![10.0 * period])
        .tolerance(INTEGRATOR_TOL),
    ])
}

fn brach_claims(p: &SuiteParams) -> Vec<IdentityClaim> {
    let opt = p.optimal;
    let (r, w) = (opt.amplitude, opt.frame_frequency);
    let off = OptimalQubitParams {
        constraint_strength: 2.0 * w,
        ..opt
    };
    let anchor = "brachistochrone solution";
    let frame = "eigenframe propagator";

    vec![
        IdentityClaim::new(
            "brach.residual-on-solution",
            anchor,
            "i d/dt(H + F) = [H, F] with F = w sigma_z",
            move |t: f64| brach_residual(&optimal_system(&opt), t, DEFAULT_STEP),
            |_t: f64| Ok(Mat2::zero()),
        )
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "brach.residual-off-solution",
            anchor,
            "i d/dt(H + F) = [H, F] with F = 2w sigma_z",
            move |t: f64| brach_residual(&optimal_system(&off), t, DEFAULT_STEP),
            |_t: f64| Ok(Mat2::zero()),
        )
        .deviates()
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "brach.residual-off-solution-closed-form",
            anchor,
            "residual at F = Omega sigma_z is 2R(Omega - w)[[0, a], [-a*, 0]]",
            move |t: f64| brach_residual(&optimal_system(&off), t, DEFAULT_STEP),
            move |t: f64| {
                let a = cis(2.0 * w * t);
                Ok(Mat2::new(c(0.0, 0.0), a, -a.conj(), c(0.0, 0.0)) * (2.0 * r * w))
            },
        )
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "brach.orthogonality",
            anchor,
            "Tr(H F) = 0",
            move |t: f64| Ok(trace_constraints(&optimal_system(&opt), t).orthogonality),
            |_t: f64| Ok(0.0),
        ),
        IdentityClaim::new(
            "brach.isotropy",
            anchor,
            "Tr(H^2)/2 = R^2",
            move |t: f64| Ok(trace_constraints(&optimal_system(&opt), t).isotropy),
            move |_t: f64| Ok(r * r),
        ),
        IdentityClaim::new(
            "brach.dispersion-ground",
            anchor,
            "energy dispersion of |0> under H(t) is R",
            move |t: f64| energy_dispersion(&QubitState::ground(), &optimal_hamiltonian(&opt, t)),
            move |_t: f64| Ok(r.abs()),
        ),
        IdentityClaim::new(
            "brach.eigenmatrix-diagonalises",
            anchor,
            "W(t)^dag H(t) W(t) = R sigma_z",
            move |t: f64| {
                let wm = optimal_eigenmatrix(&opt, t);
                Ok(wm.dagger() * optimal_hamiltonian(&opt, t) * wm)
            },
            move |_t: f64| Ok(Mat2::pauli_z() * r),
        ),
        IdentityClaim::new(
            "brach.eigenmatrix-unitary",
            anchor,
            "W(t) W(t)^dag = I",
            move |t: f64| {
                let wm = optimal_eigenmatrix(&opt, t);
                Ok(wm * wm.dagger())
            },
            |_t: f64| Ok(Mat2::identity()),
        ),
        IdentityClaim::new(
            "brach.eigenmatrix-ode",
            anchor,
            "i dW/dt = H W",
            move |t: f64| eigenmatrix_ode_residual(&opt, t, DEFAULT_STEP),
            |_t: f64| Ok(Mat2::zero()),
        )
        .deviates()
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "eigenframe.closed-form",
            frame,
            "W(t) W(s)^dag = e^{i phi} diag(e^{i phi}, e^{-i phi})",
            move |t: f64| Ok(eigenframe_propagator(&opt, t, partner_time(t))),
            move |t: f64| {
                Ok(eigenframe_propagator_closed_form(
                    opt.phase(t, partner_time(t)),
                ))
            },
        ),
        IdentityClaim::new(
            "eigenframe.generator",
            frame,
            "W(t) W(s)^dag = exp(i w (t - s)(I + sigma_z))",
            move |t: f64| Ok(eigenframe_propagator(&opt, t, partner_time(t))),
            move |t: f64| {
                let g =
                    (Mat2::identity() + Mat2::pauli_z()) * c(0.0, opt.phase(t, partner_time(t)));
                Ok(expm2(&g))
            },
        ),
        IdentityClaim::new(
            "eigenframe.transport",
            frame,
            "U(t, s) H(s) U(t, s)^dag = H(t)",
            move |t: f64| {
                let u = eigenframe_propagator(&opt, t, partner_time(t));
                Ok(u * optimal_hamiltonian(&opt, partner_time(t)) * u.dagger())
            },
            move |t: f64| Ok(optimal_hamiltonian(&opt, t)),
        ),
        IdentityClaim::new(
            "eigenframe.composition",
            frame,
            "U(t, r) U(r, s) = U(t, s)",
            move |t: f64| {
                let (m, s) = (middle_time(t), partner_time(t));
                Ok(eigenframe_propagator(&opt, t, m) * eigenframe_propagator(&opt, m, s))
            },
            move |t: f64| Ok(eigenframe_propagator(&opt, t, partner_time(t))),
        ),
        IdentityClaim::new(
            "eigenframe.vs-time-ordered",
            frame,
            "W(t) W(s)^dag = time-ordered propagator of H",
            move |t: f64| Ok(eigenframe_propagator(&opt, t, partner_time(t))),
            move |t: f64| Ok(optimal_time_ordered_propagator(&opt, t, partner_time(t))),
        )
        .deviates(),
        IdentityClaim::new(
            "time-ordered.naive-exponential",
            "time ordering",
            "exp(-i int_s^t H) = time-ordered propagator of H",
            move |t: f64| {
                naive_integral_exponential(
                    &move |x: f64| optimal_hamiltonian(&opt, x),
                    partner_time(t),
                    t,
                    QUADRATURE_STEPS,
                )
            },
            move |t: f64| Ok(optimal_time_ordered_propagator(&opt, t, partner_time(t))),
        )
        .deviates(),
        IdentityClaim::new(
            "time-ordered.vs-integrator",
            "time ordering",
            "co-rotating closed form = numerically integrated propagator",
            move |t: f64| Ok(optimal_time_ordered_propagator(&opt, t, partner_time(t))),
            move |t: f64| {
                integrate(
                    &move |x: f64| optimal_hamiltonian(&opt, x),
                    partner_time(t),
                    t,
                    1e-13,
                )
            },
        )
        .tolerance(INTEGRATOR_TOL),
    ]
}

fn hyper_claims(p: &SuiteParams) -> Vec<IdentityClaim> {
    let hp = p.hyperbolic();
    let w = hp.frequency;
    let anchor = "hyperbolic continuation";
    vec![
        IdentityClaim::new(
            "hyper.residual-antialigned",
            anchor,
            "-d/dt(H + F) = [H, F] with F = -w sigma_y",
            move |t: f64| hyper_brach_residual(&hp, -w, t, DEFAULT_STEP),
            |_t: f64| Ok(Mat2::zero()),
        )
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "hyper.residual-aligned",
            anchor,
            "-d/dt(H + F) = [H, F] with F = +w sigma_y",
            move |t: f64| hyper_brach_residual(&hp, w, t, DEFAULT_STEP),
            |_t: f64| Ok(Mat2::zero()),
        )
        .deviates()
        .tolerance(DIFFERENCE_TOL),
        IdentityClaim::new(
            "hyper.isotropy",
            anchor,
            "Tr(H^2)/2 = R^2",
            move |t: f64| hyper_isotropy(&hp, t),
            move |_t: f64| Ok(hp.amplitude * hp.amplitude),
        ),
        IdentityClaim::new(
            "hyper.orthogonality",
            anchor,
            "Tr(H sigma_y) = 0",
            move |t: f64| Ok((wick_hamiltonian(&hp, t) * Mat2::pauli_y()).trace().norm()),
            |_t: f64| Ok(0.0),
        ),
        IdentityClaim::new(
            "hyper.continued-hamiltonian",
            anchor,
            "S-frame Hamiltonian at imaginary time = hyperbolic Hamiltonian",
            move |t: f64| Ok(continued_s_hamiltonian(&hp, c(0.0, t))),
            move |t: f64| Ok(wick_hamiltonian(&hp, t)),
        ),
        IdentityClaim::new(
            "hyper.continued-propagator",
            anchor,
            "S-frame propagator at imaginary phase = scaled hyperbolic propagator",
            move |t: f64| Ok(continued_s_propagator(c(0.0, w * (t - partner_time(t))))),
            move |t: f64| Ok(hyper_propagator(&hp, t, partner_time(t))),
        ),
        IdentityClaim::new(
            "hyper.eigenframe-construction",
            anchor,
            "W_S(it) (W_S(-is))^dag = scaled hyperbolic propagator",
            move |t: f64| Ok(hyper_eigenframe_construction(&hp, t, partner_time(t))),
            move |t: f64| Ok(hyper_propagator(&hp, t, partner_time(t))),
        ),
        IdentityClaim::new(
            "hyper.composition",
            anchor,
            "K(t, r) K(r, s) = K(t, s)",
            move |t: f64| {
                let (m, s) = (middle_time(t), partner_time(t));
                Ok(hyper_propagator(&hp, t, m) * hyper_propagator(&hp, m, s))
            },
            move |t: f64| Ok(hyper_propagator(&hp, t, partner_time(t))),
        ),
        IdentityClaim::new(
            "hyper.pseudo-unitary",
            anchor,
            "unscaled K sigma_z K^dag = sigma_z",
            move |t: f64| {
                let k = hyper_propagator_unscaled(&hp, t, partner_time(t));
                Ok(k * HYPERBOLIC_METRIC * k.dagger())
            },
            |_t: f64| Ok(HYPERBOLIC_METRIC),
        ),
        IdentityClaim::new(
            "hyper.conformal",
            anchor,
            "scaled M sigma_z M^dag = e^{-2w(t - s)} sigma_z",
            move |t: f64| {
                let m = hyper_propagator(&hp, t, partner_time(t));
                Ok(m * HYPERBOLIC_METRIC * m.dagger())
            },
            move |t: f64| Ok(HYPERBOLIC_METRIC * (-2.0 * w * (t - partner_time(t))).exp()),
        ),
        IdentityClaim::new(
            "hyper.scaled-unitarity",
            anchor,
            "scaled M M^dag = I",
            move |t: f64| {
                let m = hyper_propagator(&hp, t, partner_time(t));
                Ok(m * m.dagger())
            },
            |_t: f64| Ok(Mat2::identity()),
        )
        .deviates(),
    ]
}

fn adjoint_claims(p: &SuiteParams) -> Vec<IdentityClaim> {
    let opt = p.optimal;
    let anchor = "adjoint rotation";
    let phase = move |t: f64| opt.phase(t, partner_time(t));
    let u_t = move |t: f64| transformed_propagator_at_phase(FrameLabel::T, phase(t));
    let u_v = move |t: f64| transformed_propagator_at_phase(FrameLabel::V, 0.5 * phase(t) + 0.4);
    vec![
        IdentityClaim::new(
            "adjoint.eigenframe",
            anchor,
            "Ad(W(t) W(s)^dag) = rotation about z by 2 phi",
            move |t: f64| adjoint_matrix(&eigenframe_propagator(&opt, t, partner_time(t))),
            move |t: f64| Ok(Rot3::about_z(2.0 * phase(t))),
        ),
        IdentityClaim::new(
            "adjoint.hadamard-frame",
            anchor,
            "Ad(U_V(phi)) = rotation about x by 2 phi",
            move |t: f64| {
                adjoint_matrix(&transformed_propagator_at_phase(FrameLabel::V, phase(t))?)
            },
            move |t: f64| Ok(Rot3::about_x(2.0 * phase(t))),
        ),
        IdentityClaim::new(
            "adjoint.orthogonal",
            anchor,
            "Ad(U_T) Ad(U_T)^T = I",
            move |t: f64| Ok(adjoint_matrix(&u_t(t)?)?.orthogonality_residual()),
            |_t: f64| Ok(0.0),
        ),
        IdentityClaim::new(
            "adjoint.determinant",
            anchor,
            "det Ad(U_T) = 1",
            move |t: f64| Ok(adjoint_matrix(&u_t(t)?)?.det()),
            |_t: f64| Ok(1.0),
        ),
        IdentityClaim::new(
            "adjoint.phase-invariance",
            anchor,
            "Ad(e^{i theta} U) = Ad(U)",
            move |t: f64| adjoint_matrix(&(u_t(t)? * cis(1.7 * t + 0.3))),
            move |t: f64| adjoint_matrix(&u_t(t)?),
        ),
        IdentityClaim::new(
            "adjoint.reversed-composition",
            anchor,
            "Ad(U1 U2) = Ad(U2) Ad(U1)",
            move |t: f64| adjoint_matrix(&(u_t(t)? * u_v(t)?)),
            move |t: f64| Ok(adjoint_matrix(&u_v(t)?)? * adjoint_matrix(&u_t(t)?)?),
        ),
        IdentityClaim::new(
            "adjoint.direct-composition",
            anchor,
            "Ad(U1 U2) = Ad(U1) Ad(U2)",
            move |t: f64| adjoint_matrix(&(u_t(t)? * u_v(t)?)),
            move |t: f64| Ok(adjoint_matrix(&u_t(t)?)? * adjoint_matrix(&u_v(t)?)?),
        )
        .deviates(),
    ]
}

/// Every claim, in report order. Claims without their own sample plan use
/// `params.times`.
pub fn full_ledger(params: &SuiteParams) -> Result<Vec<IdentityClaim>> {
    if params.times.is_empty() {
        return Err(Error::InvalidArgument("sample grid is empty".into()));
    }
    let mut claims = identity_ledger(&params.optimal, &params.times);
    let mut rest = stark_claims(params)?;
    rest.extend(brach_claims(params));
    rest.extend(hyper_claims(params));
    rest.extend(adjoint_claims(params));
    for claim in &mut rest {
        if claim.sample_times.is_empty() {
            claim.sample_times = params.times.clone();
        }
    }
    claims.extend(rest);
    Ok(claims)
}

/// Verifies [`full_ledger`] at run tolerance `tol`.
pub fn run_suite(params: &SuiteParams, tol: f64) -> Result<Vec<Verdict>> {
    Ok(verify_all(&full_ledger(params)?, tol))
}
