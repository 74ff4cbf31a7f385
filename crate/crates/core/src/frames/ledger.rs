//! Algebraic relations among the frame matrices and the eigenmatrix.
//!
//! Each relation is entered as written and checked by direct multiplication.
//! Several do not hold as written; their expected status records that.

use crate::brach::{
    eigenframe_propagator, optimal_eigenmatrix, optimal_hamiltonian, OptimalQubitParams,
};
use crate::claims::IdentityClaim;
use crate::cmat::{c, cis, expm2, Mat2, I, ONE};
use crate::error::Result;
use crate::hyper::{continued_s_eigenmatrix, HyperbolicParams};
use crate::propnum::naive_integral_exponential;

use super::{
    conjugate, constraint_image, frame, s_matrix, t_matrix, transformed_hamiltonian,
    transformed_propagator, transformed_propagator_at_phase, v_matrix, y_matrix, z_matrix,
    FrameLabel,
};

/// Second time paired with each sample in two-time relations.
pub(crate) fn partner_time(t: f64) -> f64 {
    -0.61 * t + 0.25
}

fn s_frame_eigenmatrix(p: &OptimalQubitParams, t: f64) -> Mat2 {
    let hp = HyperbolicParams {
        amplitude: p.amplitude,
        frequency: p.frame_frequency,
    };
    continued_s_eigenmatrix(&hp, c(t, 0.0))
}

fn constant(id: &str, anchor: &str, statement: &str, lhs: Mat2, rhs: Mat2) -> IdentityClaim {
    IdentityClaim::new(
        id,
        anchor,
        statement,
        move |_t: f64| Ok(lhs),
        move |_t: f64| Ok(rhs),
    )
}

/// The frame-algebra claims, sampled at `times` (two-time claims pair each
/// `t` with [`partner_time`]).
pub fn identity_ledger(p: &OptimalQubitParams, times: &[f64]) -> Vec<IdentityClaim> {
    let p = *p;
    let times = times.to_vec();
    let (t, s, v, z, y) = (t_matrix(), s_matrix(), v_matrix(), z_matrix(), y_matrix());
    let (t_inv, s_inv) = (t.dagger(), s.dagger());
    let w = move |x: f64| optimal_eigenmatrix(&p, x);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let braiding = "frame braiding";
    let eigen = "eigenmatrix braiding";

    let mut claims = vec![
        constant(
            "braid.i-Sinv-T-Sinv",
            braiding,
            "i S^-1 T S^-1 = T^-1",
            s_inv * t * s_inv * I,
            t_inv,
        ),
        constant(
            "braid.T-via-Tinv",
            braiding,
            "T = -i S T^-1 S",
            t,
            s * t_inv * s * -I,
        ),
        constant(
            "braid.Sinv-T",
            braiding,
            "S^-1 T = -i S T^-1",
            s_inv * t,
            s * t_inv * -I,
        )
        .deviates(),
        constant(
            "braid.Sdag-T",
            braiding,
            "S^dag T = -i S T^dag",
            s.dagger() * t,
            s * t.dagger() * -I,
        )
        .deviates(),
        constant("braid.Z-S-Z", braiding, "Z S Z = S^-1", z * s * z, s_inv),
        constant(
            "braid.Y-squared",
            braiding,
            "Y^2 = I",
            y * y,
            Mat2::identity(),
        ),
        constant(
            "braid.Y-squared-SdagS",
            braiding,
            "Y^2 = S^dag S",
            y * y,
            s.dagger() * s,
        ),
        constant(
            "catalog.V-hermitian",
            "Hadamard frame",
            "V = V^dag",
            v,
            v.dagger(),
        ),
        constant(
            "catalog.V-self-inverse",
            "Hadamard frame",
            "V V = I",
            v * v,
            Mat2::identity(),
        ),
        IdentityClaim::new(
            "eigen.V-W-V",
            eigen,
            "V W(t) V = e^{-2iwt} W(t)",
            move |x: f64| Ok(v * w(x) * v),
            move |x: f64| Ok(w(x) * cis(-2.0 * p.frame_frequency * x)),
        )
        .deviates()
        .repairable(),
        IdentityClaim::new(
            "eigen.V-W-exchange",
            eigen,
            "V W(t) = e^{-2iwt} W(t) V",
            move |x: f64| Ok(v * w(x)),
            move |x: f64| Ok(w(x) * v * cis(-2.0 * p.frame_frequency * x)),
        )
        .deviates()
        .repairable(),
        IdentityClaim::new(
            "eigen.Sinv-W-Sinv",
            eigen,
            "S^-1 W(t) S^-1 = (1/sqrt2)[[-a, 1], [a, 1]], a = e^{2iwt}",
            move |x: f64| Ok(s_inv * w(x) * s_inv),
            move |x: f64| {
                let a = cis(2.0 * p.frame_frequency * x);
                Ok(Mat2::new(-a, ONE, a, ONE) * h)
            },
        )
        .repairable(),
        IdentityClaim::new(
            "eigen.S-W-Sinv",
            eigen,
            "S W(t) S^-1 = (1/sqrt2)[[a, i], [i a, 1]]",
            move |x: f64| Ok(s * w(x) * s_inv),
            move |x: f64| {
                let a = cis(2.0 * p.frame_frequency * x);
                Ok(Mat2::new(a, I, I * a, ONE) * h)
            },
        )
        .repairable(),
        IdentityClaim::new(
            "eigen.Y-W-Yinv",
            eigen,
            "Y W(t) Y^-1 = W^dag(-t)",
            move |x: f64| Ok(y * w(x) * y.dagger()),
            move |x: f64| Ok(w(-x).dagger()),
        ),
        IdentityClaim::new(
            "eigen.Y-W-Yinv-explicit",
            eigen,
            "Y W(t) Y^-1 = (1/sqrt2)[[a, 1], [-a, 1]]",
            move |x: f64| Ok(y * w(x) * y.dagger()),
            move |x: f64| {
                let a = cis(2.0 * p.frame_frequency * x);
                Ok(Mat2::new(a, ONE, -a, ONE) * h)
            },
        )
        .repairable(),
        IdentityClaim::new(
            "eigen.Y2-W-Y2",
            eigen,
            "Y^2 W(t) Y^-2 = W(t)",
            move |x: f64| {
                let y2 = y * y;
                Ok(y2 * w(x) * y2.inverse()?)
            },
            move |x: f64| Ok(w(x)),
        ),
        IdentityClaim::new(
            "sframe.diagonalised",
            "S-frame eigenbasis",
            "W_S(t)^-1 H_S(t) W_S(t) = R sigma_y",
            move |x: f64| {
                let ws = s_frame_eigenmatrix(&p, x);
                Ok(ws.inverse()? * transformed_hamiltonian(FrameLabel::S, &p, x)? * ws)
            },
            move |_x: f64| Ok(Mat2::pauli_y() * p.amplitude),
        ),
        IdentityClaim::new(
            "sframe.propagator",
            "S-frame eigenbasis",
            "W_S(t) W_S(s)^dag = U_S(t, s)",
            move |x: f64| {
                Ok(s_frame_eigenmatrix(&p, x) * s_frame_eigenmatrix(&p, partner_time(x)).dagger())
            },
            move |x: f64| transformed_propagator(FrameLabel::S, &p, x, partner_time(x)),
        ),
        IdentityClaim::new(
            "sframe.propagator-half-angle",
            "S-frame eigenbasis",
            "W_S(t) W_S(s)^dag = (1/2)[[e+1, -i(e-1)], [i(e-1), e+1]], e = e^{2i phi}",
            move |x: f64| {
                Ok(s_frame_eigenmatrix(&p, x) * s_frame_eigenmatrix(&p, partner_time(x)).dagger())
            },
            move |x: f64| {
                let e = cis(2.0 * p.phase(x, partner_time(x)));
                Ok(Mat2::new(e + 1.0, -I * (e - 1.0), I * (e - 1.0), e + 1.0) * 0.5)
            },
        ),
        IdentityClaim::new(
            "sframe.rotation-exponential",
            "S-frame eigenbasis",
            "exp(-i t R sigma_y) = [[cos Rt, -sin Rt], [sin Rt, cos Rt]]",
            move |x: f64| Ok(expm2(&(Mat2::pauli_y() * c(0.0, -x * p.amplitude)))),
            move |x: f64| {
                let (sn, cs) = (p.amplitude * x).sin_cos();
                Ok(Mat2::from_real(cs, -sn, sn, cs))
            },
        ),
    ];

    for label in FrameLabel::PROPAGATOR_FRAMES {
        let q = frame(label);
        claims.push(IdentityClaim::new(
            &format!("propagator.{label}"),
            "frame propagators",
            &format!("closed-form U_{label}(phi) = {label} W(t) W(s)^dag {label}^-1"),
            move |x: f64| transformed_propagator(label, &p, x, partner_time(x)),
            move |x: f64| {
                Ok(conjugate(
                    &q,
                    &eigenframe_propagator(&p, x, partner_time(x)),
                ))
            },
        ));
        claims.push(IdentityClaim::new(
            &format!("transport.{label}"),
            "frame propagators",
            &format!("U_{label} H_{label}(s) U_{label}^dag = H_{label}(t)"),
            move |x: f64| {
                let u = transformed_propagator(label, &p, x, partner_time(x))?;
                Ok(u * transformed_hamiltonian(label, &p, partner_time(x))? * u.dagger())
            },
            move |x: f64| transformed_hamiltonian(label, &p, x),
        ));
        if label == FrameLabel::Identity {
            continue;
        }
        claims.push(IdentityClaim::new(
            &format!("hamiltonian.{label}"),
            "transformed Hamiltonians",
            &format!("closed-form H_{label}(t) = {label} H(t) {label}^-1"),
            move |x: f64| transformed_hamiltonian(label, &p, x),
            move |x: f64| Ok(conjugate(&q, &optimal_hamiltonian(&p, x))),
        ));
        let strength = p.constraint_strength;
        claims.push(IdentityClaim::new(
            &format!("constraint.{label}"),
            "constraint transformation table",
            &format!("{label} (Omega sigma_z) {label}^-1 = table entry"),
            move |_x: f64| Ok(constraint_image(label)?.matrix(strength)),
            move |_x: f64| Ok(conjugate(&q, &(Mat2::pauli_z() * strength))),
        ));
    }

    claims.extend([
        IdentityClaim::new(
            "propagator.Tinv-reflection",
            "frame propagators",
            "U_{T^-1}(phi) = conj(U_T(-phi))",
            move |x: f64| {
                transformed_propagator_at_phase(FrameLabel::TInv, p.phase(x, partner_time(x)))
            },
            move |x: f64| {
                Ok(
                    transformed_propagator_at_phase(FrameLabel::T, -p.phase(x, partner_time(x)))?
                        .conj(),
                )
            },
        ),
        IdentityClaim::new(
            "propagator.V-reflection",
            "frame propagators",
            "U_V(phi) = conj(U_V(-phi))",
            move |x: f64| {
                transformed_propagator_at_phase(FrameLabel::V, p.phase(x, partner_time(x)))
            },
            move |x: f64| {
                Ok(
                    transformed_propagator_at_phase(FrameLabel::V, -p.phase(x, partner_time(x)))?
                        .conj(),
                )
            },
        ),
        IdentityClaim::new(
            "propagator.V-conj-is-dagger",
            "frame propagators",
            "conj(U_V(phi)) = U_V(phi)^dag",
            move |x: f64| {
                Ok(
                    transformed_propagator_at_phase(FrameLabel::V, p.phase(x, partner_time(x)))?
                        .conj(),
                )
            },
            move |x: f64| {
                Ok(
                    transformed_propagator_at_phase(FrameLabel::V, p.phase(x, partner_time(x)))?
                        .dagger(),
                )
            },
        ),
        IdentityClaim::new(
            "propagator.T-naive-exponential",
            "frame propagators",
            "T W(t) W(s)^dag T^-1 = exp(-i int_s^t T H T^-1)",
            move |x: f64| {
                Ok(conjugate(
                    &frame(FrameLabel::T),
                    &eigenframe_propagator(&p, x, partner_time(x)),
                ))
            },
            move |x: f64| naive_t_exponential(&p, x),
        )
        .deviates(),
    ]);

    for claim in &mut claims {
        claim.sample_times = times.clone();
    }
    claims
}

fn naive_t_exponential(p: &OptimalQubitParams, x: f64) -> Result<Mat2> {
    let p = *p;
    let gen = move |tau: f64| transformed_hamiltonian(FrameLabel::T, &p, tau).unwrap_or_default();
    naive_integral_exponential(&gen, partner_time(x), x, 512)
}
