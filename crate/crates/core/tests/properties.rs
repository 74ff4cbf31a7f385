use proptest::prelude::*;

use qbrach_core::adjoint::adjoint_matrix;
use qbrach_core::brach::{
    brach_residual, eigenframe_propagator, optimal_hamiltonian, optimal_system, trace_constraints,
    OptimalQubitParams,
};
use qbrach_core::cmat::{
    c, cis, commutator, eig_hermitian2, expm2, pauli_decompose, Complex, Mat2,
};
use qbrach_core::frames::{
    catalog, conjugate, transform_system, transformed_propagator, transformed_propagator_at_phase,
    FrameLabel,
};
use qbrach_core::hyper::{
    hyper_brach_residual, hyper_eigenframe_construction, hyper_propagator,
    hyper_propagator_unscaled, wick_hamiltonian, HyperbolicParams,
};
use qbrach_core::stark::{dc_propagator, DcStarkParams};

/// Taylor series with scaling and squaring, 16 terms.
fn expm_series(a: &Mat2) -> Mat2 {
    let norm = a.max_abs() * 2.0;
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = *a * (0.5f64).powi(squarings as i32);
    let mut term = Mat2::identity();
    let mut sum = Mat2::identity();
    for k in 1..=16 {
        term = term * scaled * (1.0 / k as f64);
        sum += term;
    }
    (0..squarings).fold(sum, |m, _| m * m)
}

fn complex() -> impl Strategy<Value = Complex> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| c(re, im))
}

fn matrix() -> impl Strategy<Value = Mat2> {
    (complex(), complex(), complex(), complex()).prop_map(|(a, b, cc, d)| Mat2::new(a, b, cc, d))
}

fn hermitian() -> impl Strategy<Value = Mat2> {
    (-3.0..3.0f64, -3.0..3.0f64, complex())
        .prop_map(|(a, d, off)| Mat2::new(c(a, 0.0), off, off.conj(), c(d, 0.0)))
}

fn unitary() -> impl Strategy<Value = Mat2> {
    hermitian().prop_map(|h| expm2(&(h * c(0.0, -1.0))))
}

fn optimal() -> impl Strategy<Value = OptimalQubitParams> {
    (0.2..2.0f64, 0.2..2.0f64).prop_map(|(r, w)| OptimalQubitParams::on_solution(r, w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn expm_is_unitary_and_matches_series(m in hermitian()) {
        let u = expm2(&(m * c(0.0, -1.0)));
        prop_assert!(u.unitarity_residual() <= 1e-12);
        prop_assert!(u.max_abs_diff(&expm_series(&(m * c(0.0, -1.0)))) <= 1e-12);
    }

    #[test]
    fn pauli_round_trip(m in matrix()) {
        prop_assert!(pauli_decompose(&m).compose().max_abs_diff(&m) <= 1e-14);
    }

    #[test]
    fn eigen_reconstruction(m in hermitian()) {
        let e = eig_hermitian2(&m).unwrap();
        prop_assert!((e.w * e.diagonal() * e.w.dagger()).max_abs_diff(&m) <= 1e-12);
        prop_assert!((e.w.dagger() * e.w).max_abs_diff(&Mat2::identity()) <= 1e-12);
        prop_assert!(e.eigenvalues[0] >= e.eigenvalues[1]);
    }

    #[test]
    fn commutator_antisymmetric(a in matrix(), b in matrix()) {
        prop_assert_eq!(commutator(&a, &b), -commutator(&b, &a));
    }

    #[test]
    fn conjugation_preserves_invariants(m in hermitian()) {
        for q in catalog() {
            let image = conjugate(&q, &m);
            prop_assert!((image.trace() - m.trace()).norm() <= 1e-13);
            prop_assert!((image.det() - m.det()).norm() <= 1e-13 * m.max_abs().max(1.0).powi(2));
            prop_assert!(image.hermitian_residual() <= 1e-13);
        }
    }

    #[test]
    fn dc_semigroup(e in -2.0..2.0f64, d in -2.0..2.0f64, v in -2.0..2.0f64, phi in 0.0..6.3f64,
                    t in -3.0..3.0f64, s in -3.0..3.0f64) {
        let p = DcStarkParams::new(e, d, v, phi).unwrap();
        let lhs = dc_propagator(&p, t) * dc_propagator(&p, s);
        prop_assert!(lhs.max_abs_diff(&dc_propagator(&p, t + s)) <= 1e-12);
    }

    #[test]
    fn eigenframe_propagator_laws(p in optimal(), t in -5.0..5.0f64, r in -5.0..5.0f64, s in -5.0..5.0f64) {
        let u = eigenframe_propagator(&p, t, s);
        prop_assert!(u.unitarity_residual() <= 1e-14);
        let moved = u * optimal_hamiltonian(&p, s) * u.dagger();
        prop_assert!(moved.max_abs_diff(&optimal_hamiltonian(&p, t)) <= 1e-13 * p.amplitude.max(1.0));
        let composed = eigenframe_propagator(&p, t, r) * eigenframe_propagator(&p, r, s);
        prop_assert!(composed.max_abs_diff(&u) <= 1e-13);
        let generator = (Mat2::identity() + Mat2::pauli_z()) * c(0.0, p.frame_frequency * (t - s));
        prop_assert!(expm2(&generator).max_abs_diff(&u) <= 1e-12);
    }

    #[test]
    fn trace_constraints_hold(p in optimal(), t in -10.0..10.0f64) {
        let tc = trace_constraints(&optimal_system(&p), t);
        prop_assert!(tc.orthogonality.abs() <= 1e-14);
        prop_assert!((tc.isotropy - p.amplitude * p.amplitude).abs() <= 1e-14 * p.amplitude.max(1.0).powi(2));
    }

    #[test]
    fn brach_residual_iff_on_solution(r in 0.3..2.0f64, w in 0.3..2.0f64, shift in 0.05..1.5f64, t in -3.0..3.0f64) {
        let on = OptimalQubitParams::on_solution(r, w);
        prop_assert!(brach_residual(&optimal_system(&on), t, 1e-4).unwrap().max_abs() <= 1e-6);
        let off = OptimalQubitParams { constraint_strength: w + shift, ..on };
        let res = brach_residual(&optimal_system(&off), t, 1e-4).unwrap();
        let expected = 2.0 * r * shift;
        prop_assert!((res.a12.norm() - expected).abs() <= 1e-6 * expected.max(1.0));
        prop_assert!(res.a11.norm() <= 1e-6 && res.a22.norm() <= 1e-6);
    }

    #[test]
    fn transform_commutes_with_residual(r in 0.3..2.0f64, w in 0.3..2.0f64, om in -2.0..2.0f64, t in -3.0..3.0f64) {
        let p = OptimalQubitParams { amplitude: r, frame_frequency: w, constraint_strength: om };
        let sys = optimal_system(&p);
        let base = brach_residual(&sys, t, 1e-4).unwrap();
        for q in catalog() {
            let moved = brach_residual(&transform_system(&q, &sys), t, 1e-4).unwrap();
            prop_assert!(moved.max_abs_diff(&conjugate(&q, &base)) <= 1e-10, "{}", q.label);
        }
    }

    #[test]
    fn frame_covariance(p in optimal(), t in -5.0..5.0f64, s in -5.0..5.0f64) {
        let u = eigenframe_propagator(&p, t, s);
        for label in FrameLabel::PROPAGATOR_FRAMES {
            let closed = transformed_propagator(label, &p, t, s).unwrap();
            let q = qbrach_core::frames::frame(label);
            prop_assert!(closed.max_abs_diff(&conjugate(&q, &u)) <= 1e-13, "{}", label);
        }
    }

    #[test]
    fn t_inverse_reflection(phi in -7.0..7.0f64) {
        let lhs = transformed_propagator_at_phase(FrameLabel::TInv, phi).unwrap();
        let rhs = transformed_propagator_at_phase(FrameLabel::T, -phi).unwrap().conj();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-13);
    }

    #[test]
    fn adjoint_reverses_products(a in unitary(), b in unitary(), theta in 0.0..6.3f64) {
        let (ra, rb) = (adjoint_matrix(&a).unwrap(), adjoint_matrix(&b).unwrap());
        let rab = adjoint_matrix(&(a * b)).unwrap();
        prop_assert!(rab.max_abs_diff(&(rb * ra)) <= 1e-12);
        // Equivalently the transpose is a homomorphism.
        prop_assert!(rab.transpose().max_abs_diff(&(ra.transpose() * rb.transpose())) <= 1e-12);
        prop_assert!(adjoint_matrix(&(a * cis(theta))).unwrap().max_abs_diff(&ra) <= 1e-14);
        prop_assert!(ra.orthogonality_residual() <= 1e-12);
        prop_assert!((ra.det() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn catalog_propagators_are_rotations(phi in 0.0..6.3f64) {
        for label in FrameLabel::PROPAGATOR_FRAMES {
            let rot = adjoint_matrix(&transformed_propagator_at_phase(label, phi).unwrap()).unwrap();
            prop_assert!(rot.orthogonality_residual() <= 1e-12);
            prop_assert!((rot.det() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn hyperbolic_invariants(r in 0.3..2.0f64, w in 0.3..2.0f64, s in -3.0..3.0f64, tau in 0.0..4.0f64) {
        // Forward propagation (τ ≥ 0), where the scaled entries stay bounded.
        let p = HyperbolicParams { amplitude: r, frequency: w };
        let t = s + tau;
        let m = hyper_propagator(&p, t, s);
        prop_assert!(m.max_abs() <= 1.0);
        prop_assert!(hyper_eigenframe_construction(&p, t, s).max_abs_diff(&m) <= 1e-12);
        let sz = Mat2::pauli_z();
        let conformal = sz * (-2.0 * w * tau).exp();
        prop_assert!((m * sz * m.dagger()).max_abs_diff(&conformal) <= 1e-12);
        let k = hyper_propagator_unscaled(&p, t, s);
        let scale = k.max_abs().powi(2);
        prop_assert!((k * sz * k.dagger()).max_abs_diff(&sz) <= 1e-15 * scale.max(1.0));
        prop_assert!(hyper_brach_residual(&p, -w, t, 1e-4).unwrap().max_abs() <= 1e-6 * wick_hamiltonian(&p, t).max_abs().max(1.0));
    }
}

#[test]
fn hyperbolic_residual_is_second_order() {
    let p = HyperbolicParams {
        amplitude: 1.0,
        frequency: 1.0,
    };
    // Exact residual at Ω = +ω.
    let exact = |t: f64| {
        let (ch, sh) = ((2.0 * t).cosh(), (2.0 * t).sinh());
        Mat2::new(c(sh, 0.0), c(0.0, -ch), c(0.0, -ch), c(-sh, 0.0)) * 4.0
    };
    let err = |h: f64| {
        hyper_brach_residual(&p, 1.0, 0.3, h)
            .unwrap()
            .max_abs_diff(&exact(0.3))
    };
    let ratio = err(1e-2) / err(5e-3);
    assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
}
