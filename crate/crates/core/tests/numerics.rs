use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qbrach_core::brach::{
    optimal_hamiltonian, optimal_time_ordered_propagator, OptimalQubitParams,
};
use qbrach_core::claims::verify_identity;
use qbrach_core::cmat::Mat2;
use qbrach_core::propnum::{midpoint_product, schrodinger_propagate, IntegratorConfig};
use qbrach_core::stark::{
    ac_hamiltonian, dc_hamiltonian, dc_propagator, AcStarkParams, DcStarkParams,
};
use qbrach_core::suite::{full_ledger, SuiteParams};

fn propagate(gen: &dyn qbrach_core::generator::Generator, t0: f64, t1: f64, tol: f64) -> Mat2 {
    let res = schrodinger_propagate(gen, t0, t1, &IntegratorConfig::with_tolerance(tol)).unwrap();
    assert!(res.accepted);
    res.propagator
}

#[test]
fn dc_matches_integrator_for_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p = DcStarkParams::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(0.0..6.3),
        )
        .unwrap();
        let h = dc_hamiltonian(&p);
        for t in [0.5, 3.0, 10.0] {
            let u = propagate(&move |_x: f64| h, 0.0, t, 1e-10);
            assert!(u.max_abs_diff(&dc_propagator(&p, t)) <= 1e-9, "{p:?} t={t}");
        }
    }
}

#[test]
fn composition_consistency() {
    let dc = DcStarkParams::new(0.5, 1.0, 1.0, 0.7).unwrap();
    let h = dc_hamiltonian(&dc);
    let opt = OptimalQubitParams::on_solution(1.0, 1.0);
    let ac = AcStarkParams::new(1.0, 2.0, 0.0, 1.0).unwrap();
    let gens: Vec<Box<dyn qbrach_core::generator::Generator>> = vec![
        Box::new(move |_x: f64| h),
        Box::new(move |x: f64| optimal_hamiltonian(&opt, x)),
        Box::new(move |x: f64| ac_hamiltonian(&ac, x)),
    ];
    for gen in &gens {
        let whole = propagate(gen.as_ref(), 0.0, 2.0, 1e-10);
        let split =
            propagate(gen.as_ref(), 1.0, 2.0, 1e-10) * propagate(gen.as_ref(), 0.0, 1.0, 1e-10);
        assert!(
            whole.max_abs_diff(&split) <= 1e-9,
            "{:e}",
            whole.max_abs_diff(&split)
        );
    }
}

/// The midpoint exponential is exact for a constant generator, so the DC
/// mismatch sits at rounding level for every tolerance rather than shrinking.
#[test]
fn dc_mismatch_is_rounding_level_at_all_tolerances() {
    let p = DcStarkParams::new(0.5, 1.0, 1.0, 0.7).unwrap();
    let h = dc_hamiltonian(&p);
    for tol in [1e-4, 1e-6, 1e-8, 1e-10, 1e-12] {
        let u = propagate(&move |_x: f64| h, 0.0, 10.0, tol);
        assert!(
            u.max_abs_diff(&dc_propagator(&p, 10.0)) <= 1e-12,
            "tol {tol}"
        );
    }
}

#[test]
fn midpoint_scheme_is_second_order() {
    let p = OptimalQubitParams::on_solution(1.0, 1.0);
    let gen = move |x: f64| optimal_hamiltonian(&p, x);
    let exact = optimal_time_ordered_propagator(&p, 1.5, 0.0);
    let errors: Vec<f64> = [32, 64, 128, 256]
        .iter()
        .map(|&n| {
            midpoint_product(&gen, 0.0, 1.5, n)
                .unwrap()
                .max_abs_diff(&exact)
        })
        .collect();
    for pair in errors.windows(2) {
        let order = (pair[0] / pair[1]).log2();
        assert!(order >= 1.9, "observed order {order} from {errors:?}");
    }
}

#[test]
fn adaptive_error_shrinks_with_tolerance() {
    let p = OptimalQubitParams::on_solution(1.0, 1.0);
    let gen = move |x: f64| optimal_hamiltonian(&p, x);
    let exact = optimal_time_ordered_propagator(&p, 2.0, 0.0);
    let errs: Vec<f64> = [1e-6, 1e-8, 1e-10, 1e-12]
        .iter()
        .map(|&tol| propagate(&gen, 0.0, 2.0, tol).max_abs_diff(&exact))
        .collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    assert!(errs[3] < 1e-8);
}

#[test]
fn ac_unitarity_over_ten_periods() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let p = AcStarkParams::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(0.1..3.0),
            rng.gen_range(0.0..6.3),
            rng.gen_range(0.5..2.0),
        )
        .unwrap();
        let gen = move |x: f64| ac_hamiltonian(&p, x);
        let res = schrodinger_propagate(&gen, 0.0, 10.0 * p.period(), &IntegratorConfig::default())
            .unwrap();
        assert!(res.accepted);
        assert!(
            res.unitarity_drift <= 1e-9,
            "{p:?}: {:e}",
            res.unitarity_drift
        );
    }
}

#[test]
fn ledger_verdicts_stable_under_grid_refinement() {
    let grid = |n: usize| -> Vec<f64> {
        (0..n)
            .map(|k| -1.0 + 3.0 * k as f64 / (n - 1) as f64)
            .collect()
    };
    let params = |n: usize| SuiteParams {
        optimal: OptimalQubitParams::on_solution(1.0, 1.0),
        dc: DcStarkParams::new(0.5, 1.0, 1.0, 0.7).unwrap(),
        ac: AcStarkParams::new(0.5, 1.0, 0.7, 1.0).unwrap(),
        times: grid(n),
    };
    let coarse = full_ledger(&params(5)).unwrap();
    let fine = full_ledger(&params(50)).unwrap();
    assert_eq!(coarse.len(), fine.len());
    for (a, b) in coarse.iter().zip(&fine) {
        let (va, vb) = (verify_identity(a, 1e-12), verify_identity(b, 1e-12));
        assert_eq!(va.status, vb.status, "{}", a.id);
    }
}
