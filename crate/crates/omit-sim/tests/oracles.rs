//! Independent-oracle checks: frozen 60-digit-decimal reference values for
//! the drive amplitude, steady state, mechanical denominator, and upper
//! sideband; a brute-force grid-scan steady-state oracle; and the cubic
//! branch oracle for the decoupled cavity.
// frozen reference constants keep all 17 digits even when the nearest f64
// needs fewer
#![allow(clippy::excessive_precision)]

mod common;

use common::{cubic_roots, grid_scan_oracle, rel_dev, Lcg};
use num_complex::Complex64;
use omit_sim::model::{
    drive_amplitude, hz_to_angular, default_device_params, DriveConfig, SystemParams,
};
use omit_sim::steady_state::{scan_branches, solve_steady_state, SolverOptions};
use omit_sim::{mech_denominator, upper_sideband};

const UW: f64 = 1e-6;

/// P = 0.1 uW, kappa = 2π×520 MHz, omega = 2π×(205.3 THz - 4 GHz),
/// evaluated beforehand with 60-digit decimal arithmetic.
#[test]
fn drive_amplitude_matches_decimal_reference() {
    let kappa = hz_to_angular(520e6);
    let omega = hz_to_angular(205.3e12 - 4e9);
    let e = drive_amplitude(1e-7, kappa, omega).unwrap();
    let reference = 6.9308794544081519e10;
    assert!(
        rel_dev(e, reference) <= 1e-12,
        "drive amplitude {e:.17e} vs decimal reference {reference:.17e}"
    );
}

/// Steady state at the transparency-family drive P_L = 1 uW, P_R = 0.1 uW
/// (red-red), against the decimal fixed point iterated to 1e-60.
#[test]
fn steady_state_matches_decimal_reference() {
    let p = default_device_params();
    let d = DriveConfig::red_red(&p, 1.0 * UW, 0.1 * UW, 1e-9).unwrap();
    let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
    let checks = [
        ("n_1", st.n_1, 4.8922555383928801e10),
        ("n_2", st.n_2, 1.0296112832349001e11),
        ("q_s", st.q_s, 1.0063654422173148e4),
        ("delta_1_eff", st.delta_1_eff, 2.5118703767874717e10),
        ("delta_2_eff", st.delta_2_eff, 2.5127050366214172e10),
    ];
    for (name, got, want) in checks {
        assert!(
            rel_dev(got, want) <= 1e-10,
            "{name}: {got:.17e} vs decimal reference {want:.17e} (rel {:.2e})",
            rel_dev(got, want)
        );
    }
}

/// d(delta = omega_m) at the same drive against the decimal evaluation of
/// the full expression.
#[test]
fn mech_denominator_matches_decimal_reference() {
    let p = default_device_params();
    let d = DriveConfig::red_red(&p, 1.0 * UW, 0.1 * UW, 1e-9).unwrap();
    let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
    let got = mech_denominator(&p, &st, p.omega_m());
    let want = Complex64::new(2.3852880008646574e6, 3.2192736177034648e7);
    assert!(
        (got - want).norm() <= 1e-10 * want.norm(),
        "d(omega_m) = {got} vs decimal reference {want}"
    );
}

/// Upper sideband amplitude at the magnitude/phase drive (P_L = 10 uW,
/// P_R = 0.1 uW, probe 1 nW) at delta = omega_m.
#[test]
fn upper_sideband_matches_decimal_reference() {
    let p = default_device_params();
    let d = DriveConfig::red_red(&p, 10.0 * UW, 0.1 * UW, 1e-9).unwrap();
    let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
    assert!(rel_dev(st.n_1, 4.9186356016224816e11) <= 1e-10);
    assert!(rel_dev(st.n_2, 1.0315334752619378e11) <= 1e-10);
    let got = upper_sideband(&p, &d, &st, p.omega_m()).unwrap();
    let want = Complex64::new(5.9801090200108773e2, -3.5721091090648479e3);
    assert!(
        (got - want).norm() <= 1e-10 * want.norm(),
        "a_1+ = {got} vs decimal reference {want}"
    );
}

/// The solver agrees with the brute-force grid-scan oracle at every
/// transparency-family pump power.
#[test]
fn solver_matches_grid_scan_at_figure_powers() {
    let p = default_device_params();
    let opts = SolverOptions::default();
    for p_left in [0.0, 0.1 * UW, 1.0 * UW, 10.0 * UW] {
        let d = DriveConfig::red_red(&p, p_left, 0.1 * UW, 1e-9).unwrap();
        let st = solve_steady_state(&p, &d, &opts).unwrap();
        let (n_1, n_2) = grid_scan_oracle(&p, &d);
        assert!(
            rel_dev(st.n_1, n_1) <= 1e-6 || (st.n_1 == 0.0 && n_1 < 1e-6),
            "P_L = {p_left:e}: solver n_1 {:.10e} vs oracle {:.10e}",
            st.n_1,
            n_1
        );
        assert!(
            rel_dev(st.n_2, n_2) <= 1e-6,
            "P_L = {p_left:e}: solver n_2 {:.10e} vs oracle {:.10e}",
            st.n_2,
            n_2
        );
    }
}

/// Oracle equivalence over 20 deterministic random draws with every rate
/// within ±50% of its default value.
#[test]
fn solver_matches_grid_scan_for_random_rate_draws() {
    let base = default_device_params();
    let mut rng = Lcg(0x00D1_CE5E_ED15_EA5E);
    let opts = SolverOptions::default();
    for draw in 0..20 {
        let kappa_1 = base.kappa_1() * rng.half_to_threehalves();
        let kappa_2 = base.kappa_2() * rng.half_to_threehalves();
        let p = SystemParams::new(
            base.omega_1() * rng.half_to_threehalves(),
            base.omega_2() * rng.half_to_threehalves(),
            kappa_1,
            kappa_2,
            base.kappa_e1() * rng.half_to_threehalves(),
            base.kappa_e2() * rng.half_to_threehalves(),
            base.omega_m() * rng.half_to_threehalves(),
            base.q_m() * rng.half_to_threehalves(),
            base.g_1() * rng.half_to_threehalves(),
            base.g_2() * rng.half_to_threehalves(),
        )
        .unwrap();
        let d = DriveConfig::red_red(&p, 1.0 * UW, 0.1 * UW, 1e-9).unwrap();
        let st = solve_steady_state(&p, &d, &opts).unwrap();
        assert_eq!(st.branch_count, 1, "draw {draw} should be single-valued");
        let (n_1, n_2) = grid_scan_oracle(&p, &d);
        assert!(
            rel_dev(st.n_1, n_1) <= 1e-6,
            "draw {draw}: n_1 {:.10e} vs oracle {:.10e} (rel {:.2e})",
            st.n_1,
            n_1,
            rel_dev(st.n_1, n_1)
        );
        assert!(
            rel_dev(st.n_2, n_2) <= 1e-6,
            "draw {draw}: n_2 {:.10e} vs oracle {:.10e} (rel {:.2e})",
            st.n_2,
            n_2,
            rel_dev(st.n_2, n_2)
        );
    }
}

/// With the right cavity decoupled (g_2 = 0) the branch structure is the
/// root set of a single-cavity cubic; the scan must reproduce it.
#[test]
fn decoupled_branches_match_cubic_roots() {
    let base = default_device_params();
    // strong left coupling to drive the cubic into the three-root region
    let p = base
        .with_couplings(hz_to_angular(1500.0), 0.0)
        .unwrap();
    let d = DriveConfig::red_red(&p, 10.0 * UW, 0.1 * UW, 1e-9).unwrap();

    let (s_1, _) = common::strengths(&p, &d);
    // n (kappa² + (delta - a n)²) = s with a = 2 g²/omega_m:
    // a² n³ - 2 delta a n² + (kappa² + delta²) n - s = 0
    let a = 2.0 * p.g_1() * p.g_1() / p.omega_m();
    let roots = cubic_roots(
        a * a,
        -2.0 * d.delta_1() * a,
        p.kappa_1() * p.kappa_1() + d.delta_1() * d.delta_1(),
        -s_1,
    );
    let positive: Vec<f64> = roots.into_iter().filter(|&r| r > 0.0).collect();
    assert_eq!(positive.len(), 3, "chosen drive must be bistable");

    let branches = scan_branches(&p, &d, 48, &SolverOptions::default()).unwrap();
    assert_eq!(branches.len(), positive.len());
    for (branch, root) in branches.iter().zip(&positive) {
        assert!(
            rel_dev(branch.n_1, *root) <= 1e-6,
            "branch n_1 {:.10e} vs cubic root {:.10e}",
            branch.n_1,
            root
        );
    }
    // n_2 stays at its decoupled Lorentzian value on every branch
    let (_, s_2) = common::strengths(&p, &d);
    let n2_expect = s_2 / (p.kappa_2() * p.kappa_2() + d.delta_2() * d.delta_2());
    for branch in &branches {
        assert!(rel_dev(branch.n_2, n2_expect) <= 1e-9);
    }

    // the solver returns the smallest (zero-power-connected) root
    let st = solve_steady_state(&p, &d, &SolverOptions::default()).unwrap();
    assert!(rel_dev(st.n_1, positive[0]) <= 1e-8);
    assert_eq!(st.branch_count, 3);
}
