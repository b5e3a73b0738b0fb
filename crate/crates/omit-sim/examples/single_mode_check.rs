//! Consistency check: with the right pump off and the right coupling zero,
//! the two-mode response collapses to the textbook single-cavity
//! transparency model, coded independently in `single_mode`.
//!
//! ```text
//! cargo run -p omit-sim --example single_mode_check
//! ```

use omit_sim::{
    delta_probe_to_delta, default_device_params, single_mode, solve_steady_state, transmission,
    DriveConfig, ProbeGrid, SolverOptions,
};

fn main() {
    let base = default_device_params();
    let params = base.with_couplings(base.g_1(), 0.0).unwrap();
    let drive = DriveConfig::red_red(&params, 1e-6, 0.0, 1e-9).unwrap();

    let st = solve_steady_state(&params, &drive, &SolverOptions::default()).unwrap();
    let n_single = single_mode::photon_number(&params, &drive).unwrap();
    println!(
        "two-mode solver n_1 = {:.10e}, single-cavity fixed point n = {:.10e}",
        st.n_1, n_single
    );

    let grid = ProbeGrid::linspace(-3.0 * params.kappa_1(), 3.0 * params.kappa_1(), 4001).unwrap();
    let mut worst = (0.0_f64, 0.0_f64);
    for &dp in grid.detunings() {
        let delta = delta_probe_to_delta(dp, drive.delta_1());
        let a = transmission(&params, &st, delta);
        let b = single_mode::transmission_formula(&params, &drive, n_single, delta);
        let dev = (a - b).norm() / b.norm();
        if dev > worst.1 {
            worst = (dp, dev);
        }
    }
    println!(
        "max relative deviation over {} points: {:.3e} (at delta_p = {:+.3e} rad/s)",
        grid.len(),
        worst.1,
        worst.0
    );
    println!("the two code paths agree to numerical rounding, as they must in this limit");
}
