//! Pump photon numbers, static displacement, and cooperativities versus
//! left pump power for the default device.
//!
//! ```text
//! cargo run -p omit-sim --example steady_state
//! ```

use omit_sim::response::effective_linewidth;
use omit_sim::{default_device_params, solve_steady_state, DriveConfig, SolverOptions};

fn main() {
    let params = default_device_params();
    let opts = SolverOptions::default();

    println!(
        "device: kappa_1/2pi = {:.1} MHz, omega_m/2pi = {:.1} GHz, gamma_m/2pi = {:.1} kHz",
        params.kappa_1() / std::f64::consts::TAU / 1e6,
        params.omega_m() / std::f64::consts::TAU / 1e9,
        params.gamma_m() / std::f64::consts::TAU / 1e3,
    );
    println!("right pump fixed at 0.1 uW; both pumps red-detuned by omega_m\n");
    println!(
        "{:>10}  {:>12}  {:>12}  {:>11}  {:>9}  {:>8}",
        "P_L (W)", "n_1", "n_2", "q_s", "C_1", "branches"
    );
    for exp in 0..=7 {
        let p_left = 1e-9 * 10f64.powi(exp) / 2.0;
        let drive = DriveConfig::red_red(&params, p_left, 0.1e-6, 1e-9).unwrap();
        let st = solve_steady_state(&params, &drive, &opts).unwrap();
        let ew = effective_linewidth(&params, &st);
        println!(
            "{:>10.2e}  {:>12.5e}  {:>12.5e}  {:>11.4e}  {:>9.3}  {:>8}",
            p_left, st.n_1, st.n_2, st.q_s, ew.cooperativity_1, st.branch_count
        );
    }
}
