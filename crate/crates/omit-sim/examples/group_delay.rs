//! Slow and fast light: group delay of the transmitted and reflected probe
//! at the cavity resonance as a function of left pump power.
//!
//! ```text
//! cargo run -p omit-sim --example group_delay
//! ```

use omit_sim::experiments::{power_sweep_delay, PowerGridSpec, SweepOptions};
use omit_sim::{default_device_params, DriveConfig, ResponseChannel};

fn main() {
    let params = default_device_params();
    let opts = SweepOptions::default();
    let powers = PowerGridSpec {
        min_w: 1e-9,
        max_w: 1e-5,
        points_per_decade: 30,
    }
    .to_powers()
    .unwrap();

    for (label, p_right) in [("P_R = 0.1 uW", 1e-7), ("P_R = 0 (single pump)", 0.0)] {
        let template = DriveConfig::red_red(&params, 0.0, p_right, 1e-9).unwrap();
        let trans = power_sweep_delay(
            &params,
            &template,
            &powers,
            ResponseChannel::Transmission,
            &opts,
        )
        .unwrap();
        let tau = trans.column("tau_s").unwrap();
        let (i, peak) = tau
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        println!(
            "{label}: transmitted delay peaks at {:.3e} s near P_L = {:.2e} W",
            peak, trans.axis_values[i]
        );
    }

    let template = DriveConfig::red_red(&params, 0.0, 1e-7, 1e-9).unwrap();
    let refl = power_sweep_delay(
        &params,
        &template,
        &powers,
        ResponseChannel::Reflection,
        &opts,
    )
    .unwrap();
    let tau_r = refl.column("tau_s").unwrap();
    let (i, adv) = tau_r
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    println!(
        "reflected beam: strongest advance {:.3e} s near P_L = {:.2e} W (negative delay)",
        adv, refl.axis_values[i]
    );

    println!("\n{:>10}  {:>13}  {:>13}", "P_L (W)", "tau_t (s)", "tau_r (s)");
    let trans = power_sweep_delay(
        &params,
        &template,
        &powers,
        ResponseChannel::Transmission,
        &opts,
    )
    .unwrap();
    let tau_t = trans.column("tau_s").unwrap();
    for idx in (0..powers.len()).step_by(15) {
        println!(
            "{:>10.2e}  {:>13.4e}  {:>13.4e}",
            powers[idx], tau_t[idx], tau_r[idx]
        );
    }
}
