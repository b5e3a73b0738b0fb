//! Steady-state and linear probe response of a two-mode cavity
//! optomechanical system: two optical cavities coupled to one mechanical
//! resonator, each driven by its own pump, with a weak probe on the left
//! cavity.
//!
//! The library computes
//!
//! * the self-consistent pump photon numbers and static mechanical
//!   displacement ([`steady_state`]),
//! * the linearized probe response — mechanical denominator, upper
//!   sideband, complex transmission/reflection, phase, and group delay
//!   ([`response`]),
//! * spectra and pump-power sweeps reproducing the canonical two-mode
//!   transparency, slow/fast light, and amplification experiments
//!   ([`experiments`]),
//! * deterministic CSV/JSON tables with full config echo ([`output`],
//!   [`config`]).
//!
//! All frequencies are angular rates (rad/s) internally; Hz appears only at
//! the config boundary. Spectra are parameterized by the probe-cavity
//! detuning `delta_p = omega_p - omega_1`.
//!
//! ## Runnable examples
//!
//! Each major capability has a self-contained example:
//!
//! * **`steady_state`** — photon numbers, displacement, and cooperativity
//!   versus pump power
//! * **`eit_spectrum`** — the transparency window opening in the probe
//!   spectrum as the left pump power grows (writes CSV files)
//! * **`magnitude_phase`** — window magnitude and the steep positive phase
//!   dispersion across the cavity resonance
//! * **`group_delay`** — slow light in transmission, group advance in
//!   reflection, versus pump power
//! * **`amplification`** — blue-red pumping and the probe gain band
//! * **`single_mode_check`** — reduction to the independently coded
//!   single-cavity transparency model
//!
//! ```text
//! cargo run -p omit-sim --example eit_spectrum
//! cargo run -p omit-sim --example group_delay
//! ```
//!
//! ## Quick start
//!
//! ```
//! use omit_sim::{default_device_params, solve_steady_state, transmission,
//!                delta_probe_to_delta, DriveConfig, SolverOptions};
//!
//! let params = default_device_params();
//! // both pumps red-detuned by the mechanical frequency
//! let drive = DriveConfig::red_red(&params, 1e-6, 1e-7, 1e-9).unwrap();
//! let steady = solve_steady_state(&params, &drive, &SolverOptions::default()).unwrap();
//!
//! // probe at the cavity resonance: the transparency window center
//! let delta = delta_probe_to_delta(0.0, drive.delta_1());
//! let t = transmission(&params, &steady, delta);
//! assert!(t.norm() > 0.8); // window lifts the bare-cavity dip
//! ```
//!
//! A thin binary (`omit-sim`) exposes the same machinery as the
//! `steady-state`, `spectrum`, `delay-sweep`, `figure`, and `validate`
//! subcommands; see the README for the config file format.

pub mod cli;
pub mod config;
pub mod error;
pub mod experiments;
pub mod model;
pub mod output;
pub mod response;
pub mod single_mode;
pub mod steady_state;

pub use error::{Error, Result};
pub use model::{
    delta_probe_to_delta, drive_amplitude, hz_to_angular, default_device_params, DriveConfig,
    ProbeGrid, SystemParams, HBAR,
};
pub use response::{
    effective_linewidth, group_delay, mech_denominator, reflection, response_point, transmission,
    upper_sideband, EffectiveLinewidth, ResponseChannel, ResponsePoint,
};
pub use steady_state::{scan_branches, solve_steady_state, QsSign, SolverOptions, SteadyState};
