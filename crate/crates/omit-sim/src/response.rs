//! Linearized probe response: mechanical denominator, upper sideband,
//! complex transmission/reflection, phase, and group delay.
//!
//! All functions take the probe-pump beat frequency `delta = omega_p -
//! omega_L`; convert a probe-cavity detuning with
//! [`crate::model::delta_probe_to_delta`]. Differences of large detunings
//! are evaluated in factored form, so the narrow transparency window is
//! resolved without catastrophic cancellation.

use crate::error::{Error, Result};
use crate::model::{drive_amplitude, DriveConfig, SystemParams};
use crate::steady_state::SteadyState;
use num_complex::Complex64;

/// Which output amplitude a delay refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseChannel {
    Transmission,
    Reflection,
}

impl ResponseChannel {
    pub fn as_str(self) -> &'static str {
        match self {
            ResponseChannel::Transmission => "transmission",
            ResponseChannel::Reflection => "reflection",
        }
    }
}

/// Complex response at one probe detuning. Delay fields stay `None` for
/// single-point evaluations that skipped them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponsePoint {
    /// Probe-cavity detuning delta_p, rad/s.
    pub delta_p: f64,
    /// Complex transmission amplitude.
    pub t: Complex64,
    /// Complex reflection amplitude (1 - t).
    pub r: Complex64,
    /// arg(t), in (-pi, pi].
    pub phase_t: f64,
    /// Transmission group delay, s.
    pub group_delay_t: Option<f64>,
    /// Reflection group delay, s.
    pub group_delay_r: Option<f64>,
}

/// Pump-enhanced cooperativity of the left cavity and the resulting
/// effective mechanical linewidth gamma_m (1 + C_1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveLinewidth {
    pub cooperativity_1: f64,
    pub gamma_eff: f64,
}

/// `(kappa - i delta)² + d_eff²`, evaluated as
/// `kappa² + (d_eff - delta)(d_eff + delta) - 2 i kappa delta` so nearby
/// detunings cancel exactly instead of through squared magnitudes.
#[inline]
fn sideband_denominator(kappa: f64, d_eff: f64, delta: f64) -> Complex64 {
    Complex64::new(
        kappa * kappa + (d_eff - delta) * (d_eff + delta),
        -2.0 * kappa * delta,
    )
}

/// Mechanical response denominator
/// `d(delta) = sum_k 2 d_k_eff g_k² n_k / ((kappa_k - i delta)² + d_k_eff²)
///  - (omega_m² - delta² - i delta gamma_m)/omega_m`.
pub fn mech_denominator(params: &SystemParams, steady: &SteadyState, delta: f64) -> Complex64 {
    let k1 = 2.0 * steady.delta_1_eff * params.g_1() * params.g_1() * steady.n_1;
    let k2 = 2.0 * steady.delta_2_eff * params.g_2() * params.g_2() * steady.n_2;
    let term_1 = if k1 == 0.0 {
        Complex64::ZERO
    } else {
        k1 / sideband_denominator(params.kappa_1(), steady.delta_1_eff, delta)
    };
    let term_2 = if k2 == 0.0 {
        Complex64::ZERO
    } else {
        k2 / sideband_denominator(params.kappa_2(), steady.delta_2_eff, delta)
    };
    let om = params.omega_m();
    // (omega_m² - delta²) factored as a product of sums/differences
    let mech = Complex64::new(
        (om - delta) * (om + delta) / om,
        -delta * params.gamma_m() / om,
    );
    term_1 + term_2 - mech
}

/// Upper (anti-Stokes) sideband amplitude of the left cavity at the probe
/// frequency. Requires a positive probe power.
pub fn upper_sideband(
    params: &SystemParams,
    drive: &DriveConfig,
    steady: &SteadyState,
    delta: f64,
) -> Result<Complex64> {
    if drive.p_probe() <= 0.0 {
        return Err(Error::invalid(
            "p_probe",
            "upper sideband amplitude needs a positive probe power",
        ));
    }
    let omega_p = drive.omega_laser_left(params) + delta;
    let e_p = drive_amplitude(drive.p_probe(), params.kappa_1(), omega_p)?;
    let root_ke = params.kappa_e1().sqrt();
    // kappa_1 + i(delta_1_eff - delta)
    let den = Complex64::new(params.kappa_1(), steady.delta_1_eff - delta);
    let bare = root_ke * e_p / den;
    if steady.n_1 == 0.0 {
        return Ok(bare);
    }
    let d = mech_denominator(params, steady, delta);
    let g1sq_n1 = params.g_1() * params.g_1() * steady.n_1;
    let correction = Complex64::i() * g1sq_n1 * root_ke * e_p / (d * den * den);
    Ok(bare - correction)
}

/// Complex probe transmission
/// `t = 1 - kappa_e1/(kappa_1 + i(delta_1_eff - delta))
///      + i g_1² n_1 kappa_e1 / (d(delta) (kappa_1 + i(delta_1_eff - delta))²)`.
/// Independent of the probe power, which cancels out.
pub fn transmission(params: &SystemParams, steady: &SteadyState, delta: f64) -> Complex64 {
    let den = Complex64::new(params.kappa_1(), steady.delta_1_eff - delta);
    let bare = params.kappa_e1() / den;
    if steady.n_1 == 0.0 {
        return 1.0 - bare;
    }
    let d = mech_denominator(params, steady, delta);
    let g1sq_n1 = params.g_1() * params.g_1() * steady.n_1;
    let window = Complex64::i() * g1sq_n1 * params.kappa_e1() / (d * den * den);
    1.0 - bare + window
}

/// Complex probe reflection: the cavity-emitted component of the output,
/// `r = sqrt(kappa_e1) a_1+ / E_p = 1 - t`.
pub fn reflection(params: &SystemParams, steady: &SteadyState, delta: f64) -> Complex64 {
    1.0 - transmission(params, steady, delta)
}

/// Left-cavity cooperativity C_1 = g_1² n_1 / (kappa_1 gamma_m) and the
/// effective mechanical linewidth gamma_m (1 + C_1).
pub fn effective_linewidth(params: &SystemParams, steady: &SteadyState) -> EffectiveLinewidth {
    let cooperativity_1 =
        params.g_1() * params.g_1() * steady.n_1 / (params.kappa_1() * params.gamma_m());
    EffectiveLinewidth {
        cooperativity_1,
        gamma_eff: params.gamma_m() * (1.0 + cooperativity_1),
    }
}

/// Default finite-difference step for [`group_delay`]: a fiftieth of the
/// effective linewidth (the narrowest spectral feature), floored at
/// 1e3 · machine epsilon · omega_m.
pub fn default_delay_step(params: &SystemParams, steady: &SteadyState) -> f64 {
    let gamma_eff = effective_linewidth(params, steady).gamma_eff;
    (gamma_eff / 50.0).max(1e3 * f64::EPSILON * params.omega_m())
}

/// Group delay `tau_g = d arg(s)/d omega_p` of the chosen output amplitude,
/// evaluated as `Im[(ds/d omega_p)/s]` with central differences; immune to
/// 2π branch cuts of the phase. Fails when |s| < 1e-15 at the evaluation
/// point (phase undefined).
pub fn group_delay(
    params: &SystemParams,
    steady: &SteadyState,
    delta: f64,
    which: ResponseChannel,
    step: Option<f64>,
) -> Result<f64> {
    let h = match step {
        Some(h) => {
            if !h.is_finite() || h <= 0.0 {
                return Err(Error::invalid("step", format!("step must be positive, got {h:e}")));
            }
            h
        }
        None => default_delay_step(params, steady),
    };
    let eval = |d: f64| -> Complex64 {
        match which {
            ResponseChannel::Transmission => transmission(params, steady, d),
            ResponseChannel::Reflection => reflection(params, steady, d),
        }
    };
    let s0 = eval(delta);
    if s0.norm() < 1e-15 {
        return Err(Error::DegenerateAmplitude { magnitude: s0.norm() });
    }
    // use the actually representable abscissae for the difference quotient
    let d_plus = delta + h;
    let d_minus = delta - h;
    let span = d_plus - d_minus;
    let ds = (eval(d_plus) - eval(d_minus)) / span;
    Ok((ds / s0).im)
}

/// Full response record at one probe-cavity detuning; delays are computed
/// when `with_delays` is set.
pub fn response_point(
    params: &SystemParams,
    drive: &DriveConfig,
    steady: &SteadyState,
    delta_p: f64,
    with_delays: bool,
) -> Result<ResponsePoint> {
    let delta = crate::model::delta_probe_to_delta(delta_p, drive.delta_1());
    let t = transmission(params, steady, delta);
    let r = 1.0 - t;
    let (group_delay_t, group_delay_r) = if with_delays {
        (
            Some(group_delay(params, steady, delta, ResponseChannel::Transmission, None)?),
            Some(group_delay(params, steady, delta, ResponseChannel::Reflection, None)?),
        )
    } else {
        (None, None)
    };
    Ok(ResponsePoint {
        delta_p,
        t,
        r,
        phase_t: t.arg(),
        group_delay_t,
        group_delay_r,
    })
}
