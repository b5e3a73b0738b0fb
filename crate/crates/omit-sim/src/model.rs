//! Domain types, physical constants, and unit conventions.
//!
//! Every frequency-like quantity inside the library is an angular rate in
//! rad/s. Ordinary frequencies (Hz) appear only at the IO boundary and are
//! converted exactly once with [`hz_to_angular`]. Probe grids carry the
//! probe-cavity detuning directly, so response formulas never subtract two
//! absolute optical frequencies.

use crate::error::{Error, Result};
use std::f64::consts::TAU;

/// Reduced Planck constant, J·s (CODATA).
pub const HBAR: f64 = 1.054571817e-34;

/// Ordinary frequency (Hz) to angular rate (rad/s).
pub fn hz_to_angular(f_hz: f64) -> f64 {
    f_hz * TAU
}

/// Angular rate (rad/s) to ordinary frequency (Hz).
pub fn angular_to_hz(omega: f64) -> f64 {
    omega / TAU
}

/// Default single-photon coupling rate of the left cavity, rad/s.
///
/// The published measurements this parameter set is modeled on do not pin
/// the couplings together with this drive convention, so these are
/// calibration defaults, not device ground truth: they place the solver in
/// the transparency / amplification regime at microwatt pump powers
/// (left-cavity cooperativity near 10 at 0.1 uW, probe gain near 24% in
/// the blue-red configuration). Override with `g_1_hz` / `g_2_hz` in a run
/// config when modeling a specific device.
pub const DEFAULT_G1: f64 = TAU * 222.0;

/// Default single-photon coupling rate of the right cavity, rad/s.
/// See [`DEFAULT_G1`] for the calibration caveat.
pub const DEFAULT_G2: f64 = TAU * 90.0;

/// Fixed physical constants of the two-mode device.
///
/// All rates are angular (rad/s). Fields are private so that the
/// construction-time invariants (positive rates, external coupling not
/// exceeding the total linewidth) cannot be broken afterwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    omega_1: f64,
    omega_2: f64,
    kappa_1: f64,
    kappa_2: f64,
    kappa_e1: f64,
    kappa_e2: f64,
    omega_m: f64,
    q_m: f64,
    g_1: f64,
    g_2: f64,
}

impl SystemParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        omega_1: f64,
        omega_2: f64,
        kappa_1: f64,
        kappa_2: f64,
        kappa_e1: f64,
        kappa_e2: f64,
        omega_m: f64,
        q_m: f64,
        g_1: f64,
        g_2: f64,
    ) -> Result<Self> {
        let fields: [(&'static str, f64, bool); 10] = [
            ("omega_1", omega_1, false),
            ("omega_2", omega_2, false),
            ("kappa_1", kappa_1, false),
            ("kappa_2", kappa_2, false),
            ("kappa_e1", kappa_e1, false),
            ("kappa_e2", kappa_e2, false),
            ("omega_m", omega_m, false),
            ("q_m", q_m, false),
            // couplings may be zero (decoupled limits)
            ("g_1", g_1, true),
            ("g_2", g_2, true),
        ];
        for (name, v, allow_zero) in fields {
            if !v.is_finite() || v < 0.0 || (v == 0.0 && !allow_zero) {
                return Err(Error::InvalidParameter {
                    name,
                    message: format!("must be a positive finite rate, got {v:e}"),
                });
            }
        }
        if kappa_e1 > kappa_1 {
            return Err(Error::invalid(
                "kappa_e1",
                format!("external coupling {kappa_e1:e} exceeds total linewidth kappa_1 = {kappa_1:e}"),
            ));
        }
        if kappa_e2 > kappa_2 {
            return Err(Error::invalid(
                "kappa_e2",
                format!("external coupling {kappa_e2:e} exceeds total linewidth kappa_2 = {kappa_2:e}"),
            ));
        }
        Ok(Self {
            omega_1,
            omega_2,
            kappa_1,
            kappa_2,
            kappa_e1,
            kappa_e2,
            omega_m,
            q_m,
            g_1,
            g_2,
        })
    }

    pub fn omega_1(&self) -> f64 {
        self.omega_1
    }
    pub fn omega_2(&self) -> f64 {
        self.omega_2
    }
    pub fn kappa_1(&self) -> f64 {
        self.kappa_1
    }
    pub fn kappa_2(&self) -> f64 {
        self.kappa_2
    }
    pub fn kappa_e1(&self) -> f64 {
        self.kappa_e1
    }
    pub fn kappa_e2(&self) -> f64 {
        self.kappa_e2
    }
    pub fn omega_m(&self) -> f64 {
        self.omega_m
    }
    pub fn q_m(&self) -> f64 {
        self.q_m
    }
    pub fn g_1(&self) -> f64 {
        self.g_1
    }
    pub fn g_2(&self) -> f64 {
        self.g_2
    }

    /// Mechanical damping rate, rad/s (omega_m / Q_m).
    pub fn gamma_m(&self) -> f64 {
        self.omega_m / self.q_m
    }

    /// True when the device sits in the resolved-sideband (good-cavity)
    /// regime: the mechanical frequency exceeds both cavity linewidths.
    /// A violation is a warning, not an error; callers decide what to do.
    pub fn resolved_sideband(&self) -> bool {
        self.omega_m > self.kappa_1 && self.omega_m > self.kappa_2
    }

    /// Same parameters with a different external coupling of the left cavity.
    pub fn with_kappa_e1(&self, kappa_e1: f64) -> Result<Self> {
        Self::new(
            self.omega_1,
            self.omega_2,
            self.kappa_1,
            self.kappa_2,
            kappa_e1,
            self.kappa_e2,
            self.omega_m,
            self.q_m,
            self.g_1,
            self.g_2,
        )
    }

    /// Same parameters with different optomechanical couplings.
    pub fn with_couplings(&self, g_1: f64, g_2: f64) -> Result<Self> {
        Self::new(
            self.omega_1,
            self.omega_2,
            self.kappa_1,
            self.kappa_2,
            self.kappa_e1,
            self.kappa_e2,
            self.omega_m,
            self.q_m,
            g_1,
            g_2,
        )
    }
}

/// The default device parameter set (photonic-crystal two-mode cavity,
/// telecom-band optical modes, 4 GHz mechanical mode).
///
/// `kappa_2` is taken as an angular rate of 2π × 1.73 GHz for consistency
/// with every other linewidth in the set; pass `kappa_2_hz = 2.7534e8` in a
/// config to get the alternative reading of 1.73e9 rad/s instead. The
/// couplings default to [`DEFAULT_G1`] / [`DEFAULT_G2`].
pub fn default_device_params() -> SystemParams {
    let kappa_1 = hz_to_angular(520e6);
    let kappa_2 = hz_to_angular(1.73e9);
    SystemParams::new(
        hz_to_angular(205.3e12),
        hz_to_angular(194.1e12),
        kappa_1,
        kappa_2,
        0.2 * kappa_1,
        0.42 * kappa_2,
        hz_to_angular(4e9),
        87e3,
        DEFAULT_G1,
        DEFAULT_G2,
    )
    .expect("default parameter set is valid")
}

/// Pump powers, probe power, and pump detunings.
///
/// Detunings follow the cavity-minus-laser convention:
/// `delta_1 = omega_1 - omega_L`, `delta_2 = omega_2 - omega_R`.
/// `+omega_m` is a red-detuned pump, `-omega_m` a blue-detuned pump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig {
    p_left: f64,
    p_right: f64,
    p_probe: f64,
    delta_1: f64,
    delta_2: f64,
}

impl DriveConfig {
    pub fn new(p_left: f64, p_right: f64, p_probe: f64, delta_1: f64, delta_2: f64) -> Result<Self> {
        let powers: [(&'static str, f64); 3] = [
            ("p_left", p_left),
            ("p_right", p_right),
            ("p_probe", p_probe),
        ];
        for (name, v) in powers {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    message: format!("power must be finite and non-negative, got {v:e} W"),
                });
            }
        }
        let detunings: [(&'static str, f64); 2] = [("delta_1", delta_1), ("delta_2", delta_2)];
        for (name, v) in detunings {
            if !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    message: format!("detuning must be finite, got {v:e}"),
                });
            }
        }
        Ok(Self {
            p_left,
            p_right,
            p_probe,
            delta_1,
            delta_2,
        })
    }

    /// Both pumps on their red sidebands (delta = +omega_m).
    pub fn red_red(params: &SystemParams, p_left: f64, p_right: f64, p_probe: f64) -> Result<Self> {
        Self::new(p_left, p_right, p_probe, params.omega_m(), params.omega_m())
    }

    /// Left pump on its blue sideband, right pump on its red sideband.
    pub fn blue_red(params: &SystemParams, p_left: f64, p_right: f64, p_probe: f64) -> Result<Self> {
        Self::new(p_left, p_right, p_probe, -params.omega_m(), params.omega_m())
    }

    pub fn p_left(&self) -> f64 {
        self.p_left
    }
    pub fn p_right(&self) -> f64 {
        self.p_right
    }
    pub fn p_probe(&self) -> f64 {
        self.p_probe
    }
    pub fn delta_1(&self) -> f64 {
        self.delta_1
    }
    pub fn delta_2(&self) -> f64 {
        self.delta_2
    }

    /// Left pump laser frequency, rad/s.
    pub fn omega_laser_left(&self, params: &SystemParams) -> f64 {
        params.omega_1() - self.delta_1
    }

    /// Right pump laser frequency, rad/s.
    pub fn omega_laser_right(&self, params: &SystemParams) -> f64 {
        params.omega_2() - self.delta_2
    }

    /// Checks that both derived pump laser frequencies are positive.
    pub fn validate_lasers(&self, params: &SystemParams) -> Result<()> {
        if self.omega_laser_left(params) <= 0.0 {
            return Err(Error::invalid(
                "delta_1",
                "derived left pump frequency omega_1 - delta_1 is not positive",
            ));
        }
        if self.omega_laser_right(params) <= 0.0 {
            return Err(Error::invalid(
                "delta_2",
                "derived right pump frequency omega_2 - delta_2 is not positive",
            ));
        }
        Ok(())
    }

    pub fn with_p_left(&self, p_left: f64) -> Result<Self> {
        Self::new(p_left, self.p_right, self.p_probe, self.delta_1, self.delta_2)
    }

    pub fn with_p_right(&self, p_right: f64) -> Result<Self> {
        Self::new(self.p_left, p_right, self.p_probe, self.delta_1, self.delta_2)
    }

    pub fn with_p_probe(&self, p_probe: f64) -> Result<Self> {
        Self::new(self.p_left, self.p_right, p_probe, self.delta_1, self.delta_2)
    }
}

/// An ordered grid of probe-cavity detunings (delta_p = omega_p - omega_1).
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeGrid {
    detunings: Vec<f64>,
}

impl ProbeGrid {
    /// Builds a grid from explicit detunings; they must be finite, strictly
    /// increasing, and non-empty.
    pub fn new(detunings: Vec<f64>) -> Result<Self> {
        if detunings.is_empty() {
            return Err(Error::invalid("detunings", "probe grid must be non-empty"));
        }
        if detunings.iter().any(|d| !d.is_finite()) {
            return Err(Error::invalid("detunings", "probe grid entries must be finite"));
        }
        for (i, w) in detunings.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::invalid(
                    "detunings",
                    format!(
                        "probe grid must be strictly increasing; entries {i} and {} are {:e} and {:e}",
                        i + 1,
                        w[0],
                        w[1]
                    ),
                ));
            }
        }
        Ok(Self { detunings })
    }

    /// Uniform grid of `points >= 2` detunings spanning `[min, max]`.
    pub fn linspace(min: f64, max: f64, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::invalid("points", "grid needs at least 2 points"));
        }
        if max.is_nan() || min.is_nan() || max <= min {
            return Err(Error::invalid(
                "detunings",
                format!("grid bounds must satisfy min < max, got [{min:e}, {max:e}]"),
            ));
        }
        let n = points as f64 - 1.0;
        let mut v: Vec<f64> = (0..points)
            .map(|i| min + (max - min) * (i as f64) / n)
            .collect();
        // rounding guard: pin the endpoint exactly
        v[points - 1] = max;
        Self::new(v)
    }

    /// Merges two grids into one strictly increasing grid, dropping duplicates.
    pub fn merge(&self, other: &ProbeGrid) -> ProbeGrid {
        let (a, b) = (&self.detunings, &other.detunings);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) => {
                    if x <= y {
                        i += 1;
                        if x == y {
                            j += 1;
                        }
                        x
                    } else {
                        j += 1;
                        y
                    }
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => break,
            };
            if out.last().is_none_or(|&l| next > l) {
                out.push(next);
            }
        }
        ProbeGrid { detunings: out }
    }

    pub fn detunings(&self) -> &[f64] {
        &self.detunings
    }

    pub fn len(&self) -> usize {
        self.detunings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.detunings.is_empty()
    }
}

/// Pump/probe drive amplitude `sqrt(2 P kappa / (hbar omega))`, s^-1/2.
///
/// Returns 0 for zero power; rejects non-positive `kappa` or `omega_laser`.
pub fn drive_amplitude(power_w: f64, kappa: f64, omega_laser: f64) -> Result<f64> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::invalid(
            "kappa",
            format!("linewidth must be positive, got {kappa:e}"),
        ));
    }
    if !omega_laser.is_finite() || omega_laser <= 0.0 {
        return Err(Error::invalid(
            "omega_laser",
            format!("laser frequency must be positive, got {omega_laser:e}"),
        ));
    }
    if power_w.is_nan() || power_w < 0.0 {
        return Err(Error::invalid(
            "power",
            format!("power must be non-negative, got {power_w:e}"),
        ));
    }
    if power_w == 0.0 {
        return Ok(0.0);
    }
    Ok((2.0 * power_w * kappa / (HBAR * omega_laser)).sqrt())
}

/// Bridges the probe-cavity detuning axis to the probe-pump beat frequency:
/// `delta = omega_p - omega_L = delta_p + delta_1`.
pub fn delta_probe_to_delta(delta_p: f64, delta_1: f64) -> f64 {
    delta_p + delta_1
}
