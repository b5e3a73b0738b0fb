//! Scenario runners: probe spectra, pump-power delay sweeps, and the four
//! canonical experiment configurations (transparency family, magnitude and
//! phase, delay versus power, amplification).

use crate::error::{Error, Result};
use crate::model::{delta_probe_to_delta, DriveConfig, ProbeGrid, SystemParams};
use crate::response::{
    effective_linewidth, group_delay, transmission, ResponseChannel,
};
use crate::single_mode;
use crate::steady_state::{solve_steady_state, QsSign, SolverOptions, SteadyState};
use std::fmt;

/// Uniform probe-grid specification with an optional dense refinement
/// window around `delta_p = 0` (added after the steady state is known, so
/// the refinement can track the effective linewidth).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub refine: bool,
}

impl GridSpec {
    /// Broad default panel: `[-3 kappa_1, +3 kappa_1]` with 4001 points and
    /// automatic refinement.
    pub fn default_broad(params: &SystemParams) -> Self {
        Self {
            min: -3.0 * params.kappa_1(),
            max: 3.0 * params.kappa_1(),
            points: 4001,
            refine: true,
        }
    }
}

/// Logarithmic pump-power grid, `points_per_decade` points per decade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerGridSpec {
    pub min_w: f64,
    pub max_w: f64,
    pub points_per_decade: usize,
}

impl Default for PowerGridSpec {
    fn default() -> Self {
        Self {
            min_w: 1e-9,
            max_w: 2e-5,
            points_per_decade: 200,
        }
    }
}

impl PowerGridSpec {
    pub fn to_powers(&self) -> Result<Vec<f64>> {
        if self.min_w.is_nan() || self.min_w <= 0.0 || self.max_w.is_nan() || self.max_w <= self.min_w {
            return Err(Error::invalid(
                "power_grid",
                format!("need 0 < min < max, got [{:e}, {:e}]", self.min_w, self.max_w),
            ));
        }
        if self.points_per_decade == 0 {
            return Err(Error::invalid("points_per_decade", "must be at least 1"));
        }
        let decades = (self.max_w / self.min_w).log10();
        let steps = (decades * self.points_per_decade as f64).ceil() as usize;
        let mut powers: Vec<f64> = (0..=steps)
            .map(|i| self.min_w * 10f64.powf(i as f64 / self.points_per_decade as f64))
            .take_while(|&p| p < self.max_w)
            .collect();
        powers.push(self.max_w);
        Ok(powers)
    }
}

/// Per-run controls shared by all sweep operations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SweepOptions {
    pub solver: SolverOptions,
    /// Explicit finite-difference step for delays; `None` picks the
    /// effective-linewidth based default.
    pub delay_step: Option<f64>,
}

/// Solver outcome of one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointDiagnostics {
    pub residual: f64,
    pub branch_count: usize,
    pub converged: bool,
    pub message: Option<String>,
}

/// Canonical key/value echo of everything needed to reproduce a sweep.
/// Values are serialized with 17 significant digits, so reconstructing the
/// inputs from the snapshot reproduces the run bit for bit.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConfigSnapshot {
    pub entries: Vec<(String, String)>,
}

impl ConfigSnapshot {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn get_f64(&self, key: &str) -> Option<f64> {
        self.get(key)?.parse().ok()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push((key.into(), value.into()));
    }
}

/// 17-significant-digit decimal form; round-trips every finite f64 exactly.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn snapshot(params: &SystemParams, drive: &DriveConfig, opts: &SweepOptions) -> ConfigSnapshot {
    let mut s = ConfigSnapshot::default();
    s.push("omega_1_rad_s", format_f64(params.omega_1()));
    s.push("omega_2_rad_s", format_f64(params.omega_2()));
    s.push("kappa_1_rad_s", format_f64(params.kappa_1()));
    s.push("kappa_2_rad_s", format_f64(params.kappa_2()));
    s.push("kappa_e1_rad_s", format_f64(params.kappa_e1()));
    s.push("kappa_e2_rad_s", format_f64(params.kappa_e2()));
    s.push("omega_m_rad_s", format_f64(params.omega_m()));
    s.push("q_m", format_f64(params.q_m()));
    s.push("g_1_rad_s", format_f64(params.g_1()));
    s.push("g_2_rad_s", format_f64(params.g_2()));
    s.push("gamma_m_rad_s", format_f64(params.gamma_m()));
    s.push("p_left_w", format_f64(drive.p_left()));
    s.push("p_right_w", format_f64(drive.p_right()));
    s.push("p_probe_w", format_f64(drive.p_probe()));
    s.push("delta_1_rad_s", format_f64(drive.delta_1()));
    s.push("delta_2_rad_s", format_f64(drive.delta_2()));
    s.push(
        "qs_sign",
        match opts.solver.qs_sign {
            QsSign::Plus => "plus",
            QsSign::Minus => "minus",
        },
    );
    s.push("tol", format_f64(opts.solver.tol));
    s.push("max_iter", opts.solver.max_iter.to_string());
    s.push("scan_resolution", opts.solver.scan_resolution.to_string());
    if let Some(h) = opts.delay_step {
        s.push("delay_step_rad_s", format_f64(h));
    }
    s
}

/// Reconstructs the physics inputs recorded by [`ConfigSnapshot`] entries.
pub fn inputs_from_snapshot(
    snap: &ConfigSnapshot,
) -> Result<(SystemParams, DriveConfig, SweepOptions)> {
    let f = |key: &str| -> Result<f64> {
        snap.get_f64(key)
            .ok_or_else(|| Error::Config(format!("snapshot is missing `{key}`")))
    };
    let params = SystemParams::new(
        f("omega_1_rad_s")?,
        f("omega_2_rad_s")?,
        f("kappa_1_rad_s")?,
        f("kappa_2_rad_s")?,
        f("kappa_e1_rad_s")?,
        f("kappa_e2_rad_s")?,
        f("omega_m_rad_s")?,
        f("q_m")?,
        f("g_1_rad_s")?,
        f("g_2_rad_s")?,
    )?;
    let drive = DriveConfig::new(
        f("p_left_w")?,
        f("p_right_w")?,
        f("p_probe_w")?,
        f("delta_1_rad_s")?,
        f("delta_2_rad_s")?,
    )?;
    let solver = SolverOptions {
        tol: f("tol")?,
        max_iter: snap
            .get("max_iter")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Config("snapshot is missing `max_iter`".into()))?,
        qs_sign: match snap.get("qs_sign") {
            Some("minus") => QsSign::Minus,
            _ => QsSign::Plus,
        },
        scan_resolution: snap
            .get("scan_resolution")
            .and_then(|v| v.parse().ok())
            .unwrap_or(32),
    };
    let delay_step = snap.get_f64("delay_step_rad_s");
    Ok((
        params,
        drive,
        SweepOptions {
            solver,
            delay_step,
        },
    ))
}

/// Ordered table of response quantities over a detuning or power axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Panel identifier, also used for output file naming.
    pub label: String,
    pub axis_name: String,
    pub axis_values: Vec<f64>,
    /// Named series; every series has exactly `axis_values.len()` entries.
    pub columns: Vec<(String, Vec<f64>)>,
    pub config_snapshot: ConfigSnapshot,
    /// One entry per solve: a single entry for spectra (one steady state
    /// serves the whole grid), one entry per point for power sweeps.
    pub diagnostics: Vec<PointDiagnostics>,
}

impl SweepResult {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }
}

fn diag_of(st: &SteadyState) -> PointDiagnostics {
    PointDiagnostics {
        residual: st.residual,
        branch_count: st.branch_count,
        converged: true,
        message: None,
    }
}

/// Signed total effective mechanical linewidth
/// `gamma_m (1 + C_1 sgn Delta_1' + C_2 sgn Delta_2')`. Red-detuned pumps
/// broaden the window, blue-detuned pumps narrow it. Used to size
/// refinement windows and delay steps.
fn signed_total_linewidth(params: &SystemParams, steady: &SteadyState) -> f64 {
    let gm = params.gamma_m();
    let c1 = params.g_1() * params.g_1() * steady.n_1 / (params.kappa_1() * gm);
    let c2 = params.g_2() * params.g_2() * steady.n_2 / (params.kappa_2() * gm);
    gm * (1.0 + c1 * steady.delta_1_eff.signum() + c2 * steady.delta_2_eff.signum())
}

/// Builds the evaluation grid for a spectrum: the broad uniform panel, plus
/// (when `spec.refine` is set) a dense 2001-point window around
/// `delta_p = 0` sized to 20 effective linewidths so the transparency or
/// gain feature is resolved.
pub fn build_probe_grid(
    params: &SystemParams,
    drive: &DriveConfig,
    spec: &GridSpec,
    opts: &SweepOptions,
) -> Result<ProbeGrid> {
    let broad = ProbeGrid::linspace(spec.min, spec.max, spec.points)?;
    if !spec.refine {
        return Ok(broad);
    }
    let steady = solve_steady_state(params, drive, &opts.solver)?;
    let gamma_eff = effective_linewidth(params, &steady).gamma_eff;
    let signed = signed_total_linewidth(params, &steady).abs();
    let width = gamma_eff.min(signed.max(params.gamma_m() * 1e-2));
    let half = 10.0 * width;
    if half <= 0.0 || !half.is_finite() {
        return Ok(broad);
    }
    let dense = ProbeGrid::linspace(-half, half, 2001)?;
    Ok(broad.merge(&dense))
}

/// One steady-state solve, then the probe response over `grid`.
/// Columns: `abs_t`, `abs_t_sq`, `phase_t_rad`.
pub fn spectrum_sweep(
    params: &SystemParams,
    drive: &DriveConfig,
    grid: &ProbeGrid,
    opts: &SweepOptions,
) -> Result<SweepResult> {
    let steady = solve_steady_state(params, drive, &opts.solver)?;
    let n = grid.len();
    let mut abs_t = Vec::with_capacity(n);
    let mut abs_t_sq = Vec::with_capacity(n);
    let mut phase = Vec::with_capacity(n);
    for &dp in grid.detunings() {
        let t = transmission(params, &steady, delta_probe_to_delta(dp, drive.delta_1()));
        abs_t.push(t.norm());
        abs_t_sq.push(t.norm_sqr());
        phase.push(t.arg());
    }
    let mut snap = snapshot(params, drive, opts);
    snap.push("axis", "delta_p_rad_s");
    snap.push("n_1", format_f64(steady.n_1));
    snap.push("n_2", format_f64(steady.n_2));
    snap.push("q_s", format_f64(steady.q_s));
    snap.push("delta_1_eff_rad_s", format_f64(steady.delta_1_eff));
    snap.push("delta_2_eff_rad_s", format_f64(steady.delta_2_eff));
    snap.push(
        "gamma_eff_rad_s",
        format_f64(effective_linewidth(params, &steady).gamma_eff),
    );
    Ok(SweepResult {
        label: "spectrum".into(),
        axis_name: "delta_p_rad_s".into(),
        axis_values: grid.detunings().to_vec(),
        columns: vec![
            ("abs_t".into(), abs_t),
            ("abs_t_sq".into(), abs_t_sq),
            ("phase_t_rad".into(), phase),
        ],
        config_snapshot: snap,
        diagnostics: vec![diag_of(&steady)],
    })
}

/// Group delay at `delta_p = 0` versus left pump power: one steady-state
/// re-solve per point. Columns: `tau_s`, `n_1`, `n_2`, `gamma_eff_rad_s`.
/// Failed points are recorded in the diagnostics (NaN in the columns) and
/// the sweep continues.
pub fn power_sweep_delay(
    params: &SystemParams,
    drive_template: &DriveConfig,
    powers: &[f64],
    which: ResponseChannel,
    opts: &SweepOptions,
) -> Result<SweepResult> {
    if powers.is_empty() {
        return Err(Error::invalid("powers", "power list must be non-empty"));
    }
    if powers.iter().any(|&p| !p.is_finite() || p < 0.0) {
        return Err(Error::invalid("powers", "powers must be finite and non-negative"));
    }
    let n = powers.len();
    let mut tau = Vec::with_capacity(n);
    let mut n_1 = Vec::with_capacity(n);
    let mut n_2 = Vec::with_capacity(n);
    let mut gamma_eff = Vec::with_capacity(n);
    let mut diagnostics = Vec::with_capacity(n);
    for &p_left in powers {
        let point = drive_template
            .with_p_left(p_left)
            .and_then(|d| {
                let st = solve_steady_state(params, &d, &opts.solver)?;
                let delta = delta_probe_to_delta(0.0, d.delta_1());
                let step = opts
                    .delay_step
                    .unwrap_or_else(|| delay_step_for(params, &st));
                let tau = group_delay(params, &st, delta, which, Some(step))?;
                Ok((st, tau))
            });
        match point {
            Ok((st, t)) => {
                tau.push(t);
                n_1.push(st.n_1);
                n_2.push(st.n_2);
                gamma_eff.push(effective_linewidth(params, &st).gamma_eff);
                diagnostics.push(diag_of(&st));
            }
            Err(e) => {
                tau.push(f64::NAN);
                n_1.push(f64::NAN);
                n_2.push(f64::NAN);
                gamma_eff.push(f64::NAN);
                diagnostics.push(PointDiagnostics {
                    residual: f64::NAN,
                    branch_count: 0,
                    converged: false,
                    message: Some(e.to_string()),
                });
            }
        }
    }
    let mut snap = snapshot(params, drive_template, opts);
    snap.push("axis", "p_left_w");
    snap.push("delay_channel", which.as_str());
    Ok(SweepResult {
        label: format!("delay_{}", which.as_str()),
        axis_name: "p_left_w".into(),
        axis_values: powers.to_vec(),
        columns: vec![
            ("tau_s".into(), tau),
            ("n_1".into(), n_1),
            ("n_2".into(), n_2),
            ("gamma_eff_rad_s".into(), gamma_eff),
        ],
        config_snapshot: snap,
        diagnostics,
    })
}

/// Delay finite-difference step: a fiftieth of the narrowest effective
/// feature, using the signed total linewidth so gain-narrowed windows are
/// still resolved.
fn delay_step_for(params: &SystemParams, steady: &SteadyState) -> f64 {
    let gamma_eff = effective_linewidth(params, steady).gamma_eff;
    let signed = signed_total_linewidth(params, steady).abs();
    (gamma_eff.min(signed.max(params.gamma_m() * 1e-2)) / 50.0)
        .max(1e3 * f64::EPSILON * params.omega_m())
}

/// The closed-form single-cavity transparency spectrum, evaluated through
/// [`crate::single_mode`] (a code path independent of the two-mode
/// response). Requires the right pump to be off.
pub fn single_mode_oracle_spectrum(
    params: &SystemParams,
    drive: &DriveConfig,
    grid: &ProbeGrid,
    opts: &SweepOptions,
) -> Result<SweepResult> {
    if drive.p_right() != 0.0 {
        return Err(Error::Precondition(format!(
            "single-mode oracle requires p_right = 0, got {:e} W",
            drive.p_right()
        )));
    }
    let n = single_mode::photon_number(params, drive)?;
    let len = grid.len();
    let mut abs_t = Vec::with_capacity(len);
    let mut abs_t_sq = Vec::with_capacity(len);
    let mut phase = Vec::with_capacity(len);
    for &dp in grid.detunings() {
        let t = single_mode::transmission_formula(
            params,
            drive,
            n,
            delta_probe_to_delta(dp, drive.delta_1()),
        );
        abs_t.push(t.norm());
        abs_t_sq.push(t.norm_sqr());
        phase.push(t.arg());
    }
    let mut snap = snapshot(params, drive, opts);
    snap.push("axis", "delta_p_rad_s");
    snap.push("model", "single_mode_oracle");
    snap.push("n_1", format_f64(n));
    Ok(SweepResult {
        label: "single_mode_oracle".into(),
        axis_name: "delta_p_rad_s".into(),
        axis_values: grid.detunings().to_vec(),
        columns: vec![
            ("abs_t".into(), abs_t),
            ("abs_t_sq".into(), abs_t_sq),
            ("phase_t_rad".into(), phase),
        ],
        config_snapshot: snap,
        diagnostics: vec![PointDiagnostics {
            residual: 0.0,
            branch_count: 1,
            converged: true,
            message: None,
        }],
    })
}

/// The four canonical experiment configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl std::str::FromStr for FigureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(FigureId::Fig2),
            "fig3" => Ok(FigureId::Fig3),
            "fig4" => Ok(FigureId::Fig4),
            "fig5" => Ok(FigureId::Fig5),
            other => Err(Error::Usage(format!(
                "unknown figure id `{other}` (expected fig2, fig3, fig4, or fig5)"
            ))),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        })
    }
}

/// Caller-adjustable knobs for [`run_figure`]; the drive configurations
/// themselves are fixed by the figure definitions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureOptions {
    pub sweep: SweepOptions,
    /// Probe grid for spectrum panels; `None` uses the broad default.
    pub grid: Option<GridSpec>,
    /// Pump power grid for delay panels.
    pub powers: PowerGridSpec,
    /// Probe power used where a probe is required, W.
    pub p_probe: f64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            sweep: SweepOptions::default(),
            grid: None,
            powers: PowerGridSpec::default(),
            p_probe: 1e-9,
        }
    }
}

const UW: f64 = 1e-6;

/// Runs the drive configuration of the named figure and returns one
/// [`SweepResult`] per panel.
///
/// * `fig2` — transparency family: red-red drive, `P_R = 0.1 uW`,
///   `P_L in {0, 0.1, 1, 10} uW`; four spectrum panels.
/// * `fig3` — magnitude and phase at `P_L = 10 uW`, `P_R = 0.1 uW`.
/// * `fig4` — group delay at `delta_p = 0` versus `P_L`: transmitted beam
///   with `P_R = 0.1 uW`, with `P_R = 0`, with `kappa_e1 = 0.6 kappa_1`
///   (right pump off), and the reflected beam with `P_R = 0.1 uW`.
/// * `fig5` — amplification: blue-red drive, `P_L = P_R = 0.1 uW`.
pub fn run_figure(
    figure: FigureId,
    params: &SystemParams,
    opts: &FigureOptions,
) -> Result<Vec<SweepResult>> {
    let grid_spec = opts.grid.unwrap_or_else(|| GridSpec::default_broad(params));
    let spectrum = |params: &SystemParams, drive: &DriveConfig, label: &str| -> Result<SweepResult> {
        let grid = build_probe_grid(params, drive, &grid_spec, &opts.sweep)?;
        let mut r = spectrum_sweep(params, drive, &grid, &opts.sweep)?;
        r.label = label.to_string();
        Ok(r)
    };
    match figure {
        FigureId::Fig2 => {
            let mut out = Vec::with_capacity(4);
            for (label, p_left) in [
                ("fig2_PL0uW", 0.0),
                ("fig2_PL0.1uW", 0.1 * UW),
                ("fig2_PL1uW", 1.0 * UW),
                ("fig2_PL10uW", 10.0 * UW),
            ] {
                let drive = DriveConfig::red_red(params, p_left, 0.1 * UW, opts.p_probe)?;
                out.push(spectrum(params, &drive, label)?);
            }
            Ok(out)
        }
        FigureId::Fig3 => {
            let drive = DriveConfig::red_red(params, 10.0 * UW, 0.1 * UW, opts.p_probe)?;
            Ok(vec![spectrum(params, &drive, "fig3_magnitude_phase")?])
        }
        FigureId::Fig4 => {
            let powers = opts.powers.to_powers()?;
            let template = DriveConfig::red_red(params, 0.0, 0.1 * UW, opts.p_probe)?;
            let template_off = template.with_p_right(0.0)?;
            let boosted = params.with_kappa_e1(0.6 * params.kappa_1())?;

            let mut a = power_sweep_delay(
                params,
                &template,
                &powers,
                ResponseChannel::Transmission,
                &opts.sweep,
            )?;
            a.label = "fig4_PR0.1uW".into();
            let mut b = power_sweep_delay(
                params,
                &template_off,
                &powers,
                ResponseChannel::Transmission,
                &opts.sweep,
            )?;
            b.label = "fig4_PR0".into();
            let mut c = power_sweep_delay(
                &boosted,
                &template_off,
                &powers,
                ResponseChannel::Transmission,
                &opts.sweep,
            )?;
            c.label = "fig4_ke1_0.6kappa1".into();
            let mut d = power_sweep_delay(
                params,
                &template,
                &powers,
                ResponseChannel::Reflection,
                &opts.sweep,
            )?;
            d.label = "fig4_reflection".into();
            Ok(vec![a, b, c, d])
        }
        FigureId::Fig5 => {
            let drive = DriveConfig::blue_red(params, 0.1 * UW, 0.1 * UW, opts.p_probe)?;
            let mut r = spectrum(params, &drive, "fig5_spectrum")?;
            r.label = "fig5_spectrum".into();
            Ok(vec![r])
        }
    }
}

/// Width measurement of the transparency (or gain) feature between the two
/// flanking dips of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowMeasure {
    /// Axis location of the window maximum.
    pub center: f64,
    /// Full width at half maximum of the feature above its dip baseline.
    pub fwhm: f64,
    pub peak: f64,
    pub baseline: f64,
}

/// Measures the central feature of a spectrum column: locates the deepest
/// dip on each side of axis zero, takes the maximum between them as the
/// window top, and interpolates the half-height crossings relative to the
/// dip baseline. Returns `None` when the structure is absent.
pub fn transparency_window_fwhm(axis: &[f64], values: &[f64]) -> Option<WindowMeasure> {
    if axis.len() != values.len() || axis.len() < 5 {
        return None;
    }
    let mid = axis.partition_point(|&x| x < 0.0).min(axis.len() - 1);
    let (left_min, _) = values[..mid]
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))?;
    let right_rel = values[mid..]
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))?
        .0;
    let right_min = mid + right_rel;
    if right_min <= left_min + 1 {
        return None;
    }
    let (peak_rel, &peak) = values[left_min..=right_min]
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))?;
    let peak_idx = left_min + peak_rel;
    if peak_idx == left_min || peak_idx == right_min {
        return None;
    }
    let baseline = values[left_min].max(values[right_min]);
    if peak <= baseline {
        return None;
    }
    let half = 0.5 * (peak + baseline);

    let crossing = |from: usize, to: i64, step: i64| -> Option<f64> {
        let mut i = from as i64;
        while i != to {
            let j = (i + step) as usize;
            let (a, b) = (values[i as usize], values[j]);
            if (a >= half) != (b >= half) {
                let f = (half - a) / (b - a);
                return Some(axis[i as usize] + f * (axis[j] - axis[i as usize]));
            }
            i += step;
        }
        None
    };
    let left = crossing(peak_idx, left_min as i64, -1)?;
    let right = crossing(peak_idx, right_min as i64, 1)?;
    Some(WindowMeasure {
        center: axis[peak_idx],
        fwhm: right - left,
        peak,
        baseline,
    })
}
