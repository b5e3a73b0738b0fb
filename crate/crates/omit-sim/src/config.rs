//! Run-configuration ingestion and validation.
//!
//! Configs are flat `key = value` text. Frequencies carry a `_hz` suffix and
//! are converted to angular rates exactly once at parse time; powers carry
//! `_w`. Unknown keys, duplicate keys, and constraint violations are hard
//! errors naming the offending key. Every key is optional; omitted keys take
//! the documented defaults (device defaults, red-red microwatt drive).

use crate::error::{Error, Result};
use crate::experiments::{format_f64, GridSpec, PowerGridSpec, SweepOptions};
use crate::model::{
    hz_to_angular, DriveConfig, SystemParams, DEFAULT_G1, DEFAULT_G2,
};
use crate::response::ResponseChannel;
use crate::steady_state::{QsSign, SolverOptions};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

/// Output serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }

    pub fn extension(self) -> &'static str {
        self.as_str()
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!(
                "format must be `csv` or `json`, got `{other}`"
            ))),
        }
    }
}

/// Fully resolved run configuration. Boundary-unit values (Hz, W) are the
/// source of truth; angular-rate views are derived on demand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub omega_1_hz: f64,
    pub omega_2_hz: f64,
    pub kappa_1_hz: f64,
    pub kappa_2_hz: f64,
    pub kappa_e1_hz: f64,
    pub kappa_e2_hz: f64,
    pub omega_m_hz: f64,
    pub q_m: f64,
    pub g_1_hz: f64,
    pub g_2_hz: f64,

    pub p_left_w: f64,
    pub p_right_w: f64,
    pub p_probe_w: f64,
    pub delta_1_hz: f64,
    pub delta_2_hz: f64,

    pub grid_min_hz: f64,
    pub grid_max_hz: f64,
    pub grid_points: usize,
    pub grid_refine: bool,

    pub power_min_w: f64,
    pub power_max_w: f64,
    pub points_per_decade: usize,
    pub delay_channel: ResponseChannel,

    pub qs_sign: QsSign,
    pub tol: f64,
    pub max_iter: usize,
    pub scan_resolution: usize,

    pub format: OutputFormat,

    /// True when `g_1_hz`/`g_2_hz` were not given and the shipped
    /// calibration defaults were used. Not part of config identity.
    pub g_defaulted: bool,
}

impl PartialEq for RunConfig {
    fn eq(&self, other: &Self) -> bool {
        // provenance flag excluded: it records how the value arrived,
        // not what it is
        self.omega_1_hz == other.omega_1_hz
            && self.omega_2_hz == other.omega_2_hz
            && self.kappa_1_hz == other.kappa_1_hz
            && self.kappa_2_hz == other.kappa_2_hz
            && self.kappa_e1_hz == other.kappa_e1_hz
            && self.kappa_e2_hz == other.kappa_e2_hz
            && self.omega_m_hz == other.omega_m_hz
            && self.q_m == other.q_m
            && self.g_1_hz == other.g_1_hz
            && self.g_2_hz == other.g_2_hz
            && self.p_left_w == other.p_left_w
            && self.p_right_w == other.p_right_w
            && self.p_probe_w == other.p_probe_w
            && self.delta_1_hz == other.delta_1_hz
            && self.delta_2_hz == other.delta_2_hz
            && self.grid_min_hz == other.grid_min_hz
            && self.grid_max_hz == other.grid_max_hz
            && self.grid_points == other.grid_points
            && self.grid_refine == other.grid_refine
            && self.power_min_w == other.power_min_w
            && self.power_max_w == other.power_max_w
            && self.points_per_decade == other.points_per_decade
            && self.delay_channel == other.delay_channel
            && self.qs_sign == other.qs_sign
            && self.tol == other.tol
            && self.max_iter == other.max_iter
            && self.scan_resolution == other.scan_resolution
            && self.format == other.format
    }
}

const KNOWN_KEYS: &[&str] = &[
    "omega_1_hz",
    "omega_2_hz",
    "kappa_1_hz",
    "kappa_2_hz",
    "kappa_e1_hz",
    "kappa_e2_hz",
    "omega_m_hz",
    "q_m",
    "g_1_hz",
    "g_2_hz",
    "p_left_w",
    "p_right_w",
    "p_probe_w",
    "delta_1_hz",
    "delta_2_hz",
    "grid_min_hz",
    "grid_max_hz",
    "grid_points",
    "grid_refine",
    "power_min_w",
    "power_max_w",
    "points_per_decade",
    "delay_channel",
    "qs_sign",
    "tol",
    "max_iter",
    "scan_resolution",
    "format",
];

fn parse_kv(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "line {}: expected `key = value`, got `{}`",
                lineno + 1,
                line
            )));
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::Config(format!(
                "line {}: unknown key `{key}`",
                lineno + 1
            )));
        }
        if map.insert(key.clone(), value).is_some() {
            return Err(Error::Config(format!(
                "line {}: duplicate key `{key}`",
                lineno + 1
            )));
        }
    }
    Ok(map)
}

struct Fields {
    map: BTreeMap<String, String>,
}

impl Fields {
    fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("key `{key}`: `{v}` is not a number"))),
        }
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("key `{key}`: `{v}` is not a non-negative integer"))),
        }
    }

    fn bool_or(&self, key: &str, default: bool) -> Result<bool> {
        match self.map.get(key).map(String::as_str) {
            None => Ok(default),
            Some("true") => Ok(true),
            Some("false") => Ok(false),
            Some(v) => Err(Error::Config(format!(
                "key `{key}`: expected `true` or `false`, got `{v}`"
            ))),
        }
    }
}

fn require_positive(key: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Config(format!(
            "key `{key}`: must be positive and finite, got {v:e}"
        )));
    }
    Ok(())
}

fn require_non_negative(key: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::Config(format!(
            "key `{key}`: must be non-negative and finite, got {v:e}"
        )));
    }
    Ok(())
}

/// Parses and validates a configuration document. An empty document yields
/// the full default configuration.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let fields = Fields {
        map: parse_kv(text)?,
    };
    let f = &fields;

    let omega_1_hz = f.f64_or("omega_1_hz", 205.3e12)?;
    let omega_2_hz = f.f64_or("omega_2_hz", 194.1e12)?;
    let kappa_1_hz = f.f64_or("kappa_1_hz", 520e6)?;
    let kappa_2_hz = f.f64_or("kappa_2_hz", 1.73e9)?;
    let kappa_e1_hz = f.f64_or("kappa_e1_hz", 0.2 * kappa_1_hz)?;
    let kappa_e2_hz = f.f64_or("kappa_e2_hz", 0.42 * kappa_2_hz)?;
    let omega_m_hz = f.f64_or("omega_m_hz", 4e9)?;
    let q_m = f.f64_or("q_m", 87e3)?;
    let g_defaulted = !f.map.contains_key("g_1_hz") && !f.map.contains_key("g_2_hz");
    let g_1_hz = f.f64_or("g_1_hz", DEFAULT_G1 / TAU)?;
    let g_2_hz = f.f64_or("g_2_hz", DEFAULT_G2 / TAU)?;

    let p_left_w = f.f64_or("p_left_w", 1e-6)?;
    let p_right_w = f.f64_or("p_right_w", 1e-7)?;
    let p_probe_w = f.f64_or("p_probe_w", 1e-9)?;
    let delta_1_hz = f.f64_or("delta_1_hz", omega_m_hz)?;
    let delta_2_hz = f.f64_or("delta_2_hz", omega_m_hz)?;

    let grid_min_hz = f.f64_or("grid_min_hz", -3.0 * kappa_1_hz)?;
    let grid_max_hz = f.f64_or("grid_max_hz", 3.0 * kappa_1_hz)?;
    let grid_points = f.usize_or("grid_points", 4001)?;
    let grid_refine = f.bool_or("grid_refine", true)?;

    let power_min_w = f.f64_or("power_min_w", 1e-9)?;
    let power_max_w = f.f64_or("power_max_w", 2e-5)?;
    let points_per_decade = f.usize_or("points_per_decade", 200)?;
    let delay_channel = match f.map.get("delay_channel").map(String::as_str) {
        None | Some("transmission") => ResponseChannel::Transmission,
        Some("reflection") => ResponseChannel::Reflection,
        Some(v) => {
            return Err(Error::Config(format!(
                "key `delay_channel`: expected `transmission` or `reflection`, got `{v}`"
            )))
        }
    };

    let qs_sign = match f.map.get("qs_sign").map(String::as_str) {
        None | Some("plus") => QsSign::Plus,
        Some("minus") => QsSign::Minus,
        Some(v) => {
            return Err(Error::Config(format!(
                "key `qs_sign`: expected `plus` or `minus`, got `{v}`"
            )))
        }
    };
    let tol = f.f64_or("tol", 1e-12)?;
    let max_iter = f.usize_or("max_iter", 10_000)?;
    let scan_resolution = f.usize_or("scan_resolution", 32)?;

    let format: OutputFormat = match f.map.get("format") {
        None => OutputFormat::Csv,
        Some(v) => v.parse()?,
    };

    // constraint validation, naming config keys
    for (key, v) in [
        ("omega_1_hz", omega_1_hz),
        ("omega_2_hz", omega_2_hz),
        ("kappa_1_hz", kappa_1_hz),
        ("kappa_2_hz", kappa_2_hz),
        ("omega_m_hz", omega_m_hz),
        ("q_m", q_m),
        ("tol", tol),
    ] {
        require_positive(key, v)?;
    }
    for (key, v) in [
        ("kappa_e1_hz", kappa_e1_hz),
        ("kappa_e2_hz", kappa_e2_hz),
        ("g_1_hz", g_1_hz),
        ("g_2_hz", g_2_hz),
        ("p_left_w", p_left_w),
        ("p_right_w", p_right_w),
        ("p_probe_w", p_probe_w),
    ] {
        require_non_negative(key, v)?;
    }
    if kappa_e1_hz <= 0.0 {
        return Err(Error::Config(
            "key `kappa_e1_hz`: must be positive (the probe couples through the left port)".into(),
        ));
    }
    if kappa_e2_hz <= 0.0 {
        return Err(Error::Config("key `kappa_e2_hz`: must be positive".into()));
    }
    if kappa_e1_hz > kappa_1_hz {
        return Err(Error::Config(format!(
            "key `kappa_e1_hz`: external coupling {kappa_e1_hz:e} exceeds kappa_1_hz = {kappa_1_hz:e}"
        )));
    }
    if kappa_e2_hz > kappa_2_hz {
        return Err(Error::Config(format!(
            "key `kappa_e2_hz`: external coupling {kappa_e2_hz:e} exceeds kappa_2_hz = {kappa_2_hz:e}"
        )));
    }
    if omega_1_hz - delta_1_hz <= 0.0 {
        return Err(Error::Config(format!(
            "key `delta_1_hz`: derived left pump frequency omega_1_hz - delta_1_hz = {:e} is not positive",
            omega_1_hz - delta_1_hz
        )));
    }
    if omega_2_hz - delta_2_hz <= 0.0 {
        return Err(Error::Config(format!(
            "key `delta_2_hz`: derived right pump frequency omega_2_hz - delta_2_hz = {:e} is not positive",
            omega_2_hz - delta_2_hz
        )));
    }
    if grid_points < 2 {
        return Err(Error::Config(format!(
            "key `grid_points`: need at least 2 points, got {grid_points}"
        )));
    }
    if grid_max_hz.is_nan() || grid_min_hz.is_nan() || grid_max_hz <= grid_min_hz {
        return Err(Error::Config(format!(
            "key `grid_min_hz`/`grid_max_hz`: need min < max, got [{grid_min_hz:e}, {grid_max_hz:e}]"
        )));
    }
    require_positive("power_min_w", power_min_w)?;
    if power_max_w.is_nan() || power_min_w.is_nan() || power_max_w <= power_min_w {
        return Err(Error::Config(format!(
            "key `power_min_w`/`power_max_w`: need min < max, got [{power_min_w:e}, {power_max_w:e}]"
        )));
    }
    if points_per_decade == 0 {
        return Err(Error::Config(
            "key `points_per_decade`: must be at least 1".into(),
        ));
    }
    if max_iter == 0 {
        return Err(Error::Config("key `max_iter`: must be at least 1".into()));
    }
    if scan_resolution < 16 {
        return Err(Error::Config(format!(
            "key `scan_resolution`: need at least 16 cells per axis, got {scan_resolution}"
        )));
    }

    let cfg = RunConfig {
        omega_1_hz,
        omega_2_hz,
        kappa_1_hz,
        kappa_2_hz,
        kappa_e1_hz,
        kappa_e2_hz,
        omega_m_hz,
        q_m,
        g_1_hz,
        g_2_hz,
        p_left_w,
        p_right_w,
        p_probe_w,
        delta_1_hz,
        delta_2_hz,
        grid_min_hz,
        grid_max_hz,
        grid_points,
        grid_refine,
        power_min_w,
        power_max_w,
        points_per_decade,
        delay_channel,
        qs_sign,
        tol,
        max_iter,
        scan_resolution,
        format,
        g_defaulted,
    };
    // run the typed constructors so any invariant missed above still trips
    cfg.params()?;
    cfg.drive()?;
    Ok(cfg)
}

/// Canonical serialization: every key, fixed order, 17-significant-digit
/// numbers. `parse_config(serialize(cfg))` reproduces `cfg` exactly.
pub fn serialize(cfg: &RunConfig) -> String {
    let mut out = String::with_capacity(1024);
    let mut kv = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    };
    kv("omega_1_hz", format_f64(cfg.omega_1_hz));
    kv("omega_2_hz", format_f64(cfg.omega_2_hz));
    kv("kappa_1_hz", format_f64(cfg.kappa_1_hz));
    kv("kappa_2_hz", format_f64(cfg.kappa_2_hz));
    kv("kappa_e1_hz", format_f64(cfg.kappa_e1_hz));
    kv("kappa_e2_hz", format_f64(cfg.kappa_e2_hz));
    kv("omega_m_hz", format_f64(cfg.omega_m_hz));
    kv("q_m", format_f64(cfg.q_m));
    kv("g_1_hz", format_f64(cfg.g_1_hz));
    kv("g_2_hz", format_f64(cfg.g_2_hz));
    kv("p_left_w", format_f64(cfg.p_left_w));
    kv("p_right_w", format_f64(cfg.p_right_w));
    kv("p_probe_w", format_f64(cfg.p_probe_w));
    kv("delta_1_hz", format_f64(cfg.delta_1_hz));
    kv("delta_2_hz", format_f64(cfg.delta_2_hz));
    kv("grid_min_hz", format_f64(cfg.grid_min_hz));
    kv("grid_max_hz", format_f64(cfg.grid_max_hz));
    kv("grid_points", cfg.grid_points.to_string());
    kv("grid_refine", cfg.grid_refine.to_string());
    kv("power_min_w", format_f64(cfg.power_min_w));
    kv("power_max_w", format_f64(cfg.power_max_w));
    kv("points_per_decade", cfg.points_per_decade.to_string());
    kv("delay_channel", cfg.delay_channel.as_str().to_string());
    kv(
        "qs_sign",
        match cfg.qs_sign {
            QsSign::Plus => "plus",
            QsSign::Minus => "minus",
        }
        .to_string(),
    );
    kv("tol", format_f64(cfg.tol));
    kv("max_iter", cfg.max_iter.to_string());
    kv("scan_resolution", cfg.scan_resolution.to_string());
    kv("format", cfg.format.as_str().to_string());
    out
}

impl RunConfig {
    pub fn params(&self) -> Result<SystemParams> {
        SystemParams::new(
            hz_to_angular(self.omega_1_hz),
            hz_to_angular(self.omega_2_hz),
            hz_to_angular(self.kappa_1_hz),
            hz_to_angular(self.kappa_2_hz),
            hz_to_angular(self.kappa_e1_hz),
            hz_to_angular(self.kappa_e2_hz),
            hz_to_angular(self.omega_m_hz),
            self.q_m,
            hz_to_angular(self.g_1_hz),
            hz_to_angular(self.g_2_hz),
        )
    }

    pub fn drive(&self) -> Result<DriveConfig> {
        DriveConfig::new(
            self.p_left_w,
            self.p_right_w,
            self.p_probe_w,
            hz_to_angular(self.delta_1_hz),
            hz_to_angular(self.delta_2_hz),
        )
    }

    pub fn grid_spec(&self) -> GridSpec {
        GridSpec {
            min: hz_to_angular(self.grid_min_hz),
            max: hz_to_angular(self.grid_max_hz),
            points: self.grid_points,
            refine: self.grid_refine,
        }
    }

    pub fn power_spec(&self) -> PowerGridSpec {
        PowerGridSpec {
            min_w: self.power_min_w,
            max_w: self.power_max_w,
            points_per_decade: self.points_per_decade,
        }
    }

    pub fn solver_options(&self) -> SolverOptions {
        SolverOptions {
            tol: self.tol,
            max_iter: self.max_iter,
            qs_sign: self.qs_sign,
            scan_resolution: self.scan_resolution,
        }
    }

    pub fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            solver: self.solver_options(),
            delay_step: None,
        }
    }

    /// Non-fatal observations (resolved-sideband violations, defaulted
    /// couplings) for the caller to surface.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.g_defaulted {
            notes.push(format!(
                "g_1_hz/g_2_hz not set; using calibration defaults {} / {} Hz (regime \
                 placeholders, not measured device values)",
                self.g_1_hz, self.g_2_hz
            ));
        }
        if let Ok(p) = self.params() {
            if !p.resolved_sideband() {
                notes.push(
                    "omega_m does not exceed both cavity linewidths; outside the \
                     resolved-sideband regime the sideband picture degrades"
                        .to_string(),
                );
            }
        }
        notes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::default_device_params;

    #[test]
    fn empty_config_equals_device_defaults() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg.params().unwrap(), default_device_params());
        assert!(cfg.g_defaulted);
        let d = cfg.drive().unwrap();
        assert_eq!(d.p_left(), 1e-6);
        assert_eq!(d.p_right(), 1e-7);
        assert_eq!(d.delta_1(), hz_to_angular(4e9));
        assert_eq!(cfg.format, OutputFormat::Csv);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let cfg = parse_config(
            "# a comment\n\n  p_left_w = 2e-6  # trailing comment\n\nformat = json\n",
        )
        .unwrap();
        assert_eq!(cfg.p_left_w, 2e-6);
        assert_eq!(cfg.format, OutputFormat::Json);
    }

    #[test]
    fn unknown_key_is_rejected_with_name() {
        let err = parse_config("kappa_3_hz = 1e9\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("kappa_3_hz"), "{msg}");
    }

    #[test]
    fn duplicate_key_is_rejected() {
        let err = parse_config("q_m = 1e3\nq_m = 2e3\n").unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn external_coupling_above_linewidth_is_rejected() {
        let err = parse_config("kappa_1_hz = 5e8\nkappa_e1_hz = 6e8\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("kappa_e1_hz"), "{msg}");
        assert!(msg.contains("exceeds"), "{msg}");
    }

    #[test]
    fn kappa_e_default_tracks_kappa() {
        let cfg = parse_config("kappa_1_hz = 1e9\n").unwrap();
        assert_eq!(cfg.kappa_e1_hz, 0.2e9);
    }

    #[test]
    fn negative_rate_is_rejected() {
        assert!(parse_config("omega_m_hz = -4e9\n").is_err());
        assert!(parse_config("p_left_w = -1e-9\n").is_err());
        assert!(parse_config("tol = 0\n").is_err());
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(parse_config("this is not a kv line\n").is_err());
        assert!(parse_config("q_m = not_a_number\n").is_err());
        assert!(parse_config("grid_refine = yes\n").is_err());
    }

    #[test]
    fn serialize_round_trips_exactly() {
        let text = "kappa_2_hz = 2.7534e8\ng_1_hz = 333.25\np_probe_w = 7.77e-10\nqs_sign = minus\nformat = json\ndelay_channel = reflection\n";
        let once = parse_config(text).unwrap();
        let twice = parse_config(&serialize(&once)).unwrap();
        assert_eq!(once, twice);
        // and serialization is a fixed point
        assert_eq!(serialize(&once), serialize(&twice));
    }

    #[test]
    fn defaulted_couplings_carry_a_note() {
        let with_note = parse_config("").unwrap();
        assert!(with_note.notes().iter().any(|n| n.contains("calibration defaults")));
        let without = parse_config("g_1_hz = 100\ng_2_hz = 50\n").unwrap();
        assert!(!without.notes().iter().any(|n| n.contains("calibration defaults")));
    }

    #[test]
    fn unresolved_sideband_is_a_note_not_an_error() {
        let cfg = parse_config("omega_m_hz = 1e8\n").unwrap();
        assert!(cfg.notes().iter().any(|n| n.contains("resolved-sideband")));
    }
}
