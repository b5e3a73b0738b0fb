//! Deterministic tabular serialization of sweep results.
//!
//! CSV: `#`-prefixed `key = value` echo lines, a column header, then one row
//! per axis point. JSON: a single document with the config snapshot and the
//! columns as arrays. Numbers are written with 17 significant digits in both
//! formats, so re-parsing reproduces every f64 bit for bit and both formats
//! contain identical number strings (JSON writes NaN as null).

use crate::config::OutputFormat;
use crate::error::{Error, Result};
use crate::experiments::{format_f64, SweepResult};
use std::io::Write;
use std::path::Path;

/// Extra per-point columns derived from the diagnostics, when they are
/// per-point (power sweeps). Spectra carry a single diagnostics entry that
/// is echoed in the header instead.
fn diagnostic_columns(result: &SweepResult) -> Vec<(String, Vec<f64>)> {
    if result.diagnostics.len() != result.axis_values.len() {
        return Vec::new();
    }
    let residual = result.diagnostics.iter().map(|d| d.residual).collect();
    let branches = result
        .diagnostics
        .iter()
        .map(|d| d.branch_count as f64)
        .collect();
    let converged = result
        .diagnostics
        .iter()
        .map(|d| if d.converged { 1.0 } else { 0.0 })
        .collect();
    vec![
        ("residual".into(), residual),
        ("branch_count".into(), branches),
        ("converged".into(), converged),
    ]
}

pub fn write_csv(result: &SweepResult, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "# omit-sim sweep")?;
    writeln!(w, "# label = {}", result.label)?;
    for (k, v) in &result.config_snapshot.entries {
        writeln!(w, "# {k} = {v}")?;
    }
    if result.diagnostics.len() == 1 {
        let d = &result.diagnostics[0];
        writeln!(w, "# residual = {}", format_f64(d.residual))?;
        writeln!(w, "# branch_count = {}", d.branch_count)?;
    }
    let extra = diagnostic_columns(result);
    let mut header = result.axis_name.clone();
    for (name, _) in result.columns.iter().chain(extra.iter()) {
        header.push(',');
        header.push_str(name);
    }
    writeln!(w, "{header}")?;
    let mut line = String::with_capacity(64 * (result.columns.len() + 1));
    for (i, &x) in result.axis_values.iter().enumerate() {
        line.clear();
        line.push_str(&format_f64(x));
        for (_, col) in result.columns.iter().chain(extra.iter()) {
            line.push(',');
            line.push_str(&format_f64(col[i]));
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        format_f64(v)
    } else {
        // NaN / infinities have no JSON literal
        "null".to_string()
    }
}

fn write_json_array(w: &mut dyn Write, values: &[f64]) -> std::io::Result<()> {
    w.write_all(b"[")?;
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            w.write_all(b",")?;
        }
        w.write_all(json_number(v).as_bytes())?;
    }
    w.write_all(b"]")?;
    Ok(())
}

pub fn write_json(result: &SweepResult, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "{{")?;
    writeln!(w, "  \"label\": \"{}\",", json_escape(&result.label))?;
    writeln!(w, "  \"config\": {{")?;
    let n_cfg = result.config_snapshot.entries.len();
    for (i, (k, v)) in result.config_snapshot.entries.iter().enumerate() {
        let comma = if i + 1 < n_cfg { "," } else { "" };
        writeln!(w, "    \"{}\": \"{}\"{comma}", json_escape(k), json_escape(v))?;
    }
    writeln!(w, "  }},")?;
    writeln!(w, "  \"axis_name\": \"{}\",", json_escape(&result.axis_name))?;
    write!(w, "  \"axis\": ")?;
    write_json_array(w, &result.axis_values)?;
    writeln!(w, ",")?;
    writeln!(w, "  \"columns\": {{")?;
    let n_col = result.columns.len();
    for (i, (name, col)) in result.columns.iter().enumerate() {
        write!(w, "    \"{}\": ", json_escape(name))?;
        write_json_array(w, col)?;
        writeln!(w, "{}", if i + 1 < n_col { "," } else { "" })?;
    }
    writeln!(w, "  }},")?;
    writeln!(w, "  \"diagnostics\": {{")?;
    write!(w, "    \"residual\": ")?;
    write_json_array(
        w,
        &result.diagnostics.iter().map(|d| d.residual).collect::<Vec<_>>(),
    )?;
    writeln!(w, ",")?;
    write!(w, "    \"branch_count\": [")?;
    for (i, d) in result.diagnostics.iter().enumerate() {
        if i > 0 {
            w.write_all(b",")?;
        }
        write!(w, "{}", d.branch_count)?;
    }
    writeln!(w, "],")?;
    write!(w, "    \"converged\": [")?;
    for (i, d) in result.diagnostics.iter().enumerate() {
        if i > 0 {
            w.write_all(b",")?;
        }
        write!(w, "{}", d.converged)?;
    }
    writeln!(w, "]")?;
    writeln!(w, "  }}")?;
    writeln!(w, "}}")?;
    Ok(())
}

/// Writes a sweep in the requested format to an arbitrary stream.
pub fn emit_sweep(
    result: &SweepResult,
    format: OutputFormat,
    w: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(result, w),
        OutputFormat::Json => write_json(result, w),
    }
}

/// Writes a sweep to a file path, mapping IO failures to an error carrying
/// the path.
pub fn emit_sweep_to_path(result: &SweepResult, format: OutputFormat, path: &Path) -> Result<()> {
    let wrap = |source: std::io::Error| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let file = std::fs::File::create(path).map_err(wrap)?;
    let mut buf = std::io::BufWriter::new(file);
    emit_sweep(result, format, &mut buf).map_err(wrap)?;
    buf.flush().map_err(wrap)
}
