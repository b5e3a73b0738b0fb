//! Command dispatch for the `omit-sim` binary.
//!
//! Commands: `steady-state`, `spectrum`, `delay-sweep`, `figure`,
//! `validate`. Diagnostics go to stderr; data goes to stdout or to the
//! requested files. Exit codes: 0 success, 1 usage/config error, 2 solver
//! failure, 3 IO failure.

use crate::config::{parse_config, OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::experiments::{
    build_probe_grid, format_f64, power_sweep_delay, run_figure, spectrum_sweep, FigureId,
    FigureOptions, SweepResult,
};
use crate::output::{emit_sweep, emit_sweep_to_path};
use crate::response::effective_linewidth;
use crate::steady_state::solve_steady_state;
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable overriding the output directory of `figure`.
pub const OUT_DIR_ENV: &str = "OMIT_SIM_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "omit-sim",
    version,
    about = "Steady state and probe response of a two-mode optomechanical cavity system"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve and print the pump steady state
    SteadyState(CommonArgs),
    /// Probe transmission spectrum over the configured detuning grid
    Spectrum(CommonArgs),
    /// Group delay at delta_p = 0 versus left pump power
    DelaySweep(CommonArgs),
    /// Run a canonical experiment (fig2|fig3|fig4|fig5); one file per panel
    Figure {
        /// Which experiment: fig2, fig3, fig4, or fig5
        id: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Parse and validate a config file, then exit
    Validate {
        /// Run configuration file
        config: PathBuf,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Run configuration file (defaults apply when omitted)
    config: Option<PathBuf>,
    /// Output format override: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Output file for single-result commands (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output directory for figure panels (default: '.' or $OMIT_SIM_OUT_DIR)
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Usage(_) | Error::Config(_) | Error::InvalidParameter { .. } | Error::Precondition(_) => 1,
        Error::Convergence { .. } | Error::DegenerateAmplitude { .. } => 2,
        Error::Io { .. } => 3,
    }
}

fn load_config(path: Option<&Path>) -> Result<RunConfig> {
    let text = match path {
        None => String::new(),
        Some(p) => std::fs::read_to_string(p).map_err(|source| Error::Io {
            path: p.display().to_string(),
            source,
        })?,
    };
    parse_config(&text)
}

fn print_notes(cfg: &RunConfig) {
    for note in cfg.notes() {
        eprintln!("note: {note}");
    }
}

fn effective_format(cfg: &RunConfig, args: &CommonArgs) -> Result<OutputFormat> {
    match &args.format {
        None => Ok(cfg.format),
        Some(s) => s.parse(),
    }
}

fn attach_provenance(result: &mut SweepResult, cfg: &RunConfig) {
    if cfg.g_defaulted {
        result.config_snapshot.push(
            "g_provenance",
            "calibration defaults (g_1_hz/g_2_hz not set in config)",
        );
    }
}

fn emit_result(result: &SweepResult, format: OutputFormat, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => emit_sweep_to_path(result, format, path),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            emit_sweep(result, format, &mut lock).map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

fn cmd_steady_state(args: &CommonArgs) -> Result<()> {
    let cfg = load_config(args.config.as_deref())?;
    print_notes(&cfg);
    let params = cfg.params()?;
    let drive = cfg.drive()?;
    let st = solve_steady_state(&params, &drive, &cfg.solver_options())?;
    let ew = effective_linewidth(&params, &st);
    let format = effective_format(&cfg, args)?;

    let mut out: Vec<u8> = Vec::new();
    match format {
        OutputFormat::Csv => {
            writeln!(out, "# omit-sim steady-state").unwrap();
            let mut kv = |k: &str, v: String| writeln!(out, "{k} = {v}").unwrap();
            kv("n_1", format_f64(st.n_1));
            kv("n_2", format_f64(st.n_2));
            kv("q_s", format_f64(st.q_s));
            kv("delta_1_eff_rad_s", format_f64(st.delta_1_eff));
            kv("delta_2_eff_rad_s", format_f64(st.delta_2_eff));
            kv("residual", format_f64(st.residual));
            kv("branch_count", st.branch_count.to_string());
            kv("cooperativity_1", format_f64(ew.cooperativity_1));
            kv("gamma_eff_rad_s", format_f64(ew.gamma_eff));
        }
        OutputFormat::Json => {
            writeln!(out, "{{").unwrap();
            let mut kv = |k: &str, v: String, last: bool| {
                writeln!(out, "  \"{k}\": {v}{}", if last { "" } else { "," }).unwrap()
            };
            kv("n_1", format_f64(st.n_1), false);
            kv("n_2", format_f64(st.n_2), false);
            kv("q_s", format_f64(st.q_s), false);
            kv("delta_1_eff_rad_s", format_f64(st.delta_1_eff), false);
            kv("delta_2_eff_rad_s", format_f64(st.delta_2_eff), false);
            kv("residual", format_f64(st.residual), false);
            kv("branch_count", st.branch_count.to_string(), false);
            kv("cooperativity_1", format_f64(ew.cooperativity_1), false);
            kv("gamma_eff_rad_s", format_f64(ew.gamma_eff), true);
            writeln!(out, "}}").unwrap();
        }
    }
    write_bytes(&out, args.output.as_deref())
}

fn write_bytes(bytes: &[u8], output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(bytes).map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

fn cmd_spectrum(args: &CommonArgs) -> Result<()> {
    let cfg = load_config(args.config.as_deref())?;
    print_notes(&cfg);
    let params = cfg.params()?;
    let drive = cfg.drive()?;
    let opts = cfg.sweep_options();
    let grid = build_probe_grid(&params, &drive, &cfg.grid_spec(), &opts)?;
    let mut result = spectrum_sweep(&params, &drive, &grid, &opts)?;
    attach_provenance(&mut result, &cfg);
    emit_result(&result, effective_format(&cfg, args)?, args.output.as_deref())
}

fn cmd_delay_sweep(args: &CommonArgs) -> Result<()> {
    let cfg = load_config(args.config.as_deref())?;
    print_notes(&cfg);
    let params = cfg.params()?;
    let drive = cfg.drive()?;
    let powers = cfg.power_spec().to_powers()?;
    let mut result = power_sweep_delay(
        &params,
        &drive,
        &powers,
        cfg.delay_channel,
        &cfg.sweep_options(),
    )?;
    attach_provenance(&mut result, &cfg);
    emit_result(&result, effective_format(&cfg, args)?, args.output.as_deref())
}

fn cmd_figure(id: &str, args: &CommonArgs) -> Result<()> {
    let figure: FigureId = id.parse()?;
    let cfg = load_config(args.config.as_deref())?;
    print_notes(&cfg);
    let params = cfg.params()?;
    let fig_opts = FigureOptions {
        sweep: cfg.sweep_options(),
        grid: Some(cfg.grid_spec()),
        powers: cfg.power_spec(),
        p_probe: cfg.p_probe_w,
    };
    let format = effective_format(&cfg, args)?;
    let out_dir = args
        .out_dir
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));

    let panels = run_figure(figure, &params, &fig_opts)?;
    for mut panel in panels {
        attach_provenance(&mut panel, &cfg);
        let path = out_dir.join(format!("{}.{}", panel.label, format.extension()));
        emit_sweep_to_path(&panel, format, &path)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_validate(config: &Path) -> Result<()> {
    let cfg = load_config(Some(config))?;
    print_notes(&cfg);
    eprintln!("config ok: {}", config.display());
    Ok(())
}

/// Parses arguments and runs the selected command, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Cmd::SteadyState(args) => cmd_steady_state(args),
        Cmd::Spectrum(args) => cmd_spectrum(args),
        Cmd::DelaySweep(args) => cmd_delay_sweep(args),
        Cmd::Figure { id, common } => cmd_figure(id, common),
        Cmd::Validate { config } => cmd_validate(config),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
