//! Command-line front end: single-point reports, figure datasets as CSV,
//! generic sweeps, and the cavity-QED coupling-strength estimate.
//!
//! Exit codes: 0 success, 2 configuration error, 3 degenerate postselection,
//! 4 I/O error.

mod config;
mod figures;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use config::{ExperimentConfig, OutputFormat};
use figures::FigId;
use kerrwva::scaling::run_sweep;
use kerrwva::{fisher_report_with_tol, Error as LibError};
use output::{axis_name, fmt_num, point_csv, point_json, sweep_cells, CsvTable};

#[derive(Debug)]
pub enum CliError {
    /// Bad configuration or parameters (exit 2).
    Config(String),
    /// Postselection probability below the degeneracy floor (exit 3).
    Degenerate(f64),
    /// Output could not be written (exit 4).
    Io(String),
}

pub fn lib_err(e: LibError) -> CliError {
    match e {
        LibError::DegeneratePostselection { p_f, .. } => CliError::Degenerate(p_f),
        other => CliError::Config(other.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "kerrwva", version, about = "Postselected nonlinear-coupling metrology: Fisher information, figure datasets, and scaling fits")]
struct Cli {
    /// Experiment configuration file (key=value lines; angles accept a `pi` suffix)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for `point` (figures and sweeps are always CSV)
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Certified Poisson tail tolerance for the Fock truncation
    #[arg(long, global = true)]
    tail_tol: Option<f64>,

    /// Worker threads for sweep evaluation (output is identical regardless)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the full Fisher report at a single parameter point
    Point,
    /// Emit one figure's dataset as CSV
    Fig {
        #[arg(value_enum)]
        which: FigId,
    },
    /// Run the sweep described by the config's sweep section
    Sweep,
    /// Cavity-QED coupling strength |g1 g2|^2 / (Delta1^2 Delta2)
    EstimateChi {
        #[arg(long)]
        g1: f64,
        #[arg(long)]
        g2: f64,
        #[arg(long)]
        delta1: f64,
        #[arg(long)]
        delta2: f64,
    },
}

/// χ = |g₁g₂|²/(Δ₁²Δ₂). All inputs in one angular-frequency unit; the
/// result is in that same unit.
fn estimate_chi(g1: f64, g2: f64, delta1: f64, delta2: f64) -> Result<f64, CliError> {
    if delta1 == 0.0 || delta2 == 0.0 {
        return Err(CliError::Config("zero detuning: delta1 and delta2 must be nonzero".into()));
    }
    Ok((g1 * g2).powi(2) / (delta1 * delta1 * delta2))
}

fn load_config(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => ExperimentConfig::from_file(path)?,
        None => ExperimentConfig::default(),
    };
    if let Some(tol) = cli.tail_tol {
        cfg.tail_tol = tol;
    }
    if let Some(fmt) = cli.format {
        cfg.format = match fmt {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    cfg.validate()?;
    Ok(cfg)
}

fn point_meta(cfg: &ExperimentConfig) -> String {
    format!(
        "kerrwva point theta_i={} theta_f={} phi_0={} n_mean={} chi={} order={} tail_tol={}",
        fmt_num(cfg.theta_i),
        fmt_num(cfg.theta_f),
        fmt_num(cfg.phi_0),
        fmt_num(cfg.n_mean),
        fmt_num(cfg.chi),
        cfg.order,
        fmt_num(cfg.tail_tol)
    )
}

fn cmd_point(cfg: &ExperimentConfig) -> Result<String, CliError> {
    if cfg.sweep.is_some() {
        return Err(CliError::Config(
            "`point` takes a config without a sweep section (use `sweep`)".into(),
        ));
    }
    let report =
        fisher_report_with_tol(&cfg.angles()?, &cfg.probe()?, &cfg.coupling()?, cfg.tail_tol)
            .map_err(lib_err)?;
    Ok(match cfg.format {
        OutputFormat::Csv => point_csv(&point_meta(cfg), &report),
        OutputFormat::Json => point_json(&report),
    })
}

fn cmd_sweep(cfg: &ExperimentConfig) -> Result<String, CliError> {
    let spec = cfg
        .sweep_spec()?
        .ok_or_else(|| CliError::Config("config has no sweep section".into()))?;
    let rows = run_sweep(&spec).map_err(lib_err)?;
    let axis = axis_name(spec.axis);
    let table = CsvTable {
        metadata: format!(
            "kerrwva sweep theta_i={} theta_f={} phi_0={} n_mean={} chi={} order={} tail_tol={} axis={axis} start={} stop={} points={} log={}",
            fmt_num(cfg.theta_i),
            fmt_num(cfg.theta_f),
            fmt_num(cfg.phi_0),
            fmt_num(cfg.n_mean),
            fmt_num(cfg.chi),
            cfg.order,
            fmt_num(cfg.tail_tol),
            fmt_num(spec.start),
            fmt_num(spec.stop),
            spec.points,
            spec.log_spaced
        ),
        header: [axis, "p_f", "wva_fi", "wva_qfi", "q_cm", "degenerate"]
            .map(String::from)
            .to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                let mut cells = vec![fmt_num(r.axis_value)];
                cells.extend(sweep_cells(r));
                cells
            })
            .collect(),
        trailing_comments: vec![],
    };
    Ok(table.render())
}

fn deliver(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    if let Some(threads) = cli.threads {
        // ignore the error if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let text = match &cli.command {
        Command::Point => cmd_point(&load_config(cli)?)?,
        Command::Fig { which } => figures::fig_csv(*which, &load_config(cli)?)?,
        Command::Sweep => cmd_sweep(&load_config(cli)?)?,
        Command::EstimateChi { g1, g2, delta1, delta2 } => {
            format!("{}\n", fmt_num(estimate_chi(*g1, *g2, *delta1, *delta2)?))
        }
    };
    deliver(cli, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Degenerate(p_f)) => {
            // machine-readable error record on stdout
            println!("{{\"error\":\"degenerate_postselection\",\"p_f\":{}}}", output::json_num(p_f));
            eprintln!("error: degenerate postselection (p_f = {p_f:.3e})");
            ExitCode::from(3)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
