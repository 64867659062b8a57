//! Canned figure datasets: θ_f sweeps at four coupling strengths, the χ
//! dependence, the photon-number dependence, and the log-log scaling fit.

use std::f64::consts::TAU;

use clap::ValueEnum;
use kerrwva::scaling::{run_sweep, SweepAxis};
use kerrwva::{fit_power_law, SweepBase, SweepRow, SweepSpec};

use crate::config::ExperimentConfig;
use crate::output::{fit_comment, fmt_num, sweep_cells, CsvTable};
use crate::{lib_err, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigId {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig1d,
    Fig2,
    Fig3,
    Fig4,
}

impl FigId {
    pub fn name(self) -> &'static str {
        match self {
            FigId::Fig1a => "fig1a",
            FigId::Fig1b => "fig1b",
            FigId::Fig1c => "fig1c",
            FigId::Fig1d => "fig1d",
            FigId::Fig2 => "fig2",
            FigId::Fig3 => "fig3",
            FigId::Fig4 => "fig4",
        }
    }
}

/// Default grid densities; the source figures do not pin them.
const FIG1_POINTS: usize = 201;
const FIG2_POINTS: usize = 200;
const FIG3_POINTS: usize = 128;
const FIG4_POINTS: usize = 12;
const FIG3_CHIS: [f64; 3] = [0.001, 0.01, 0.1];
/// Visual amplification applied to the χ=0.001 curve in the fig3 display
/// column; the raw column is never touched.
const FIG3_DISPLAY_SCALE: f64 = 1e3;

fn base_from(cfg: &ExperimentConfig) -> Result<SweepBase, CliError> {
    Ok(SweepBase {
        angles: cfg.angles()?,
        probe: cfg.probe()?,
        coupling: cfg.coupling()?,
        tail_tol: cfg.tail_tol,
    })
}

fn run(spec: &SweepSpec) -> Result<Vec<SweepRow>, CliError> {
    run_sweep(spec).map_err(lib_err)
}

fn common_meta(cfg: &ExperimentConfig, which: FigId) -> String {
    format!(
        "kerrwva fig {} theta_i={} phi_0={} n_mean={} order={} tail_tol={}",
        which.name(),
        fmt_num(cfg.theta_i),
        fmt_num(cfg.phi_0),
        fmt_num(cfg.n_mean),
        cfg.order,
        fmt_num(cfg.tail_tol)
    )
}

fn theta_f_sweep_table(
    cfg: &ExperimentConfig,
    which: FigId,
    chi: f64,
) -> Result<CsvTable, CliError> {
    let mut cfg = *cfg;
    cfg.chi = chi;
    let spec = SweepSpec {
        axis: SweepAxis::ThetaF,
        start: 0.0,
        stop: TAU,
        points: FIG1_POINTS,
        log_spaced: false,
        base: base_from(&cfg)?,
    };
    let rows = run(&spec)?;
    Ok(CsvTable {
        metadata: format!(
            "{} chi={} axis=theta_f start=0 stop=2pi points={}",
            common_meta(&cfg, which),
            fmt_num(chi),
            FIG1_POINTS
        ),
        header: ["theta_f", "p_f", "wva_fi", "wva_qfi", "q_cm", "degenerate"]
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
    })
}

fn fig2_table(cfg: &ExperimentConfig) -> Result<CsvTable, CliError> {
    let spec = SweepSpec {
        axis: SweepAxis::Chi,
        start: 1e-4,
        stop: 0.2,
        points: FIG2_POINTS,
        log_spaced: true,
        base: base_from(cfg)?,
    };
    let rows = run(&spec)?;
    Ok(CsvTable {
        metadata: format!(
            "{} theta_f={} axis=chi start=1e-4 stop=0.2 points={} log=true",
            common_meta(cfg, FigId::Fig2),
            fmt_num(cfg.theta_f),
            FIG2_POINTS
        ),
        header: ["chi", "p_f", "wva_fi", "wva_qfi", "q_cm", "degenerate"]
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
    })
}

fn fig3_table(cfg: &ExperimentConfig) -> Result<CsvTable, CliError> {
    let mut rows_out = Vec::new();
    for &chi in &FIG3_CHIS {
        let mut sub = *cfg;
        sub.chi = chi;
        let spec = SweepSpec {
            axis: SweepAxis::MeanPhotons,
            start: 1.0,
            stop: 64.0,
            points: FIG3_POINTS,
            log_spaced: false,
            base: base_from(&sub)?,
        };
        for r in run(&spec)? {
            let display = match &r.report {
                Some(rep) if chi == 0.001 => fmt_num(rep.wva_fi * FIG3_DISPLAY_SCALE),
                Some(rep) => fmt_num(rep.wva_fi),
                None => "nan".into(),
            };
            let mut cells = vec![fmt_num(r.axis_value), fmt_num(chi)];
            let base_cells = sweep_cells(&r);
            // n_mean, chi, p_f, wva_fi, wva_fi_display, wva_qfi, q_cm, degenerate
            cells.push(base_cells[0].clone());
            cells.push(base_cells[1].clone());
            cells.push(display);
            cells.extend_from_slice(&base_cells[2..]);
            rows_out.push(cells);
        }
    }
    Ok(CsvTable {
        metadata: format!(
            "{} theta_f={} chis=0.001,0.01,0.1 display_scale_for_chi_0.001={} axis=n_mean start=1 stop=64 points={}",
            common_meta(cfg, FigId::Fig3),
            fmt_num(cfg.theta_f),
            FIG3_DISPLAY_SCALE,
            FIG3_POINTS
        ),
        header: [
            "n_mean",
            "chi",
            "p_f",
            "wva_fi",
            "wva_fi_display",
            "wva_qfi",
            "q_cm",
            "degenerate",
        ]
        .map(String::from)
        .to_vec(),
        rows: rows_out,
        trailing_comments: vec![],
    })
}

fn fig4_table(cfg: &ExperimentConfig) -> Result<CsvTable, CliError> {
    let mut cfg = *cfg;
    cfg.chi = 0.01;
    let spec = SweepSpec {
        axis: SweepAxis::MeanPhotons,
        start: 20.0,
        stop: 120.0,
        points: FIG4_POINTS,
        log_spaced: true,
        base: base_from(&cfg)?,
    };
    let rows = run(&spec)?;

    let wva_fi_pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.report.as_ref().map(|rep| (r.axis_value, rep.wva_fi)))
        .filter(|&(_, y)| y > 0.0)
        .collect();
    let q_cm_pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.report.as_ref().map(|rep| (r.axis_value, rep.q_conventional)))
        .collect();
    let fit_fi = fit_power_law(&wva_fi_pts).map_err(lib_err)?;
    let fit_cm = fit_power_law(&q_cm_pts).map_err(lib_err)?;

    Ok(CsvTable {
        metadata: format!(
            "{} theta_f={} chi={} axis=n_mean start=20 stop=120 points={} log=true",
            common_meta(&cfg, FigId::Fig4),
            fmt_num(cfg.theta_f),
            fmt_num(cfg.chi),
            FIG4_POINTS
        ),
        header: ["n_mean", "p_f", "wva_fi", "wva_qfi", "q_cm", "degenerate"]
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
        trailing_comments: vec![
            fit_comment("wva_fi", &fit_fi),
            fit_comment("q_cm", &fit_cm),
        ],
    })
}

/// Renders the requested figure's dataset as CSV.
pub fn fig_csv(which: FigId, cfg: &ExperimentConfig) -> Result<String, CliError> {
    let table = match which {
        FigId::Fig1a => theta_f_sweep_table(cfg, which, 0.001)?,
        FigId::Fig1b => theta_f_sweep_table(cfg, which, 0.005)?,
        FigId::Fig1c => theta_f_sweep_table(cfg, which, 0.01)?,
        FigId::Fig1d => theta_f_sweep_table(cfg, which, 0.1)?,
        FigId::Fig2 => fig2_table(cfg)?,
        FigId::Fig3 => fig3_table(cfg)?,
        FigId::Fig4 => fig4_table(cfg)?,
    };
    Ok(table.render())
}
