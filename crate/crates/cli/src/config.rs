//! Plain-text `key=value` experiment configuration.
//!
//! Angles accept a `pi` suffix (`theta_f=1.5pi`) so values like 3π/2 are
//! exactly representable. Lines starting with `#` and blank lines are
//! ignored.

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;

use kerrwva::scaling::SweepAxis;
use kerrwva::{CoherentProbe, CouplingConfig, PpsAngles, SweepBase, SweepSpec};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub struct SweepSection {
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub log_spaced: bool,
}

/// Fully resolved experiment parameters.
#[derive(Debug, Clone, Copy)]
pub struct ExperimentConfig {
    pub theta_i: f64,
    pub theta_f: f64,
    pub phi_0: f64,
    pub n_mean: f64,
    pub chi: f64,
    pub order: u32,
    pub tail_tol: f64,
    pub format: OutputFormat,
    pub sweep: Option<SweepSection>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        // the paper's reference point: balanced PPS in the AAV regime, N = 8
        Self {
            theta_i: FRAC_PI_2,
            theta_f: FRAC_PI_2,
            phi_0: PI,
            n_mean: 8.0,
            chi: 0.01,
            order: 2,
            tail_tol: 1e-12,
            format: OutputFormat::Csv,
            sweep: None,
        }
    }
}

/// Parses `12.5`, `pi`, `-pi`, `1.5pi`, `0.25pi`.
pub fn parse_number(raw: &str) -> Result<f64, CliError> {
    let s = raw.trim();
    let bad = || CliError::Config(format!("cannot parse number `{raw}`"));
    if let Some(prefix) = s.strip_suffix("pi") {
        let factor = match prefix.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            p => p.parse::<f64>().map_err(|_| bad())?,
        };
        Ok(factor * PI)
    } else {
        s.parse::<f64>().map_err(|_| bad())
    }
}

fn parse_bool(raw: &str) -> Result<bool, CliError> {
    match raw.trim() {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => Err(CliError::Config(format!("cannot parse boolean `{other}`"))),
    }
}

impl ExperimentConfig {
    pub fn from_str(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        let mut axis = None;
        let mut start = None;
        let mut stop = None;
        let mut points = None;
        let mut log_spaced = false;

        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key=value, got `{line}`", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "theta_i" => cfg.theta_i = parse_number(value)?,
                "theta_f" => cfg.theta_f = parse_number(value)?,
                "phi_0" => cfg.phi_0 = parse_number(value)?,
                "n_mean" => cfg.n_mean = parse_number(value)?,
                "chi" => cfg.chi = parse_number(value)?,
                "order" => {
                    cfg.order = value
                        .parse()
                        .map_err(|_| CliError::Config(format!("bad order `{value}`")))?
                }
                "tail_tol" => cfg.tail_tol = parse_number(value)?,
                "format" => {
                    cfg.format = match value {
                        "csv" => OutputFormat::Csv,
                        "json" => OutputFormat::Json,
                        other => {
                            return Err(CliError::Config(format!("unknown format `{other}`")))
                        }
                    }
                }
                "sweep_axis" => {
                    axis = Some(match value {
                        "theta_f" => SweepAxis::ThetaF,
                        "chi" => SweepAxis::Chi,
                        "n_mean" => SweepAxis::MeanPhotons,
                        other => {
                            return Err(CliError::Config(format!("unknown sweep axis `{other}`")))
                        }
                    })
                }
                "sweep_start" => start = Some(parse_number(value)?),
                "sweep_stop" => stop = Some(parse_number(value)?),
                "sweep_points" => {
                    points = Some(value.parse().map_err(|_| {
                        CliError::Config(format!("bad sweep_points `{value}`"))
                    })?)
                }
                "sweep_log" => log_spaced = parse_bool(value)?,
                other => return Err(CliError::Config(format!("unknown key `{other}`"))),
            }
        }

        match (axis, start, stop, points) {
            (None, None, None, None) => {}
            (Some(axis), Some(start), Some(stop), Some(points)) => {
                cfg.sweep = Some(SweepSection {
                    axis,
                    start,
                    stop,
                    points,
                    log_spaced,
                })
            }
            _ => {
                return Err(CliError::Config(
                    "incomplete sweep section: need sweep_axis, sweep_start, sweep_stop, sweep_points"
                        .into(),
                ))
            }
        }

        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_str(&text)
    }

    /// Re-validates the physical invariants of the nested domain types.
    pub fn validate(&self) -> Result<(), CliError> {
        self.angles()?;
        self.probe()?;
        self.coupling()?;
        if !(self.tail_tol > 0.0 && self.tail_tol < 1.0) {
            return Err(CliError::Config(format!(
                "tail_tol must lie in (0, 1), got {}",
                self.tail_tol
            )));
        }
        Ok(())
    }

    pub fn angles(&self) -> Result<PpsAngles, CliError> {
        PpsAngles::new(self.theta_i, self.theta_f, self.phi_0)
            .map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn probe(&self) -> Result<CoherentProbe, CliError> {
        CoherentProbe::new(self.n_mean).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn coupling(&self) -> Result<CouplingConfig, CliError> {
        CouplingConfig::new(self.chi, self.order).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn sweep_spec(&self) -> Result<Option<SweepSpec>, CliError> {
        let Some(s) = self.sweep else { return Ok(None) };
        let spec = SweepSpec {
            axis: s.axis,
            start: s.start,
            stop: s.stop,
            points: s.points,
            log_spaced: s.log_spaced,
            base: SweepBase {
                angles: self.angles()?,
                probe: self.probe()?,
                coupling: self.coupling()?,
                tail_tol: self.tail_tol,
            },
        };
        spec.validate().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(Some(spec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_suffix_values() {
        assert_eq!(parse_number("pi").unwrap(), PI);
        assert_eq!(parse_number("-pi").unwrap(), -PI);
        assert_eq!(parse_number("1.5pi").unwrap(), 1.5 * PI);
        assert_eq!(parse_number("0.5pi").unwrap(), FRAC_PI_2);
        assert_eq!(parse_number("2").unwrap(), 2.0);
        assert!(parse_number("two pi").is_err());
    }

    #[test]
    fn parses_full_config() {
        let cfg = ExperimentConfig::from_str(
            "# comment\n\
             theta_i = 0.5pi\n\
             theta_f = 1.5pi\n\
             phi_0 = pi\n\
             n_mean = 8\n\
             chi = 0.01\n\
             tail_tol = 1e-10\n\
             format = json\n",
        )
        .unwrap();
        assert_eq!(cfg.theta_f, 1.5 * PI);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.tail_tol, 1e-10);
        assert!(cfg.sweep.is_none());
    }

    #[test]
    fn parses_sweep_section() {
        let cfg = ExperimentConfig::from_str(
            "sweep_axis=chi\nsweep_start=1e-4\nsweep_stop=0.2\nsweep_points=50\nsweep_log=true\n",
        )
        .unwrap();
        let spec = cfg.sweep_spec().unwrap().unwrap();
        assert_eq!(spec.axis, SweepAxis::Chi);
        assert!(spec.log_spaced);
        assert_eq!(spec.points, 50);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ExperimentConfig::from_str("nonsense\n").is_err());
        assert!(ExperimentConfig::from_str("unknown_key=1\n").is_err());
        assert!(ExperimentConfig::from_str("n_mean=-2\n").is_err());
        assert!(ExperimentConfig::from_str("sweep_axis=chi\n").is_err());
        assert!(ExperimentConfig::from_str("tail_tol=2\n").is_err());
    }
}
