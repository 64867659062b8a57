//! Parameter sweeps over the postselection angle, the coupling strength, or
//! the probe photon number, and the log-log power-law fit that extracts the
//! precision-scaling exponent.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fock::{CoherentProbe, CouplingConfig};
use crate::infotheory::{fisher_report_with_tol, FisherReport};
use crate::postselect::PpsAngles;
use crate::scalar::{real, CompensatedSum, Real};

/// Which parameter the sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    ThetaF,
    Chi,
    MeanPhotons,
}

/// The full parameter set held constant across a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepBase<T> {
    pub angles: PpsAngles<T>,
    pub probe: CoherentProbe<T>,
    pub coupling: CouplingConfig<T>,
    pub tail_tol: T,
}

/// A grid over one axis with everything else fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec<T> {
    pub axis: SweepAxis,
    pub start: T,
    pub stop: T,
    pub points: usize,
    pub log_spaced: bool,
    pub base: SweepBase<T>,
}

impl<T: Real> SweepSpec<T> {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidParameter(format!(
                "sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.start < self.stop) {
            return Err(Error::InvalidParameter(format!(
                "sweep range must satisfy start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.log_spaced && self.start <= T::zero() {
            return Err(Error::InvalidParameter(
                "log-spaced sweep requires start > 0".into(),
            ));
        }
        Ok(())
    }

    /// Grid values, linearly or logarithmically spaced, endpoints included.
    pub fn grid(&self) -> Vec<T> {
        let m = real::<T>((self.points - 1) as f64);
        (0..self.points)
            .map(|i| {
                let t = real::<T>(i as f64) / m;
                if self.log_spaced {
                    (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                } else {
                    self.start + t * (self.stop - self.start)
                }
            })
            .collect()
    }
}

/// One grid point of a sweep. Degenerate points (postselection probability
/// below the floor) are flagged and carry no report, never dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow<T> {
    pub axis_value: T,
    pub p_f: T,
    pub report: Option<FisherReport<T>>,
}

impl<T> SweepRow<T> {
    #[inline]
    pub fn degenerate(&self) -> bool {
        self.report.is_none()
    }
}

fn evaluate_point<T: Real>(spec: &SweepSpec<T>, value: T) -> Result<SweepRow<T>> {
    let base = &spec.base;
    let (angles, probe, coupling) = match spec.axis {
        SweepAxis::ThetaF => (base.angles.with_theta_f(value)?, base.probe, base.coupling),
        SweepAxis::Chi => (base.angles, base.probe, base.coupling.with_chi(value)?),
        SweepAxis::MeanPhotons => (base.angles, CoherentProbe::new(value)?, base.coupling),
    };
    let n_max = crate::fock::default_n_max(&probe, base.tail_tol);
    let p_f = crate::postselect::postselection_probability(&angles, &probe, &coupling, n_max);
    match fisher_report_with_tol(&angles, &probe, &coupling, base.tail_tol) {
        Ok(report) => Ok(SweepRow {
            axis_value: value,
            p_f,
            report: Some(report),
        }),
        Err(Error::DegeneratePostselection { .. }) => Ok(SweepRow {
            axis_value: value,
            p_f,
            report: None,
        }),
        Err(e) => Err(e),
    }
}

/// Evaluates the sweep, one [`SweepRow`] per grid point, in grid order.
///
/// Rows are independent and evaluated in parallel; assembly is ordered, so
/// the output does not depend on the worker count.
pub fn run_sweep<T: Real>(spec: &SweepSpec<T>) -> Result<Vec<SweepRow<T>>> {
    spec.validate()?;
    spec.grid()
        .into_par_iter()
        .map(|value| evaluate_point(spec, value))
        .collect()
}

/// Log-log ordinary-least-squares fit result: y ≈ e^intercept · x^slope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit<T> {
    pub slope: T,
    pub intercept: T,
    pub r_squared: T,
    pub residual_max: T,
}

/// OLS on (log x, log y). The slope is the scaling exponent k̃.
pub fn fit_power_law<T: Real>(points: &[(T, T)]) -> Result<ScalingFit<T>> {
    if points.len() < 3 {
        return Err(Error::InsufficientPoints { got: points.len() });
    }
    for (i, &(x, y)) in points.iter().enumerate() {
        if x <= T::zero() || y <= T::zero() {
            return Err(Error::NonpositiveData { index: i });
        }
    }
    let logs: Vec<(T, T)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = real::<T>(points.len() as f64);

    let mut sx = CompensatedSum::new();
    let mut sy = CompensatedSum::new();
    for &(lx, ly) in &logs {
        sx.add(lx);
        sy.add(ly);
    }
    let mean_x = sx.total() / m;
    let mean_y = sy.total() / m;

    let mut sxx = CompensatedSum::new();
    let mut sxy = CompensatedSum::new();
    for &(lx, ly) in &logs {
        let dx = lx - mean_x;
        sxx.add(dx * dx);
        sxy.add(dx * (ly - mean_y));
    }
    let slope = sxy.total() / sxx.total();
    let intercept = mean_y - slope * mean_x;

    let mut ss_res = CompensatedSum::new();
    let mut ss_tot = CompensatedSum::new();
    let mut residual_max = T::zero();
    for &(lx, ly) in &logs {
        let r = ly - (intercept + slope * lx);
        ss_res.add(r * r);
        let d = ly - mean_y;
        ss_tot.add(d * d);
        residual_max = residual_max.max(r.abs());
    }
    let r_squared = if ss_tot.total() > T::zero() {
        (T::one() - ss_res.total() / ss_tot.total())
            .max(T::zero())
            .min(T::one())
    } else {
        T::one()
    };
    Ok(ScalingFit {
        slope,
        intercept,
        r_squared,
        residual_max,
    })
}
