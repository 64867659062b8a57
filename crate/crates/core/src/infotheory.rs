//! Outcome statistics and information measures for the postselected meter:
//! the photon-number distribution, classical Fisher information (analytic and
//! finite-difference), the postselected QFI by two independent routes, the
//! conventional-scheme QFI, and the Cramér–Rao precision bound.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fock::{
    default_n_max, level_pow, poisson_weights, CoherentProbe, CouplingConfig, DEFAULT_TAIL_TOL,
};
use crate::postselect::{pps_coefficients, PpsAngles, P_MIN};
use crate::scalar::{real, CompensatedSum, Real};
use crate::series::{phase_series_sum, TrigKind};

/// Outcome terms with probability at or below this floor are skipped in the
/// Fisher sum; (∂P)²/P vanishes with P for analytic families, so the skipped
/// contribution is negligible while 0/0 is avoided.
pub const PROB_FLOOR: f64 = 1e-300;

/// Relative disagreement between the two QFI routes that
/// [`fisher_report`] tolerates before failing.
pub const QFI_PATH_TOL: f64 = 1e-6;

/// Photon-number distribution conditioned on successful postselection.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution<T> {
    probs: Vec<T>,
    p_f: T,
}

impl<T: Real> OutcomeDistribution<T> {
    #[inline]
    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    #[inline]
    pub fn prob(&self, n: usize) -> T {
        self.probs[n]
    }

    #[inline]
    pub fn p_f(&self) -> T {
        self.p_f
    }

    pub fn total(&self) -> T {
        let mut acc = CompensatedSum::new();
        for &p in &self.probs {
            acc.add(p);
        }
        acc.total()
    }
}

struct SeriesContext<T> {
    weights: Vec<T>,
    a_coef: T,
    b_coef: T,
    c_coef: T,
    p_f: T,
}

impl<T: Real> SeriesContext<T> {
    fn build(
        angles: &PpsAngles<T>,
        probe: &CoherentProbe<T>,
        coupling: &CouplingConfig<T>,
        n_max: usize,
    ) -> Self {
        let coeffs = pps_coefficients(angles);
        let weights = poisson_weights(probe.mean_photons(), n_max);
        let series = phase_series_sum(&weights, coupling, angles.phi_0(), 0, TrigKind::Cos);
        let p_f = coeffs.a_coef + coeffs.b_coef * series;
        Self {
            weights,
            a_coef: coeffs.a_coef,
            b_coef: coeffs.b_coef,
            c_coef: coeffs.c_coef,
            p_f,
        }
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.p_f < real(P_MIN) {
            return Err(Error::DegeneratePostselection {
                p_f: self.p_f.to_f64().unwrap_or(f64::NAN),
                floor: P_MIN,
            });
        }
        Ok(())
    }

    /// ∂χ p_f = −2B Σₙ wₙ nᵏ sin(2χnᵏ + φ₀).
    fn dp_f(&self, angles: &PpsAngles<T>, coupling: &CouplingConfig<T>) -> T {
        let two = T::one() + T::one();
        -two * self.b_coef
            * phase_series_sum(
                &self.weights,
                coupling,
                angles.phi_0(),
                coupling.order(),
                TrigKind::Sin,
            )
    }
}

/// P_f(n) = (e^{−N}/p_f)·(Nⁿ/n!)·[A + B cos(2χnᵏ + φ₀)].
pub fn outcome_distribution<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> Result<OutcomeDistribution<T>> {
    let ctx = SeriesContext::build(angles, probe, coupling, n_max);
    ctx.require_nondegenerate()?;
    let two = T::one() + T::one();
    let probs = ctx
        .weights
        .iter()
        .enumerate()
        .map(|(n, &w)| {
            let arg = two * coupling.chi() * level_pow::<T>(n, coupling.order()) + angles.phi_0();
            w * (ctx.a_coef + ctx.b_coef * arg.cos()) / ctx.p_f
        })
        .collect();
    Ok(OutcomeDistribution {
        probs,
        p_f: ctx.p_f,
    })
}

/// Classical Fisher information F_f = Σₙ (∂χP_f(n))²/P_f(n) with the
/// analytic derivative of the distribution.
pub fn classical_fisher<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> Result<T> {
    let ctx = SeriesContext::build(angles, probe, coupling, n_max);
    ctx.require_nondegenerate()?;
    let two = T::one() + T::one();
    let dp = ctx.dp_f(angles, coupling);
    let floor = real(PROB_FLOOR);
    let mut fisher = CompensatedSum::new();
    for (n, &w) in ctx.weights.iter().enumerate() {
        let npow = level_pow::<T>(n, coupling.order());
        let arg = two * coupling.chi() * npow + angles.phi_0();
        let p_n = w * (ctx.a_coef + ctx.b_coef * arg.cos()) / ctx.p_f;
        if p_n <= floor {
            continue;
        }
        let dp_n =
            w / ctx.p_f * (-two * npow * ctx.b_coef * arg.sin()) - p_n * dp / ctx.p_f;
        fisher.add(dp_n * dp_n / p_n);
    }
    Ok(fisher.total())
}

/// Default central-difference step for [`classical_fisher_fd`], balancing
/// truncation against round-off at double precision.
///
/// The probabilities oscillate with phase 2χn^k + φ₀, so the sharpest χ
/// sensitivity grows like 2·n_max^k; the step shrinks accordingly to keep
/// the quadratic truncation error of the central difference far below the
/// round-off floor of the evaluated series.
pub fn default_fd_step<T: Real>(n_max: usize, order: u32) -> T {
    real::<T>(1e-4) / (real::<T>(2.0) * level_pow::<T>(n_max.max(1), order))
}

/// Finite-difference route to F_f: central differences of P_f(n) at χ ± step,
/// with the center distribution as denominator. Independent of the analytic
/// derivative path.
pub fn classical_fisher_fd<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
    step: T,
) -> Result<T> {
    assert!(step > T::zero(), "finite-difference step must be positive");
    let two = T::one() + T::one();
    let center = outcome_distribution(angles, probe, coupling, n_max)?;
    let minus = outcome_distribution(angles, probe, &coupling.with_chi(coupling.chi() - step)?, n_max)?;
    let plus = outcome_distribution(angles, probe, &coupling.with_chi(coupling.chi() + step)?, n_max)?;
    let floor = real(PROB_FLOOR);
    let mut fisher = CompensatedSum::new();
    for n in 0..=n_max {
        let p_n = center.prob(n);
        if p_n <= floor {
            continue;
        }
        let dp_n = (plus.prob(n) - minus.prob(n)) / (two * step);
        fisher.add(dp_n * dp_n / p_n);
    }
    Ok(fisher.total())
}

/// QFI of the normalized postselected state from its analytic χ-derivative:
/// Q_f = 4(⟨∂χΦ_f|∂χΦ_f⟩ − |⟨Φ_f|∂χΦ_f⟩|²).
pub fn qfi_derivative_path<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> Result<T> {
    let (a, b) = angles.amplitude_products();
    let branch_plus = Complex::from_polar(b, angles.phi_0());
    let weights = poisson_weights(probe.mean_photons(), n_max);

    // unnormalized state u and its derivative du:
    //   u_n  = c_n (a e^{-i phi} + b e^{i phi_0} e^{i phi})
    //   du_n = c_n (-i n^k)(a e^{-i phi} - b e^{i phi_0} e^{i phi})
    let mut u = Vec::with_capacity(n_max + 1);
    let mut du = Vec::with_capacity(n_max + 1);
    let mut norm = CompensatedSum::new();
    let mut cross_re = CompensatedSum::new();
    let mut cross_im = CompensatedSum::new();
    for (n, &w) in weights.iter().enumerate() {
        let c_n = w.sqrt();
        let npow = level_pow::<T>(n, coupling.order());
        let minus = Complex::from_polar(a, -coupling.chi() * npow);
        let plus = branch_plus * Complex::from_polar(T::one(), coupling.chi() * npow);
        let u_n = (minus + plus) * c_n;
        let du_n = (minus - plus) * Complex::new(T::zero(), -npow) * c_n;
        norm.add(u_n.norm_sqr());
        let z = u_n.conj() * du_n;
        cross_re.add(z.re);
        cross_im.add(z.im);
        u.push(u_n);
        du.push(du_n);
    }
    let p_f = norm.total();
    if p_f < real(P_MIN) {
        return Err(Error::DegeneratePostselection {
            p_f: p_f.to_f64().unwrap_or(f64::NAN),
            floor: P_MIN,
        });
    }

    // The normalization-derivative terms cancel inside the variance, leaving
    // Q_f = (4/p_f)(⟨∂u|∂u⟩ − |⟨u|∂u⟩|²/p_f). Evaluating that difference as
    // the positive sum Σ|∂u_n − c·u_n|² with c = ⟨u|∂u⟩/p_f avoids the
    // catastrophic cancellation the two-term form suffers near degenerate
    // postselection.
    let c = Complex::new(cross_re.total(), cross_im.total()) / p_f;
    let mut residual = CompensatedSum::new();
    for (u_n, du_n) in u.iter().zip(&du) {
        residual.add((du_n - u_n * c).norm_sqr());
    }
    let four = real::<T>(4.0);
    Ok(four * residual.total() / p_f)
}

/// QFI from the closed-form expression
/// p_fQ_f = 4[A⟨n²ᵏ⟩ − (C⟨nᵏ⟩)²/p_f − B·Σₙwₙn²ᵏcos(2χnᵏ+φ₀)
///          − B²(Σₙwₙnᵏsin(2χnᵏ+φ₀))²/p_f],
/// with the moments taken from the Poisson series, not a printed polynomial.
pub fn qfi_closed_form<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> Result<T> {
    let ctx = SeriesContext::build(angles, probe, coupling, n_max);
    ctx.require_nondegenerate()?;
    let k = coupling.order();
    let m_k = crate::fock::weighted_moment(&ctx.weights, k);
    let m_2k = crate::fock::weighted_moment(&ctx.weights, 2 * k);
    let cos_series = phase_series_sum(&ctx.weights, coupling, angles.phi_0(), 2 * k, TrigKind::Cos);
    let sin_series = phase_series_sum(&ctx.weights, coupling, angles.phi_0(), k, TrigKind::Sin);
    let two = T::one() + T::one();
    let four = two + two;
    let c_m = ctx.c_coef * m_k;
    let wva_qfi = four
        * (ctx.a_coef * m_2k
            - c_m * c_m / ctx.p_f
            - ctx.b_coef * cos_series
            - ctx.b_coef * ctx.b_coef * sin_series * sin_series / ctx.p_f);
    Ok(wva_qfi / ctx.p_f)
}

/// QFI of the conventional (no postselection) quadratic-coupling scheme:
/// Q_cm = 4(4N³ + 6N² + N).
pub fn qfi_conventional<T: Real>(probe: &CoherentProbe<T>) -> T {
    let n = probe.mean_photons();
    let four = real::<T>(4.0);
    let six = real::<T>(6.0);
    four * (four * n * n * n + six * n * n + n)
}

/// Cramér–Rao precision bound δ(χ) ≥ 1/√(p_f·F).
pub fn crb_bound<T: Real>(p_f: T, fisher: T) -> Result<T> {
    let product = p_f * fisher;
    if product <= T::zero() {
        return Err(Error::NonpositiveInformation {
            product: product.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(product.sqrt().recip())
}

/// Everything the figures need at one parameter point.
///
/// `crb` is +∞ when the weighted Fisher information vanishes (for instance
/// at θ_i = 0, where the distribution carries no χ dependence).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherReport<T> {
    pub p_f: T,
    pub f_classical: T,
    pub q_quantum: T,
    pub wva_fi: T,
    pub wva_qfi: T,
    pub q_conventional: T,
    pub crb: T,
    pub n_max: usize,
}

/// Bundles p_f, F_f, Q_f (cross-validated between both routes and reported
/// from the better-conditioned derivative route), the resource-normalized
/// WVA-FI/WVA-QFI, Q_cm, and the CRB at one parameter point. The truncation
/// is chosen internally from `tail_tol`.
pub fn fisher_report_with_tol<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    tail_tol: T,
) -> Result<FisherReport<T>> {
    let n_max = default_n_max(probe, tail_tol);
    let ctx = SeriesContext::build(angles, probe, coupling, n_max);
    ctx.require_nondegenerate()?;
    let p_f = ctx.p_f;

    let f_classical = classical_fisher(angles, probe, coupling, n_max)?;
    let q_deriv = qfi_derivative_path(angles, probe, coupling, n_max)?;
    let q_closed = qfi_closed_form(angles, probe, coupling, n_max)?;

    // Both routes obtain Q_f as a residue of terms bounded by
    // 4(A + |B|)⟨n²ᵏ⟩/p_f plus the (C⟨nᵏ⟩)² and (B⟨nᵏ⟩)² corrections; near
    // degenerate postselection that gross magnitude, not Q_f itself, limits
    // the agreement either route can deliver in finite precision.
    let k = coupling.order();
    let m_k = crate::fock::weighted_moment(&ctx.weights, k);
    let m_2k = crate::fock::weighted_moment(&ctx.weights, 2 * k);
    let four = real::<T>(4.0);
    let gross = four
        * ((ctx.a_coef + ctx.b_coef.abs()) * m_2k
            + ((ctx.c_coef * m_k).powi(2) + (ctx.b_coef * m_k).powi(2)) / p_f);
    let scale = q_deriv
        .abs()
        .max(q_closed.abs())
        .max(gross / p_f)
        .max(T::one());
    if (q_deriv - q_closed).abs() > real::<T>(QFI_PATH_TOL) * scale {
        return Err(Error::PathMismatch {
            derivative_path: q_deriv.to_f64().unwrap_or(f64::NAN),
            closed_form: q_closed.to_f64().unwrap_or(f64::NAN),
        });
    }

    let wva_fi = p_f * f_classical;
    let crb = match crb_bound(p_f, f_classical) {
        Ok(v) => v,
        Err(Error::NonpositiveInformation { .. }) => T::infinity(),
        Err(e) => return Err(e),
    };
    Ok(FisherReport {
        p_f,
        f_classical,
        q_quantum: q_deriv,
        wva_fi,
        wva_qfi: p_f * q_deriv,
        q_conventional: qfi_conventional(probe),
        crb,
        n_max,
    })
}

/// [`fisher_report_with_tol`] at the default tail tolerance.
pub fn fisher_report<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
) -> Result<FisherReport<T>> {
    fisher_report_with_tol(angles, probe, coupling, real(DEFAULT_TAIL_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::postselect::postselected_state;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn angles(ti: f64, tf: f64, p0: f64) -> PpsAngles<f64> {
        PpsAngles::new(ti, tf, p0).unwrap()
    }

    fn probe(n: f64) -> CoherentProbe<f64> {
        CoherentProbe::new(n).unwrap()
    }

    fn quad(chi: f64) -> CouplingConfig<f64> {
        CouplingConfig::quadratic(chi).unwrap()
    }

    #[test]
    fn distribution_reduces_to_poisson_at_pole() {
        let p = probe(8.0);
        let n_max = default_n_max(&p, 1e-12);
        let dist = outcome_distribution(&angles(0.0, 1.2, 0.3), &p, &quad(0.08), n_max).unwrap();
        let weights = poisson_weights(8.0, n_max);
        for (got, want) in dist.probs().iter().zip(&weights) {
            assert_relative_eq!(got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn distribution_normalizes() {
        for (ti, tf, p0, chi, n) in [
            (FRAC_PI_2, FRAC_PI_2, PI, 0.1, 8.0),
            (0.7, 2.1, 1.9, 0.03, 4.0),
            (1.2, 4.8, 0.2, 0.15, 20.0),
        ] {
            let p = probe(n);
            let n_max = default_n_max(&p, 1e-12);
            let dist = outcome_distribution(&angles(ti, tf, p0), &p, &quad(chi), n_max).unwrap();
            assert_relative_eq!(dist.total(), 1.0, epsilon = 1e-10);
            assert!(dist.probs().iter().all(|&x| x >= -1e-12));
        }
    }

    #[test]
    fn distribution_matches_state_vector_path() {
        let a = angles(FRAC_PI_2, FRAC_PI_2, PI);
        let p = probe(8.0);
        let coupling = quad(0.1);
        let n_max = default_n_max(&p, 1e-12);
        let dist = outcome_distribution(&a, &p, &coupling, n_max).unwrap();
        let (state, p_f) = postselected_state(&a, &p, &coupling, n_max).unwrap();
        for n in 0..=n_max {
            let from_state = state.amplitude(n).norm_sqr() / p_f;
            assert_relative_eq!(dist.prob(n), from_state, epsilon = 1e-12);
        }
    }

    #[test]
    fn distribution_degenerate_errors() {
        let p = probe(8.0);
        let n_max = default_n_max(&p, 1e-12);
        assert!(matches!(
            outcome_distribution(&angles(FRAC_PI_2, FRAC_PI_2, PI), &p, &quad(0.0), n_max),
            Err(Error::DegeneratePostselection { .. })
        ));
    }

    #[test]
    fn fisher_vanishes_at_pole() {
        let p = probe(8.0);
        let n_max = default_n_max(&p, 1e-12);
        let a = angles(0.0, 1.0, 0.5);
        assert!(classical_fisher(&a, &p, &quad(0.1), n_max).unwrap().abs() < 1e-10);
        let fd = classical_fisher_fd(&a, &p, &quad(0.1), n_max, default_fd_step(n_max, 2)).unwrap();
        assert!(fd.abs() < 1e-10);
    }

    #[test]
    fn fisher_analytic_matches_finite_difference() {
        for (ti, tf, p0, chi, n) in [
            (FRAC_PI_2, FRAC_PI_2, PI, 0.1, 8.0),
            (FRAC_PI_2, 3.0 * FRAC_PI_2, PI, 0.01, 8.0),
            (0.9, 2.3, 1.1, 0.05, 4.0),
            (2.2, 5.1, 0.6, 0.15, 16.0),
        ] {
            let a = angles(ti, tf, p0);
            let p = probe(n);
            let coupling = quad(chi);
            let n_max = default_n_max(&p, 1e-12);
            let analytic = classical_fisher(&a, &p, &coupling, n_max).unwrap();
            let fd = classical_fisher_fd(&a, &p, &coupling, n_max, default_fd_step(n_max, 2))
                .unwrap();
            assert_relative_eq!(analytic, fd, max_relative = 1e-6);
        }
    }

    #[test]
    fn finite_difference_second_order_convergence() {
        let a = angles(1.0, 2.0, 0.7);
        let p = probe(6.0);
        let coupling = quad(0.05);
        let n_max = default_n_max(&p, 1e-12);
        let exact = classical_fisher(&a, &p, &coupling, n_max).unwrap();
        let h = 1e-3;
        let err_h = (classical_fisher_fd(&a, &p, &coupling, n_max, h).unwrap() - exact).abs();
        let err_h2 =
            (classical_fisher_fd(&a, &p, &coupling, n_max, h / 2.0).unwrap() - exact).abs();
        let ratio = err_h / err_h2;
        assert!(
            (2.5..=6.0).contains(&ratio),
            "expected ~4x error reduction, got {ratio} ({err_h} -> {err_h2})"
        );
    }

    #[test]
    fn qfi_routes_agree_at_reference_points() {
        for (ti, tf, p0, chi, n) in [
            (FRAC_PI_2, FRAC_PI_2, PI, 0.1, 8.0),
            (FRAC_PI_2, FRAC_PI_2, PI, 0.01, 8.0),
            (0.8, 2.0, 0.9, 0.07, 12.0),
        ] {
            let a = angles(ti, tf, p0);
            let p = probe(n);
            let coupling = quad(chi);
            let n_max = default_n_max(&p, 1e-12);
            let q_d = qfi_derivative_path(&a, &p, &coupling, n_max).unwrap();
            let q_c = qfi_closed_form(&a, &p, &coupling, n_max).unwrap();
            assert_relative_eq!(q_d, q_c, max_relative = 1e-8);
        }
    }

    #[test]
    fn qfi_reduces_to_conventional_at_pole() {
        for (tf, chi, n) in [(1.0, 0.1, 8.0), (2.5, 0.02, 16.0)] {
            let a = angles(0.0, tf, 0.0);
            let p = probe(n);
            let n_max = default_n_max(&p, 1e-12);
            let q = qfi_derivative_path(&a, &p, &quad(chi), n_max).unwrap();
            assert_relative_eq!(q, qfi_conventional(&p), max_relative = 1e-8);
            // closed form: p_f Q_f = cos^2(theta_f/2) Q_cm at B = 0
            let q_c = qfi_closed_form(&a, &p, &quad(chi), n_max).unwrap();
            let p_f = (tf / 2.0f64).cos().powi(2);
            assert_relative_eq!(p_f * q_c, p_f * qfi_conventional(&p), max_relative = 1e-8);
        }
    }

    #[test]
    fn wva_quantities_exceed_conventional_at_strong_coupling() {
        // reference point from the theta_f sweep at chi = 0.1, N = 8
        let p = probe(8.0);
        let q_cm = qfi_conventional(&p);
        assert_relative_eq!(q_cm, 9760.0, max_relative = 1e-14);
        let mut max_wva_fi: f64 = 0.0;
        let mut max_wva_qfi: f64 = 0.0;
        for i in 0..=200 {
            let tf = TAU * i as f64 / 200.0;
            let a = angles(FRAC_PI_2, tf, PI);
            match fisher_report(&a, &p, &quad(0.1)) {
                Ok(r) => {
                    max_wva_fi = max_wva_fi.max(r.wva_fi);
                    max_wva_qfi = max_wva_qfi.max(r.wva_qfi);
                }
                Err(Error::DegeneratePostselection { .. }) => continue,
                Err(e) => panic!("{e}"),
            }
        }
        assert!(max_wva_fi > q_cm, "max p_f F_f = {max_wva_fi}");
        assert!(max_wva_qfi > q_cm, "max p_f Q_f = {max_wva_qfi}");
    }

    #[test]
    fn conventional_qfi_values() {
        assert_eq!(qfi_conventional(&probe(0.0)), 0.0);
        assert_eq!(qfi_conventional(&probe(8.0)), 9760.0);
        for n in [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0] {
            let p = probe(n);
            let n_max = default_n_max(&p, 1e-14);
            let m2 = crate::fock::photon_moment(&p, 2, n_max).unwrap();
            let m4 = crate::fock::photon_moment(&p, 4, n_max).unwrap();
            assert_relative_eq!(
                qfi_conventional(&p),
                4.0 * (m4 - m2 * m2),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn crb_examples() {
        assert_relative_eq!(crb_bound(1.0, 4.0).unwrap(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(
            crb_bound(0.5, 9760.0 * 2.0).unwrap(),
            1.0 / 9760.0f64.sqrt(),
            max_relative = 1e-15
        );
        assert!(matches!(
            crb_bound(0.0, 100.0),
            Err(Error::NonpositiveInformation { .. })
        ));
        assert!(matches!(
            crb_bound(0.5, -1.0),
            Err(Error::NonpositiveInformation { .. })
        ));
    }

    #[test]
    fn report_at_trivial_pps() {
        let r = fisher_report(&angles(0.0, 0.0, 0.0), &probe(8.0), &quad(0.05)).unwrap();
        assert_relative_eq!(r.p_f, 1.0, epsilon = 1e-12);
        assert_relative_eq!(r.q_quantum, 9760.0, max_relative = 1e-8);
        assert!(r.f_classical.abs() < 1e-10);
        assert!(r.crb.is_infinite());
    }

    #[test]
    fn report_crb_is_definitional() {
        let r = fisher_report(
            &angles(FRAC_PI_2, FRAC_PI_2, PI),
            &probe(8.0),
            &quad(0.05),
        )
        .unwrap();
        assert!(r.wva_fi > 0.0);
        assert_relative_eq!(r.crb * r.wva_fi.sqrt(), 1.0, max_relative = 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn information_inequality_and_dual_path(
            ti in 0.0f64..TAU,
            tf in 0.0f64..TAU,
            p0 in 0.0f64..TAU,
            chi in 1e-4f64..0.2,
            n_mean in 1.0f64..32.0,
        ) {
            let a = angles(ti, tf, p0);
            let p = probe(n_mean);
            let coupling = quad(chi);
            let n_max = default_n_max(&p, 1e-12);
            let p_f = crate::postselect::postselection_probability(&a, &p, &coupling, n_max);
            prop_assume!(p_f >= 1e-6);
            let f = classical_fisher(&a, &p, &coupling, n_max).unwrap();
            let q_d = qfi_derivative_path(&a, &p, &coupling, n_max).unwrap();
            let q_c = qfi_closed_form(&a, &p, &coupling, n_max).unwrap();
            prop_assert!(f <= q_c * (1.0 + 1e-8) + 1e-9,
                "F = {f} exceeds Q = {q_c}");
            let scale = q_d.abs().max(q_c.abs()).max(1.0);
            prop_assert!((q_d - q_c).abs() <= 1e-8 * scale,
                "paths disagree: {q_d} vs {q_c}");
        }
    }
}
