//! Truncated Fock-space numerics for a coherent probe field.
//!
//! A coherent state |α⟩ with mean photon number N = |α|² has Poisson photon
//! statistics. Everything downstream works on the amplitude vector over the
//! Fock levels 0..=n_max, with the discarded tail mass tracked explicitly.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{real, CompensatedSum, Real};

/// Levels added on top of the certified Poisson cutoff when a truncation
/// is chosen automatically.
pub const TRUNCATION_SAFETY_MARGIN: usize = 5;

/// Default certified tail tolerance for automatic truncation.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Coherent probe field, parameterized by its mean photon number N = |α|².
///
/// The amplitude α is taken real and nonnegative (α = √N); every quantity
/// computed here depends on α only through N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentProbe<T> {
    mean_photons: T,
}

impl<T: Real> CoherentProbe<T> {
    pub fn new(mean_photons: T) -> Result<Self> {
        if !mean_photons.is_finite() || mean_photons < T::zero() {
            return Err(Error::InvalidParameter(format!(
                "mean photon number must be finite and nonnegative, got {mean_photons}"
            )));
        }
        Ok(Self { mean_photons })
    }

    #[inline]
    pub fn mean_photons(&self) -> T {
        self.mean_photons
    }
}

/// Sign of the phase imprinted on the meter, set by the coupled qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseSign {
    Plus,
    Minus,
}

impl PhaseSign {
    #[inline]
    fn factor<T: Real>(self) -> T {
        match self {
            PhaseSign::Plus => T::one(),
            PhaseSign::Minus => -T::one(),
        }
    }
}

/// Nonlinear coupling: integrated strength χ = λτ and the nonlinearity
/// order k of the σ_z n̂ᵏ interaction (k = 2 for the Kerr-type coupling).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingConfig<T> {
    chi: T,
    order: u32,
}

impl<T: Real> CouplingConfig<T> {
    pub fn new(chi: T, order: u32) -> Result<Self> {
        if !chi.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "coupling strength must be finite, got {chi}"
            )));
        }
        if order < 1 {
            return Err(Error::InvalidParameter(
                "nonlinearity order must be at least 1".into(),
            ));
        }
        Ok(Self { chi, order })
    }

    /// Quadratic coupling, the case of interest.
    pub fn quadratic(chi: T) -> Result<Self> {
        Self::new(chi, 2)
    }

    #[inline]
    pub fn chi(&self) -> T {
        self.chi
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn with_chi(&self, chi: T) -> Result<Self> {
        Self::new(chi, self.order)
    }
}

/// Complex amplitude vector over Fock levels 0..=n_max, with the guaranteed
/// discarded probability mass recorded as `tail_bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMeterState<T> {
    amplitudes: Vec<Complex<T>>,
    tail_bound: T,
}

impl<T: Real> TruncatedMeterState<T> {
    pub fn new(amplitudes: Vec<Complex<T>>, tail_bound: T) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidParameter(
                "meter state needs at least the vacuum level".into(),
            ));
        }
        if !tail_bound.is_finite() || tail_bound < T::zero() {
            return Err(Error::InvalidParameter(format!(
                "tail bound must be finite and nonnegative, got {tail_bound}"
            )));
        }
        Ok(Self {
            amplitudes,
            tail_bound,
        })
    }

    #[inline]
    pub fn n_max(&self) -> usize {
        self.amplitudes.len() - 1
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    #[inline]
    pub fn amplitude(&self, n: usize) -> Complex<T> {
        self.amplitudes[n]
    }

    #[inline]
    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }

    /// Σₙ |amplitude(n)|², compensated.
    pub fn norm_sqr(&self) -> T {
        let mut acc = CompensatedSum::new();
        for a in &self.amplitudes {
            acc.add(a.norm_sqr());
        }
        acc.total()
    }

    /// ⟨self|other⟩ over the common truncated basis.
    pub fn overlap(&self, other: &Self) -> Complex<T> {
        let mut re = CompensatedSum::new();
        let mut im = CompensatedSum::new();
        for (a, b) in self.amplitudes.iter().zip(&other.amplitudes) {
            let z = a.conj() * b;
            re.add(z.re);
            im.add(z.im);
        }
        Complex::new(re.total(), im.total())
    }
}

/// n^k in the working scalar type (exact in f64 for the ranges used here).
#[inline]
pub(crate) fn level_pow<T: Real>(n: usize, k: u32) -> T {
    real((n as f64).powi(k as i32))
}

/// Poisson(N) weights e^{-N} Nⁿ/n! for n = 0..=n_max, by stable upward
/// recursion.
pub(crate) fn poisson_weights<T: Real>(mean: T, n_max: usize) -> Vec<T> {
    let mut weights = Vec::with_capacity(n_max + 1);
    let mut w = (-mean).exp();
    for n in 0..=n_max {
        weights.push(w);
        w = w * mean / real(n as f64 + 1.0);
    }
    weights
}

/// Smallest n_max such that the Poisson(N) mass above n_max is below
/// `tail_tol`.
///
/// Monotone nondecreasing in N and nonincreasing in the tolerance. The
/// safety margin used for automatic truncations is applied by callers, not
/// here.
pub fn truncation_cutoff<T: Real>(probe: &CoherentProbe<T>, tail_tol: T) -> usize {
    assert!(
        tail_tol > T::zero() && tail_tol < T::one(),
        "tail tolerance must lie in (0, 1)"
    );
    let mean = probe.mean_photons();
    let mut cumulative = CompensatedSum::new();
    let mut w = (-mean).exp();
    let mut n = 0usize;
    // Poisson tails decay superexponentially past the mode; the hard cap is
    // unreachable for any tolerance representable in the scalar type.
    let cap = 100 * (mean.to_usize().unwrap_or(0) + 100);
    loop {
        cumulative.add(w);
        if T::one() - cumulative.total() < tail_tol || n >= cap {
            return n;
        }
        w = w * mean / real(n as f64 + 1.0);
        n += 1;
    }
}

/// Truncation level used when none is given explicitly: certified cutoff
/// plus a fixed safety margin.
pub fn default_n_max<T: Real>(probe: &CoherentProbe<T>, tail_tol: T) -> usize {
    truncation_cutoff(probe, tail_tol) + TRUNCATION_SAFETY_MARGIN
}

/// Coherent-state amplitudes cₙ = e^{-N/2} N^{n/2}/√(n!) on the truncated
/// basis. All real nonnegative; the discarded Poisson mass becomes the tail
/// bound.
pub fn coherent_amplitudes<T: Real>(
    probe: &CoherentProbe<T>,
    n_max: usize,
) -> TruncatedMeterState<T> {
    let weights = poisson_weights(probe.mean_photons(), n_max);
    let mut kept = CompensatedSum::new();
    let amplitudes = weights
        .iter()
        .map(|&w| {
            kept.add(w);
            Complex::new(w.sqrt(), T::zero())
        })
        .collect();
    let tail = (T::one() - kept.total()).max(T::zero());
    TruncatedMeterState {
        amplitudes,
        tail_bound: tail,
    }
}

/// Imprints the nonlinear phase e^{i·sign·χ·nᵏ} on each Fock component.
/// Unitary on the truncated subspace: the norm is unchanged.
pub fn encode_phase<T: Real>(
    state: &TruncatedMeterState<T>,
    coupling: &CouplingConfig<T>,
    sign: PhaseSign,
) -> TruncatedMeterState<T> {
    let s: T = sign.factor();
    let amplitudes = state
        .amplitudes
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let phase = s * coupling.chi() * level_pow::<T>(n, coupling.order());
            a * Complex::from_polar(T::one(), phase)
        })
        .collect();
    TruncatedMeterState {
        amplitudes,
        tail_bound: state.tail_bound,
    }
}

/// Photon-number moment ⟨n̂ᵖ⟩ over the coherent state, by direct weighted
/// Poisson series summation. This series value is the ground truth the
/// closed-form polynomials are checked against.
pub fn photon_moment<T: Real>(probe: &CoherentProbe<T>, power: u32, n_max: usize) -> Result<T> {
    if !(1..=4).contains(&power) {
        return Err(Error::InvalidMomentPower(power));
    }
    Ok(weighted_moment(
        &poisson_weights(probe.mean_photons(), n_max),
        power,
    ))
}

/// Σₙ wₙ nᵖ with compensated accumulation.
pub(crate) fn weighted_moment<T: Real>(weights: &[T], power: u32) -> T {
    let mut acc = CompensatedSum::new();
    for (n, &w) in weights.iter().enumerate() {
        acc.add(w * level_pow::<T>(n, power));
    }
    acc.total()
}
