//! Pre/post-selection geometry on the qubit Bloch sphere.
//!
//! The qubit is prepared in |i⟩ = cos(θ_i/2)|1⟩ + sin(θ_i/2)e^{iφ_i}|2⟩,
//! coupled to the meter, then projected on |f⟩. Every observable in scope
//! depends on the phases only through φ₀ = φ_i − φ_f, so the configuration
//! stores just the difference.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fock::{coherent_amplitudes, CoherentProbe, CouplingConfig, TruncatedMeterState};
use crate::scalar::{real, CompensatedSum, Real};
use crate::series::{phase_series_sum, TrigKind};

/// Below this success probability the conditional meter state is treated as
/// degenerate and state construction fails loudly.
pub const P_MIN: f64 = 1e-12;

/// Overlap floor for weak-value divergence detection (the AAV limit).
pub const OVERLAP_MIN: f64 = 1e-12;

/// Pre/post-selection configuration (θ_i, θ_f, φ₀).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpsAngles<T> {
    theta_i: T,
    theta_f: T,
    phi_0: T,
}

impl<T: Real> PpsAngles<T> {
    pub fn new(theta_i: T, theta_f: T, phi_0: T) -> Result<Self> {
        for (name, v) in [("theta_i", theta_i), ("theta_f", theta_f), ("phi_0", phi_0)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(Self {
            theta_i,
            theta_f,
            phi_0,
        })
    }

    #[inline]
    pub fn theta_i(&self) -> T {
        self.theta_i
    }

    #[inline]
    pub fn theta_f(&self) -> T {
        self.theta_f
    }

    #[inline]
    pub fn phi_0(&self) -> T {
        self.phi_0
    }

    pub fn with_theta_f(&self, theta_f: T) -> Result<Self> {
        Self::new(self.theta_i, theta_f, self.phi_0)
    }

    /// Half-angle amplitude products a = cos(θ_i/2)cos(θ_f/2) and
    /// b = sin(θ_i/2)sin(θ_f/2) entering the postselected state.
    pub(crate) fn amplitude_products(&self) -> (T, T) {
        let half = real::<T>(0.5);
        let a = (self.theta_i * half).cos() * (self.theta_f * half).cos();
        let b = (self.theta_i * half).sin() * (self.theta_f * half).sin();
        (a, b)
    }
}

/// The trigonometric coefficients A, B, C of the closed-form expressions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpsCoefficients<T> {
    pub a_coef: T,
    pub b_coef: T,
    pub c_coef: T,
}

/// A = (1 + cosθ_i cosθ_f)/2, B = (sinθ_i sinθ_f)/2,
/// C = (cosθ_i + cosθ_f)/2.
pub fn pps_coefficients<T: Real>(angles: &PpsAngles<T>) -> PpsCoefficients<T> {
    let half = real::<T>(0.5);
    let (ci, cf) = (angles.theta_i().cos(), angles.theta_f().cos());
    let (si, sf) = (angles.theta_i().sin(), angles.theta_f().sin());
    PpsCoefficients {
        a_coef: half * (T::one() + ci * cf),
        b_coef: half * si * sf,
        c_coef: half * (ci + cf),
    }
}

/// Unnormalized postselected meter state and its squared norm p_f (the
/// postselection success probability).
///
/// Amplitude(n) = cₙ[a·e^{−iχnᵏ} + b·e^{iφ₀}·e^{+iχnᵏ}]. Errors out when
/// p_f falls below [`P_MIN`]; the normalized conditional state would be
/// numerically undefined there.
pub fn postselected_state<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> Result<(TruncatedMeterState<T>, T)> {
    let coherent = coherent_amplitudes(probe, n_max);
    let (a, b) = angles.amplitude_products();
    let branch_plus = Complex::from_polar(b, angles.phi_0());

    let mut amplitudes = Vec::with_capacity(n_max + 1);
    let mut norm = CompensatedSum::new();
    for (n, c_n) in coherent.amplitudes().iter().enumerate() {
        let phase = coupling.chi() * crate::fock::level_pow::<T>(n, coupling.order());
        let minus = Complex::from_polar(a, -phase);
        let plus = branch_plus * Complex::from_polar(T::one(), phase);
        let amp = c_n * (minus + plus);
        norm.add(amp.norm_sqr());
        amplitudes.push(amp);
    }
    let p_f = norm.total();
    if p_f < real(P_MIN) {
        return Err(Error::DegeneratePostselection {
            p_f: p_f.to_f64().unwrap_or(f64::NAN),
            floor: P_MIN,
        });
    }
    Ok((TruncatedMeterState::new(amplitudes, coherent.tail_bound())?, p_f))
}

/// Postselection success probability from the closed series
/// p_f = A + B·e^{−N}·Σₙ (Nⁿ/n!)·cos(2χnᵏ + φ₀).
///
/// Returns the value as computed (0 is a legitimate result here; the
/// degeneracy error belongs to state construction).
pub fn postselection_probability<T: Real>(
    angles: &PpsAngles<T>,
    probe: &CoherentProbe<T>,
    coupling: &CouplingConfig<T>,
    n_max: usize,
) -> T {
    let coeffs = pps_coefficients(angles);
    let weights = crate::fock::poisson_weights(probe.mean_photons(), n_max);
    let series = phase_series_sum(&weights, coupling, angles.phi_0(), 0, TrigKind::Cos);
    coeffs.a_coef + coeffs.b_coef * series
}

/// AAV weak value σ_z^w = ⟨f|σ_z|i⟩/⟨f|i⟩ on the Bloch states defined by
/// (θ_i, θ_f, φ₀), with σ_z = |2⟩⟨2| − |1⟩⟨1|.
pub fn weak_value<T: Real>(angles: &PpsAngles<T>) -> Result<Complex<T>> {
    let (a, b) = angles.amplitude_products();
    let plus = Complex::from_polar(b, angles.phi_0());
    let overlap = Complex::new(a, T::zero()) + plus;
    if overlap.norm() <= real(OVERLAP_MIN) {
        return Err(Error::DivergentWeakValue {
            overlap: overlap.norm().to_f64().unwrap_or(f64::NAN),
            floor: OVERLAP_MIN,
        });
    }
    let numerator = Complex::new(-a, T::zero()) + plus;
    Ok(numerator / overlap)
}

/// Amplified coupling strength χ̃ = χ·σ_z^w.
pub fn amplified_strength<T: Real>(
    coupling: &CouplingConfig<T>,
    angles: &PpsAngles<T>,
) -> Result<Complex<T>> {
    Ok(weak_value(angles)? * coupling.chi())
}
