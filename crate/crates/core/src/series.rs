//! Shared Poisson-weighted trigonometric series, summed ascending from n = 0
//! with compensated accumulation. The weights are unimodal, which keeps this
//! ordering well-conditioned for the photon numbers in scope (N ≲ 200).

use crate::fock::{level_pow, CouplingConfig};
use crate::scalar::{CompensatedSum, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TrigKind {
    Cos,
    Sin,
}

/// Σₙ wₙ · nᵖ · trig(2χnᵏ + φ₀).
pub(crate) fn phase_series_sum<T: Real>(
    weights: &[T],
    coupling: &CouplingConfig<T>,
    phi_0: T,
    power: u32,
    kind: TrigKind,
) -> T {
    let two = T::one() + T::one();
    let mut acc = CompensatedSum::new();
    for (n, &w) in weights.iter().enumerate() {
        let arg = two * coupling.chi() * level_pow::<T>(n, coupling.order()) + phi_0;
        let trig = match kind {
            TrigKind::Cos => arg.cos(),
            TrigKind::Sin => arg.sin(),
        };
        let term = if power == 0 {
            w * trig
        } else {
            w * level_pow::<T>(n, power) * trig
        };
        acc.add(term);
    }
    acc.total()
}
