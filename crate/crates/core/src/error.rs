use thiserror::Error;

/// Errors surfaced by the library.
///
/// Diagnostic payloads are carried as `f64` regardless of the working scalar
/// type; they are for reporting only.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Postselection succeeds with probability below the degeneracy floor;
    /// the conditional meter state is numerically undefined.
    #[error("degenerate postselection: p_f = {p_f:.3e} is below the floor {floor:.1e}")]
    DegeneratePostselection { p_f: f64, floor: f64 },

    /// The pre- and post-selection states are (numerically) orthogonal, so
    /// the weak value diverges.
    #[error("divergent weak value: |<f|i>| = {overlap:.3e} is at or below {floor:.1e}")]
    DivergentWeakValue { overlap: f64, floor: f64 },

    /// Cramér–Rao bound requested for nonpositive information.
    #[error("nonpositive information: p_f * F = {product:.3e}")]
    NonpositiveInformation { product: f64 },

    /// The two independent QFI routes disagree beyond tolerance.
    #[error(
        "QFI path mismatch: derivative path {derivative_path:.9e} vs closed form {closed_form:.9e}"
    )]
    PathMismatch {
        derivative_path: f64,
        closed_form: f64,
    },

    /// Photon-number moment requested outside the supported range 1..=4.
    #[error("unsupported moment power {0} (supported: 1..=4)")]
    InvalidMomentPower(u32),

    /// Power-law fit input contains a nonpositive coordinate.
    #[error("nonpositive data for log-log fit at point {index}")]
    NonpositiveData { index: usize },

    /// Power-law fit needs at least three points.
    #[error("insufficient points for fit: got {got}, need at least 3")]
    InsufficientPoints { got: usize },

    /// A domain value violated its invariant on construction.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
