//! Quantum metrology of a qubit coupled to a coherent optical meter through
//! a quadratic (Kerr-type) nonlinearity, with pre- and post-selection of the
//! qubit.
//!
//! The coupling U = e^{iχσ_z n̂²} imprints the phase e^{∓iχn²} on each Fock
//! component of the meter. Postselecting the qubit conditions the meter on a
//! superposition of the two encoded branches; this crate computes, on a
//! truncated Fock basis with certified tail mass:
//!
//! - postselection probabilities and conditional photon-number distributions,
//! - classical Fisher information of χ (analytic derivative and an
//!   independent finite-difference route),
//! - the postselected quantum Fisher information by two independent routes
//!   (derivative states and a closed-form series expression),
//! - the conventional-scheme QFI Q_cm = 4(4N³ + 6N² + N) and the
//!   Cramér–Rao precision bound,
//! - parameter sweeps and log-log slope fits for the precision-scaling
//!   exponent in the mean photon number.
//!
//! All numerics are generic over the floating-point scalar (see
//! [`scalar::Real`]); the aliases below fix `f64`, which every quantitative
//! guarantee in the test suite refers to.

pub mod error;
pub mod fock;
pub mod infotheory;
pub mod postselect;
pub mod scalar;
pub mod scaling;

mod series;

pub use error::{Error, Result};
pub use fock::{
    coherent_amplitudes, default_n_max, encode_phase, photon_moment, truncation_cutoff,
    PhaseSign, DEFAULT_TAIL_TOL, TRUNCATION_SAFETY_MARGIN,
};
pub use infotheory::{
    classical_fisher, classical_fisher_fd, crb_bound, default_fd_step, fisher_report,
    fisher_report_with_tol, outcome_distribution, qfi_closed_form, qfi_conventional,
    qfi_derivative_path, PROB_FLOOR, QFI_PATH_TOL,
};
pub use postselect::{
    amplified_strength, postselected_state, postselection_probability, pps_coefficients,
    weak_value, OVERLAP_MIN, P_MIN,
};
pub use scalar::Real;
pub use scaling::{fit_power_law, run_sweep, SweepAxis};

/// Double-precision aliases; the default working types.
pub type CoherentProbe = fock::CoherentProbe<f64>;
pub type CouplingConfig = fock::CouplingConfig<f64>;
pub type TruncatedMeterState = fock::TruncatedMeterState<f64>;
pub type PpsAngles = postselect::PpsAngles<f64>;
pub type PpsCoefficients = postselect::PpsCoefficients<f64>;
pub type OutcomeDistribution = infotheory::OutcomeDistribution<f64>;
pub type FisherReport = infotheory::FisherReport<f64>;
pub type SweepBase = scaling::SweepBase<f64>;
pub type SweepSpec = scaling::SweepSpec<f64>;
pub type SweepRow = scaling::SweepRow<f64>;
pub type ScalingFit = scaling::ScalingFit<f64>;
