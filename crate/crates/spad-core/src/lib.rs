//! Simulation and characterization toolkit for single-photon avalanche
//! detectors (SPADs) under rapid gating, plus a coherent one-way (COW) QKD
//! secure-key-rate model driven by the same detector descriptions.
//!
//! The crate is organized around the measurement chain of a gated SPAD:
//!
//! - [`trap`] — multi-exponential detrapping model: the afterpulse intensity
//!   `f(t) = Σ aᵢ·exp(−t/τᵢ)` left behind by every detected avalanche, and its
//!   closed-form integral between two delays.
//! - [`detector`] — detector and pulse-train descriptions (gated, free-running,
//!   superconducting) and the closed-form efficiency relations between mean
//!   photon number, dark probability, and detection probability.
//! - [`montecarlo`] — event-driven stochastic simulation of click streams with
//!   ground-truth cause labels, trap-driven afterpulse cascades, and
//!   non-paralyzable deadtime.
//! - [`estimators`] — the measurement pipeline applied to event streams:
//!   coincidence classification, efficiency estimation, the scanned
//!   coincidence-window afterpulse histogram, duty-cycle normalization with
//!   iterative higher-order correction, and count-rate curves.
//! - [`trapfit`] — weighted nonlinear least-squares fitting of the detrapping
//!   model to corrected intensity series (damped Gauss-Newton with
//!   multi-start initialization).
//! - [`qkd`] — COW protocol link model: transmittance, per-slot noise, the
//!   deadtime/afterpulse operating-point fixed point, secure key rate, and
//!   distance scans.
//! - [`io`] — CSV/JSON interchange formats for event streams, histograms,
//!   fit reports, and key-rate scans.
//!
//! # Units
//!
//! Time is carried in **nanoseconds** throughout, rates and intensities in
//! **ns⁻¹** (so a frequency expressed in GHz is numerically its internal
//! value). Fields that cross an external boundary in other units (Hz, MHz,
//! km, dB) say so in their names. Unit conversions belong at the
//! configuration boundary, not inside the math.

pub mod detector;
pub mod error;
pub mod estimators;
pub mod io;
pub mod montecarlo;
pub mod qkd;
pub mod trap;
pub mod trapfit;

pub use detector::{
    detection_prob, efficiency_from_counts, FreeRunningSpadConfig, GatedSpadConfig,
    PulseTrainConfig, SspdConfig,
};
pub use error::Error;
pub use trap::{afterpulse_prob_between, trap_intensity, TrapComponent, TrapModel};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
