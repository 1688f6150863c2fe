//! Detector and pulse-train descriptions plus the closed-form counting
//! relations shared by the simulator, the estimators, and the QKD model.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::trap::TrapModel;
use crate::Result;

/// A rapidly gated SPAD: armed for `gate_width_ns` once per gate period.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GatedSpadConfig {
    /// Gate repetition frequency in GHz (numerically ns⁻¹).
    pub gate_frequency_ghz: f64,
    /// Effective gating width in ns.
    pub gate_width_ns: f64,
    /// Detection efficiency per photon falling inside an open gate.
    pub efficiency: f64,
    /// Dark count probability per gate.
    pub dark_prob_per_gate: f64,
    /// Hold-off after a recorded detection, in ns.
    pub deadtime_ns: f64,
    /// Detrapping model seeded by every recorded detection.
    pub trap_model: TrapModel,
    /// Operating temperature in °C. Metadata only; nothing is derived from it.
    pub temperature_label_c: f64,
}

impl GatedSpadConfig {
    /// Validate the documented invariants.
    pub fn validate(&self) -> Result<()> {
        let duty = self.duty_cycle();
        if !(duty > 0.0 && duty <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "duty cycle gate_width*gate_frequency = {duty} must lie in (0, 1]"
            )));
        }
        let gate_period = 1.0 / self.gate_frequency_ghz;
        if self.deadtime_ns < gate_period {
            return Err(Error::InvalidConfig(format!(
                "deadtime {} ns must cover at least one gate period {} ns",
                self.deadtime_ns, gate_period
            )));
        }
        if !(0.0..1.0).contains(&self.dark_prob_per_gate) {
            return Err(Error::InvalidConfig(format!(
                "dark probability per gate {} must lie in [0, 1)",
                self.dark_prob_per_gate
            )));
        }
        if !(0.0..=1.0).contains(&self.efficiency) {
            return Err(Error::InvalidConfig(format!(
                "efficiency {} must lie in [0, 1]",
                self.efficiency
            )));
        }
        Ok(())
    }

    /// Fraction of time the detector is armed, `t_g · f_g`.
    pub fn duty_cycle(&self) -> f64 {
        self.gate_width_ns * self.gate_frequency_ghz
    }

    /// Gate period in ns.
    pub fn gate_period_ns(&self) -> f64 {
        1.0 / self.gate_frequency_ghz
    }
}

/// A free-running (not gated) SPAD.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeRunningSpadConfig {
    /// Detection efficiency per incident photon.
    pub efficiency: f64,
    /// Dark count intensity in ns⁻¹.
    pub dark_rate_per_ns: f64,
    /// Hold-off after a recorded detection, in ns.
    pub deadtime_ns: f64,
    /// Detrapping model seeded by every recorded detection.
    pub trap_model: TrapModel,
}

impl FreeRunningSpadConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dark_rate_per_ns < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "dark rate {} must be non-negative",
                self.dark_rate_per_ns
            )));
        }
        if !(self.deadtime_ns > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "deadtime {} ns must be positive",
                self.deadtime_ns
            )));
        }
        if !(0.0..=1.0).contains(&self.efficiency) {
            return Err(Error::InvalidConfig(format!(
                "efficiency {} must lie in [0, 1]",
                self.efficiency
            )));
        }
        Ok(())
    }
}

/// A superconducting single-photon detector, characterized by its recovery
/// time (minimum output pulse width); the implied maximum count rate is
/// `1/recovery_time`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SspdConfig {
    /// System detection efficiency per incident photon.
    pub efficiency: f64,
    /// Dark count rate in Hz.
    pub dark_rate_hz: f64,
    /// Recovery time (minimum pulse width) in ns.
    pub recovery_time_ns: f64,
}

impl SspdConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.recovery_time_ns > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "recovery time {} ns must be positive",
                self.recovery_time_ns
            )));
        }
        if self.dark_rate_hz < 0.0 {
            return Err(Error::InvalidConfig("dark rate must be non-negative".into()));
        }
        if !(0.0..=1.0).contains(&self.efficiency) {
            return Err(Error::InvalidConfig(format!(
                "efficiency {} must lie in [0, 1]",
                self.efficiency
            )));
        }
        Ok(())
    }

    /// Dark count intensity in ns⁻¹.
    pub fn dark_rate_per_ns(&self) -> f64 {
        self.dark_rate_hz * 1e-9
    }

    /// Maximum sustainable count rate in Hz, `1/recovery_time`.
    pub fn max_count_rate_hz(&self) -> f64 {
        1e9 / self.recovery_time_ns
    }
}

/// Synchronous pulsed-laser drive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PulseTrainConfig {
    /// Laser repetition frequency in MHz.
    pub laser_frequency_mhz: f64,
    /// Mean photon number per pulse after attenuation.
    pub mean_photons: f64,
    /// Timing window that defines a photon detection, in ns.
    pub detection_window_ns: f64,
}

impl PulseTrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.laser_frequency_mhz > 0.0) {
            return Err(Error::InvalidConfig(
                "laser frequency must be positive".into(),
            ));
        }
        if self.mean_photons < 0.0 {
            return Err(Error::InvalidConfig(
                "mean photon number must be non-negative".into(),
            ));
        }
        if !(self.detection_window_ns > 0.0) {
            return Err(Error::InvalidConfig(
                "detection window must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Laser repetition frequency in ns⁻¹.
    pub fn laser_frequency_per_ns(&self) -> f64 {
        self.laser_frequency_mhz * 1e-3
    }

    /// Laser period in ns.
    pub fn period_ns(&self) -> f64 {
        1e3 / self.laser_frequency_mhz
    }
}

/// Detection efficiency from measured count probabilities:
///
/// ```text
/// η = (1/µ) · ln[(1 − P_dc) / (1 − P_de)]
/// ```
///
/// where `µ` is the mean photon number per pulse, `P_dc` the dark count
/// probability per gate, and `P_de` the detection probability per laser
/// pulse. Errors if `µ = 0` or if `P_de < P_dc` (which would imply negative
/// efficiency and signals miscalibrated inputs).
pub fn efficiency_from_counts(mu: f64, p_dc: f64, p_de: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::Domain(format!(
            "mean photon number must be positive, got {mu}"
        )));
    }
    if !(0.0..1.0).contains(&p_dc) {
        return Err(Error::Domain(format!(
            "dark probability {p_dc} must lie in [0, 1)"
        )));
    }
    if !(p_de < 1.0) {
        return Err(Error::Domain(format!(
            "detection probability {p_de} must lie below 1"
        )));
    }
    if p_de < p_dc {
        return Err(Error::Domain(format!(
            "detection probability {p_de} below dark probability {p_dc}"
        )));
    }
    Ok(((1.0 - p_dc) / (1.0 - p_de)).ln() / mu)
}

/// Detection probability per pulse for a given efficiency — the algebraic
/// inverse of [`efficiency_from_counts`]:
///
/// ```text
/// P_de = 1 − (1 − P_dc) · exp(−µ·η)
/// ```
pub fn detection_prob(mu: f64, eta: f64, p_dc: f64) -> f64 {
    1.0 - (1.0 - p_dc) * (-mu * eta).exp()
}
