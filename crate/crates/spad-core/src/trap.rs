//! Multi-exponential detrapping model.
//!
//! Carriers trapped during an avalanche are released over time and can fire
//! spurious avalanches (afterpulses). The release intensity left behind by a
//! single detected avalanche is modeled as a sum of exponentials,
//!
//! ```text
//! f(t) = Σᵢ aᵢ · exp(−t / τᵢ)        [ns⁻¹]
//! ```
//!
//! with one `(aᵢ, τᵢ)` pair per trap population. Every detected avalanche
//! contributes an independent copy of `f` to the instantaneous afterpulse
//! hazard (linear superposition of trap populations), so the expected number
//! of afterpulse triggers seen between two delays is the plain integral of
//! `f` over that interval.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// One trap population: release intensity amplitude and lifetime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrapComponent {
    /// Intensity at zero delay contributed by this population, in ns⁻¹.
    pub amplitude_per_ns: f64,
    /// Detrapping lifetime in ns.
    pub lifetime_ns: f64,
}

/// A validated detrapping model.
///
/// Invariants enforced at construction:
/// - every amplitude and lifetime is strictly positive and finite,
/// - lifetimes are strictly increasing (components are sorted into this
///   canonical order),
/// - the total trap charge `Σ aᵢ·τᵢ` is below unity, so a single avalanche
///   cannot seed an unbounded cascade.
///
/// The empty model (no afterpulsing at all) is a legal, distinguished value
/// available through [`TrapModel::none`]; `new` itself requires at least one
/// component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TrapComponent>", into = "Vec<TrapComponent>")]
pub struct TrapModel {
    components: Vec<TrapComponent>,
}

impl TrapModel {
    /// Build a model from one or more components, sorting them by lifetime.
    pub fn new(components: Vec<TrapComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidConfig(
                "trap model needs at least one component (use TrapModel::none() for no afterpulsing)"
                    .into(),
            ));
        }
        for c in &components {
            if !(c.amplitude_per_ns > 0.0) || !c.amplitude_per_ns.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "trap amplitude must be positive and finite, got {}",
                    c.amplitude_per_ns
                )));
            }
            if !(c.lifetime_ns > 0.0) || !c.lifetime_ns.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "trap lifetime must be positive and finite, got {}",
                    c.lifetime_ns
                )));
            }
        }
        let mut components = components;
        components.sort_by(|a, b| a.lifetime_ns.total_cmp(&b.lifetime_ns));
        if components
            .windows(2)
            .any(|w| w[0].lifetime_ns == w[1].lifetime_ns)
        {
            return Err(Error::InvalidConfig(
                "trap lifetimes must be distinct".into(),
            ));
        }
        let model = TrapModel { components };
        let charge = model.total_charge();
        if !(charge < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "total trap charge sum(a_i*tau_i) = {charge} must be below 1"
            )));
        }
        Ok(model)
    }

    /// The model with no trap populations: zero afterpulse intensity.
    pub fn none() -> Self {
        TrapModel {
            components: Vec::new(),
        }
    }

    /// Convenience constructor for a single population.
    pub fn single(amplitude_per_ns: f64, lifetime_ns: f64) -> Result<Self> {
        Self::new(vec![TrapComponent {
            amplitude_per_ns,
            lifetime_ns,
        }])
    }

    pub fn components(&self) -> &[TrapComponent] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Total trap charge `Σ aᵢ·τᵢ`: the expected number of afterpulse
    /// triggers a single avalanche would seed on an always-armed detector.
    pub fn total_charge(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.amplitude_per_ns * c.lifetime_ns)
            .sum()
    }

    /// Longest lifetime, or zero for the empty model.
    pub fn longest_lifetime(&self) -> f64 {
        self.components
            .last()
            .map(|c| c.lifetime_ns)
            .unwrap_or(0.0)
    }
}

impl TryFrom<Vec<TrapComponent>> for TrapModel {
    type Error = Error;

    fn try_from(components: Vec<TrapComponent>) -> Result<Self> {
        if components.is_empty() {
            Ok(TrapModel::none())
        } else {
            TrapModel::new(components)
        }
    }
}

impl From<TrapModel> for Vec<TrapComponent> {
    fn from(model: TrapModel) -> Self {
        model.components
    }
}

/// Afterpulse intensity `f(dt)` a single avalanche leaves behind `dt` ns
/// after it was detected. Strictly decreasing in `dt`; `f(0) = Σ aᵢ`.
pub fn trap_intensity(trap: &TrapModel, dt_ns: f64) -> f64 {
    trap.components
        .iter()
        .map(|c| c.amplitude_per_ns * (-dt_ns / c.lifetime_ns).exp())
        .sum()
}

/// Average afterpulse probability per detection: the integral of the
/// detrapping intensity from the deadtime `τ_d` to the mean interval between
/// detections `ΔT̄`,
///
/// ```text
/// P̄_ap = ∫_{τ_d}^{ΔT̄} f(t) dt = Σᵢ aᵢ·τᵢ·(exp(−τ_d/τᵢ) − exp(−ΔT̄/τᵢ))
/// ```
///
/// `ΔT̄ = ∞` is legal and yields the total residual afterpulse probability
/// beyond the deadtime. Errors if `ΔT̄ < τ_d`.
pub fn afterpulse_prob_between(trap: &TrapModel, tau_d_ns: f64, delta_t_bar_ns: f64) -> Result<f64> {
    if tau_d_ns < 0.0 || tau_d_ns.is_nan() {
        return Err(Error::Domain(format!(
            "deadtime must be non-negative, got {tau_d_ns}"
        )));
    }
    if delta_t_bar_ns < tau_d_ns || delta_t_bar_ns.is_nan() {
        return Err(Error::Domain(format!(
            "mean detection interval {delta_t_bar_ns} ns must be >= deadtime {tau_d_ns} ns"
        )));
    }
    Ok(trap
        .components
        .iter()
        .map(|c| {
            let tail_low = (-tau_d_ns / c.lifetime_ns).exp();
            let tail_high = if delta_t_bar_ns.is_infinite() {
                0.0
            } else {
                (-delta_t_bar_ns / c.lifetime_ns).exp()
            };
            c.amplitude_per_ns * c.lifetime_ns * (tail_low - tail_high)
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_component() -> TrapModel {
        TrapModel::new(vec![
            TrapComponent {
                amplitude_per_ns: 3e-4,
                lifetime_ns: 100.0,
            },
            TrapComponent {
                amplitude_per_ns: 2e-5,
                lifetime_ns: 1500.0,
            },
        ])
        .unwrap()
    }

    #[test]
    fn intensity_at_zero_is_amplitude_sum() {
        let m = TrapModel::single(4e-4, 100.0).unwrap();
        assert_eq!(trap_intensity(&m, 0.0), 4e-4);
    }

    #[test]
    fn intensity_one_lifetime() {
        let m = TrapModel::single(4e-4, 100.0).unwrap();
        let got = trap_intensity(&m, 100.0);
        let expected = 4e-4 * (-1.0f64).exp();
        assert!((got - expected).abs() < 1e-12, "got {got}");
        assert!((got - 1.4715e-4).abs() < 1e-8);
    }

    #[test]
    fn empty_model_is_zero_everywhere() {
        let m = TrapModel::none();
        assert_eq!(trap_intensity(&m, 0.0), 0.0);
        assert_eq!(afterpulse_prob_between(&m, 0.0, f64::INFINITY).unwrap(), 0.0);
        assert_eq!(m.total_charge(), 0.0);
    }

    #[test]
    fn integral_single_component_to_infinity() {
        // a*tau*exp(-tau_d/tau); cross-checked against adaptive quadrature
        // in tests/properties.rs.
        let m = TrapModel::single(4e-4, 100.0).unwrap();
        let got = afterpulse_prob_between(&m, 50.0, f64::INFINITY).unwrap();
        assert!((got - 2.426122638850534e-2).abs() < 1e-10, "got {got}");
    }

    #[test]
    fn integral_empty_interval_is_zero() {
        let m = two_component();
        assert_eq!(afterpulse_prob_between(&m, 200.0, 200.0).unwrap(), 0.0);
    }

    #[test]
    fn integral_two_component_frozen_quadrature_value() {
        // Value computed with an independent adaptive quadrature oracle
        // before the closed form was written.
        let m = two_component();
        let got = afterpulse_prob_between(&m, 10.0, 1000.0).unwrap();
        assert!((got - 4.154191215985918e-2).abs() < 1e-10, "got {got}");
    }

    #[test]
    fn integral_rejects_reversed_interval() {
        let m = two_component();
        assert!(matches!(
            afterpulse_prob_between(&m, 100.0, 50.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integral_bounded_by_total_charge() {
        let m = two_component();
        let total = afterpulse_prob_between(&m, 0.0, f64::INFINITY).unwrap();
        assert!((total - m.total_charge()).abs() < 1e-15);
    }

    #[test]
    fn construction_sorts_and_validates() {
        let m = TrapModel::new(vec![
            TrapComponent {
                amplitude_per_ns: 2e-5,
                lifetime_ns: 1500.0,
            },
            TrapComponent {
                amplitude_per_ns: 3e-4,
                lifetime_ns: 100.0,
            },
        ])
        .unwrap();
        assert_eq!(m.components()[0].lifetime_ns, 100.0);
        assert_eq!(m.longest_lifetime(), 1500.0);

        assert!(TrapModel::new(vec![]).is_err());
        assert!(TrapModel::single(-1e-4, 100.0).is_err());
        assert!(TrapModel::single(1e-4, 0.0).is_err());
        // total charge >= 1 rejected
        assert!(TrapModel::single(1e-2, 200.0).is_err());
        // duplicate lifetimes rejected
        assert!(TrapModel::new(vec![
            TrapComponent {
                amplitude_per_ns: 1e-4,
                lifetime_ns: 100.0
            },
            TrapComponent {
                amplitude_per_ns: 2e-4,
                lifetime_ns: 100.0
            },
        ])
        .is_err());
    }
}
