//! Forward-Euler RC zone model with an ideal, power-limited thermostat.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DisturbanceVector, ZoneState};
use crate::action::SetpointAction;
use crate::scalar::Scalar;

/// Simulated temperatures outside this band abort the run: the plant has
/// left any physically sensible regime.
pub const TEMP_GUARD: (f64, f64) = (-20.0, 60.0);

/// Lumped parameters of the zone.
///
/// The defaults give an open-loop time constant `R*C` of exactly 1.4 h, so
/// a 20-step (5 h) planning horizon spans several time constants and the
/// winter comfort band stays reachable within the 10 kW equipment limits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantConfig<F> {
    /// Thermal capacitance, J/K.
    pub capacitance: F,
    /// Envelope resistance at zero wind, K/W.
    pub resistance: F,
    /// Wind sensitivity of the envelope, s/m: `R_eff = R / (1 + k_w * w)`.
    pub wind_coeff: F,
    /// Effective solar aperture, m².
    pub solar_aperture: F,
    /// Heat gain per occupant, W.
    pub occupant_gain: F,
    /// Maximum heating power, W.
    pub max_heat_power: F,
    /// Maximum cooling power, W.
    pub max_cool_power: F,
    /// Simulation step, seconds (one thermostat decision per step).
    pub dt: F,
}

impl<F: Scalar> Default for PlantConfig<F> {
    fn default() -> Self {
        Self {
            capacitance: F::cast(1.26e6),
            resistance: F::cast(4e-3),
            wind_coeff: F::cast(0.1),
            solar_aperture: F::cast(3.0),
            occupant_gain: F::cast(100.0),
            max_heat_power: F::cast(1e4),
            max_cool_power: F::cast(1e4),
            dt: F::cast(900.0),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlantError {
    #[error("plant diverged: zone temperature {temp:.2} °C outside [{:.0}, {:.0}]", TEMP_GUARD.0, TEMP_GUARD.1)]
    Diverged { temp: f64 },
}

/// Advances the zone one step and returns the next state together with the
/// HVAC energy spent, in Joules.
///
/// The thermostat is ideal with power clipping: below the heating setpoint
/// it injects exactly the power that lands the Euler step on the setpoint,
/// saturating at `max_heat_power`; above the cooling setpoint it extracts
/// symmetrically. Inside the deadband it is off. Deterministic.
pub fn step_plant<F: Scalar>(
    state: ZoneState<F>,
    dist: &DisturbanceVector<F>,
    action: SetpointAction,
    cfg: &PlantConfig<F>,
) -> Result<(ZoneState<F>, F), PlantError> {
    debug_assert!(state.temp().is_finite() && dist.is_finite());

    let temp = state.temp();
    let r_eff = cfg.resistance / (F::one() + cfg.wind_coeff * dist.wind_speed);
    let passive = (dist.outdoor_temp - temp) / r_eff
        + cfg.solar_aperture * dist.solar_rad
        + cfg.occupant_gain * F::cast(dist.occupant_count as f64);
    let per_watt = cfg.dt / cfg.capacitance;

    let heat_sp = F::cast(action.heat_sp() as f64);
    let cool_sp = F::cast(action.cool_sp() as f64);

    let (next, hvac_power) = if temp < heat_sp {
        // Power that lands exactly on the heating setpoint this step.
        let needed = (heat_sp - temp) / per_watt - passive;
        if needed <= F::zero() {
            (temp + per_watt * passive, F::zero())
        } else if needed >= cfg.max_heat_power {
            (temp + per_watt * (passive + cfg.max_heat_power), cfg.max_heat_power)
        } else {
            (heat_sp, needed)
        }
    } else if temp > cool_sp {
        let needed = (cool_sp - temp) / per_watt - passive;
        if needed >= F::zero() {
            (temp + per_watt * passive, F::zero())
        } else if needed <= -cfg.max_cool_power {
            (temp + per_watt * (passive - cfg.max_cool_power), -cfg.max_cool_power)
        } else {
            (cool_sp, needed)
        }
    } else {
        (temp + per_watt * passive, F::zero())
    };

    if !(next.as_f64().is_finite())
        || next.as_f64() < TEMP_GUARD.0
        || next.as_f64() > TEMP_GUARD.1
    {
        return Err(PlantError::Diverged { temp: next.as_f64() });
    }

    Ok((ZoneState::new(next), hvac_power.abs() * cfg.dt))
}
