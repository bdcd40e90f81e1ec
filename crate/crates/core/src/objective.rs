//! Reward: a weighted sum of a setpoint-distance energy proxy and
//! one-sided comfort violations.
//!
//! The proxy is measured in setpoint-degrees and is *not* plant energy;
//! closed-loop evaluation reports plant Joules separately so the two never
//! get conflated.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::SetpointAction;
use crate::scalar::Scalar;
use crate::sim::Season;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ComfortError {
    #[error("comfort range is empty: lower {lower} >= upper {upper}")]
    Empty { lower: f64, upper: f64 },
}

/// Zone-temperature interval considered safe while the zone is occupied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComfortRange<F> {
    lower: F,
    upper: F,
}

impl<F: Scalar> ComfortRange<F> {
    pub fn new(lower: F, upper: F) -> Result<Self, ComfortError> {
        if lower >= upper {
            return Err(ComfortError::Empty {
                lower: lower.as_f64(),
                upper: upper.as_f64(),
            });
        }
        Ok(Self { lower, upper })
    }

    /// Seasonal defaults: [20, 23.5] °C in winter, [23, 26] °C in summer.
    pub fn for_season(season: Season) -> Self {
        match season {
            Season::Winter => Self { lower: F::cast(20.0), upper: F::cast(23.5) },
            Season::Summer => Self { lower: F::cast(23.0), upper: F::cast(26.0) },
        }
    }

    pub fn lower(&self) -> F {
        self.lower
    }

    pub fn upper(&self) -> F {
        self.upper
    }

    pub fn median(&self) -> F {
        (self.lower + self.upper) / F::cast(2.0)
    }

    pub fn contains(&self, temp: F) -> bool {
        temp >= self.lower && temp <= self.upper
    }

    /// One-sided violation magnitude: `max(temp - upper, 0) + max(lower - temp, 0)`.
    /// At most one term is positive.
    pub fn violation(&self, temp: F) -> F {
        (temp - self.upper).max(F::zero()) + (self.lower - temp).max(F::zero())
    }
}

/// Reward weights. The energy weight switches on occupancy: nearly all
/// weight on comfort while people are present, all weight on energy
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RewardConfig<F> {
    pub w_e_occupied: F,
    pub w_e_unoccupied: F,
    pub comfort: ComfortRange<F>,
}

impl<F: Scalar> RewardConfig<F> {
    pub fn new(w_e_occupied: F, w_e_unoccupied: F, comfort: ComfortRange<F>) -> Self {
        debug_assert!(w_e_occupied >= F::zero() && w_e_occupied <= F::one());
        debug_assert!(w_e_unoccupied >= F::zero() && w_e_unoccupied <= F::one());
        Self {
            w_e_occupied,
            w_e_unoccupied,
            comfort,
        }
    }

    pub fn for_season(season: Season) -> Self {
        Self {
            w_e_occupied: F::cast(1e-2),
            w_e_unoccupied: F::one(),
            comfort: ComfortRange::for_season(season),
        }
    }

    fn energy_weight(&self, occupied: bool) -> F {
        if occupied {
            self.w_e_occupied
        } else {
            self.w_e_unoccupied
        }
    }
}

/// L1 distance of the chosen setpoints from the HVAC-off pair (15, 30),
/// in setpoint-degrees.
pub fn energy_proxy<F: Scalar>(action: SetpointAction) -> F {
    F::cast(action.proxy_degrees() as f64)
}

/// `r = -w_e * E - (1 - w_e) * (|s - upper|+ + |lower - s|+)`, always <= 0,
/// and exactly 0 iff the proxy is zero and the temperature is in comfort.
pub fn reward<F: Scalar>(
    zone_temp: F,
    action: SetpointAction,
    occupied: bool,
    cfg: &RewardConfig<F>,
) -> F {
    let w_e = cfg.energy_weight(occupied);
    let energy = energy_proxy::<F>(action);
    let violation = cfg.comfort.violation(zone_temp);
    -(w_e * energy) - (F::one() - w_e) * violation
}
