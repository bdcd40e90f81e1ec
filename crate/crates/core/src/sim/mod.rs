//! Ground-truth plant: a lumped-parameter RC thermal zone with an ideal
//! thermostat, synthetic weather/occupancy generation, disturbance-trace
//! ingestion, and the rule-based baseline controller.

mod baseline;
mod csv_io;
mod plant;
mod schedule;
mod trace;
mod weather;

pub use baseline::baseline_policy;
pub use csv_io::{load_disturbance_csv, write_disturbance_csv, write_trace_csv, LoadReport, TraceCsvError, TraceRow};
pub use plant::{step_plant, PlantConfig, PlantError};
pub use schedule::OccupancySchedule;
pub use trace::{DisturbanceTrace, TracePoint, TraceError};
pub use weather::{generate_weather, generate_weather_with, Season, WINTER_START, SUMMER_START};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Zone air temperature in °C: the single state variable of the plant and
/// the only output of the learned dynamics model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZoneState<F>(F);

impl<F: Scalar> ZoneState<F> {
    pub fn new(temp: F) -> Self {
        Self(temp)
    }

    pub fn temp(&self) -> F {
        self.0
    }
}

/// The five exogenous inputs the controller sees but does not influence.
///
/// Relative humidity is a nuisance variable: the plant ignores it, but the
/// learned model and the extracted tree still receive it and must cope
/// with an irrelevant feature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DisturbanceVector<F> {
    /// Outdoor drybulb temperature, °C.
    pub outdoor_temp: F,
    /// Outdoor relative humidity, % in [0, 100].
    pub outdoor_rh: F,
    /// Wind speed, m/s, non-negative.
    pub wind_speed: F,
    /// Total solar radiation, W/m², non-negative.
    pub solar_rad: F,
    /// Number of occupants in the zone.
    pub occupant_count: u32,
}

impl<F: Scalar> DisturbanceVector<F> {
    pub fn is_finite(&self) -> bool {
        self.outdoor_temp.is_finite()
            && self.outdoor_rh.is_finite()
            && self.wind_speed.is_finite()
            && self.solar_rad.is_finite()
    }

    /// Whether the zone counts as occupied for reward weighting and for
    /// the comfort criteria.
    pub fn occupied(&self) -> bool {
        self.occupant_count > 0
    }
}
