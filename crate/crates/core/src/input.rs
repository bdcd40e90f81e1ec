//! The 6-dimensional policy input: zone temperature plus the five
//! disturbance variables, in a fixed feature order shared by the dynamics
//! model, the decision dataset, and the tree format.

use crate::scalar::Scalar;
use crate::sim::{DisturbanceVector, ZoneState};

pub const FEATURE_COUNT: usize = 6;

pub const ZONE_TEMP: usize = 0;
pub const OUTDOOR_TEMP: usize = 1;
pub const OUTDOOR_RH: usize = 2;
pub const WIND_SPEED: usize = 3;
pub const SOLAR_RAD: usize = 4;
pub const OCCUPANT_COUNT: usize = 5;

pub const FEATURE_NAMES: [&str; FEATURE_COUNT] = [
    "zone_temp",
    "outdoor_temp",
    "outdoor_rh",
    "wind_speed",
    "solar_rad",
    "occupant_count",
];

/// One policy input in feature order.
pub type InputVec<F> = [F; FEATURE_COUNT];

pub fn input_vec<F: Scalar>(state: ZoneState<F>, dist: &DisturbanceVector<F>) -> InputVec<F> {
    [
        state.temp(),
        dist.outdoor_temp,
        dist.outdoor_rh,
        dist.wind_speed,
        dist.solar_rad,
        F::cast(dist.occupant_count as f64),
    ]
}

/// Splits an input vector back into its state and disturbance parts.
/// The occupant coordinate is rounded to the nearest non-negative integer.
pub fn split_input<F: Scalar>(x: &InputVec<F>) -> (ZoneState<F>, DisturbanceVector<F>) {
    let occupants = x[OCCUPANT_COUNT].round_even().as_f64().max(0.0) as u32;
    (
        ZoneState::new(x[ZONE_TEMP]),
        DisturbanceVector {
            outdoor_temp: x[OUTDOOR_TEMP],
            outdoor_rh: x[OUTDOOR_RH],
            wind_speed: x[WIND_SPEED],
            solar_rad: x[SOLAR_RAD],
            occupant_count: occupants,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_state_and_disturbance() {
        let s = ZoneState::new(21.5f64);
        let d = DisturbanceVector {
            outdoor_temp: 3.0,
            outdoor_rh: 55.0,
            wind_speed: 2.0,
            solar_rad: 100.0,
            occupant_count: 5,
        };
        let x = input_vec(s, &d);
        let (s2, d2) = split_input(&x);
        assert_eq!(s2.temp(), 21.5);
        assert_eq!(d2, d);
    }
}
