//! Rule-based reference controller.

use super::{DisturbanceVector, ZoneState};
use crate::action::{SetpointAction, COOL_SP_RANGE, HEAT_SP_RANGE};
use crate::objective::ComfortRange;
use crate::scalar::Scalar;

/// While occupied, targets the comfort band directly: heating setpoint at
/// the rounded lower bound, cooling setpoint at the rounded upper bound
/// (ties round to even). Unoccupied, falls back to the off pair (15, 30).
///
/// The zone state is accepted for signature symmetry with the learned
/// policies; the rule ignores it.
pub fn baseline_policy<F: Scalar>(
    _state: ZoneState<F>,
    dist: &DisturbanceVector<F>,
    comfort: &ComfortRange<F>,
) -> SetpointAction {
    if !dist.occupied() {
        return SetpointAction::off();
    }
    let heat = (comfort.lower().round_even().as_f64() as i32)
        .clamp(HEAT_SP_RANGE.0, HEAT_SP_RANGE.1);
    let cool = (comfort.upper().round_even().as_f64() as i32)
        .clamp(COOL_SP_RANGE.0, COOL_SP_RANGE.1);
    let cool = cool.max(heat);
    SetpointAction::new(heat, cool).expect("clamped setpoints are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(occ: u32) -> DisturbanceVector<f64> {
        DisturbanceVector {
            outdoor_temp: 2.0,
            outdoor_rh: 50.0,
            wind_speed: 3.0,
            solar_rad: 0.0,
            occupant_count: occ,
        }
    }

    #[test]
    fn winter_occupied_targets_band() {
        let comfort = ComfortRange::new(20.0, 23.5).unwrap();
        let a = baseline_policy(ZoneState::new(18.0), &dist(5), &comfort);
        assert_eq!((a.heat_sp(), a.cool_sp()), (20, 24));
    }

    #[test]
    fn summer_occupied_targets_band() {
        let comfort = ComfortRange::new(23.0, 26.0).unwrap();
        let a = baseline_policy(ZoneState::new(25.0), &dist(5), &comfort);
        assert_eq!((a.heat_sp(), a.cool_sp()), (23, 26));
    }

    #[test]
    fn unoccupied_is_off() {
        let comfort = ComfortRange::new(20.0, 23.5).unwrap();
        let a = baseline_policy(ZoneState::new(18.0), &dist(0), &comfort);
        assert_eq!(a, SetpointAction::off());
    }
}
