//! Synthetic seasonal weather with seeded noise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::schedule::OccupancySchedule;
use super::trace::{DisturbanceTrace, TracePoint};
use super::DisturbanceVector;
use crate::scalar::Scalar;

const STEP_S: i64 = 900;
const SOLAR_PEAK: f64 = 600.0;
const RH_MEAN: f64 = 55.0;
const RH_PERSISTENCE: f64 = 0.9;
const RH_SIGMA: f64 = 4.0;

/// 2021-01-01T00:00:00Z (a Friday).
pub const WINTER_START: i64 = 1609459200;
/// 2021-07-01T00:00:00Z (a Thursday).
pub const SUMMER_START: i64 = 1625097600;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Season {
    Winter,
    Summer,
}

impl Season {
    pub fn start_timestamp(&self) -> i64 {
        match self {
            Season::Winter => WINTER_START,
            Season::Summer => SUMMER_START,
        }
    }

    fn temp_profile(&self) -> (f64, f64) {
        match self {
            Season::Winter => (2.0, 5.0),
            Season::Summer => (28.0, 6.0),
        }
    }
}

impl std::str::FromStr for Season {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "winter" => Ok(Season::Winter),
            "summer" => Ok(Season::Summer),
            other => Err(format!("unknown season '{other}' (expected winter or summer)")),
        }
    }
}

/// Generates `days` of 15-minute weather with the default occupancy
/// schedule. Same seed, same trace, byte for byte.
pub fn generate_weather<F: Scalar>(days: u32, season: Season, seed: u64) -> DisturbanceTrace<F> {
    generate_weather_with(days, season, seed, &OccupancySchedule::default())
}

/// Outdoor temperature follows a diurnal sinusoid (winter mean 2 °C /
/// amplitude 5, summer mean 28 / amplitude 6, peak at 15:00) plus N(0,1)
/// noise. Solar is `max(0, 600 * sin(pi*(hour-6)/12))`. Humidity is an
/// AR(1) process clamped to [20, 90]; wind is `|N(3, 1.5)|`. Occupancy
/// comes from the schedule.
pub fn generate_weather_with<F: Scalar>(
    days: u32,
    season: Season,
    seed: u64,
    schedule: &OccupancySchedule,
) -> DisturbanceTrace<F> {
    assert!(days >= 1, "need at least one day of weather");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = season.start_timestamp();
    let (mean, amplitude) = season.temp_profile();
    let steps = days as i64 * 86_400 / STEP_S;

    let mut rh = RH_MEAN;
    let mut points = Vec::with_capacity(steps as usize);
    for k in 0..steps {
        let timestamp = start + k * STEP_S;
        let hour = (timestamp.rem_euclid(86_400)) as f64 / 3600.0;

        // Draw order per step is fixed: temperature, wind, humidity.
        let temp_noise: f64 = rng.sample(rand_distr::StandardNormal);
        let outdoor_temp =
            mean + amplitude * (std::f64::consts::TAU * (hour - 9.0) / 24.0).sin() + temp_noise;

        let wind_raw: f64 = rng.sample(rand_distr::StandardNormal);
        let wind_speed = (3.0 + 1.5 * wind_raw).abs();

        let rh_noise: f64 = rng.sample(rand_distr::StandardNormal);
        rh = (RH_MEAN + RH_PERSISTENCE * (rh - RH_MEAN) + RH_SIGMA * rh_noise).clamp(20.0, 90.0);

        let solar_rad = (SOLAR_PEAK * (std::f64::consts::PI * (hour - 6.0) / 12.0).sin()).max(0.0);

        points.push(TracePoint {
            timestamp,
            dist: DisturbanceVector {
                outdoor_temp: F::cast(outdoor_temp),
                outdoor_rh: F::cast(rh),
                wind_speed: F::cast(wind_speed),
                solar_rad: F::cast(solar_rad),
                occupant_count: schedule.occupants_at(timestamp),
            },
        });
    }

    DisturbanceTrace::new(points, STEP_S).expect("generated trace is uniformly spaced")
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn midnight_utc(y: i32, m: u32, d: u32) -> i64 {
        NaiveDate::from_ymd_opt(y, m, d)
            .unwrap()
            .and_hms_opt(0, 0, 0)
            .unwrap()
            .and_utc()
            .timestamp()
    }

    #[test]
    fn start_constants_match_calendar() {
        assert_eq!(midnight_utc(2021, 1, 1), WINTER_START);
        assert_eq!(midnight_utc(2021, 7, 1), SUMMER_START);
    }

    #[test]
    fn one_day_is_96_entries() {
        let trace = generate_weather::<f64>(1, Season::Winter, 11);
        assert_eq!(trace.len(), 96);
        assert_eq!(trace.step_s(), 900);
    }

    #[test]
    fn night_has_no_solar() {
        let trace = generate_weather::<f64>(2, Season::Summer, 5);
        // Midnight entries are indices 0 and 96.
        assert_eq!(trace.point(0).dist.solar_rad, 0.0);
        assert_eq!(trace.point(96).dist.solar_rad, 0.0);
        // Noon has solar.
        assert!(trace.point(48).dist.solar_rad > 400.0);
    }

    #[test]
    fn same_seed_identical_different_seed_not() {
        let a = generate_weather::<f64>(1, Season::Winter, 7);
        let b = generate_weather::<f64>(1, Season::Winter, 7);
        let c = generate_weather::<f64>(1, Season::Winter, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn humidity_and_wind_stay_in_range() {
        let trace = generate_weather::<f64>(7, Season::Winter, 3);
        for p in trace.points() {
            assert!(p.dist.outdoor_rh >= 20.0 && p.dist.outdoor_rh <= 90.0);
            assert!(p.dist.wind_speed >= 0.0);
        }
    }

    #[test]
    fn occupancy_follows_schedule() {
        // Winter start is a Friday: business hours occupied, night empty.
        let trace = generate_weather::<f64>(1, Season::Winter, 0);
        assert_eq!(trace.point(0).dist.occupant_count, 0);
        assert_eq!(trace.point(40).dist.occupant_count, 5); // 10:00
        assert_eq!(trace.point(76).dist.occupant_count, 0); // 19:00
    }
}
