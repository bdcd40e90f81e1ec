//! Weekday occupancy schedule.

use chrono::{DateTime, Datelike, Timelike, Weekday};
use serde::{Deserialize, Serialize};

/// Occupants are present on weekdays within `[start_hour, end_hour)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccupancySchedule {
    pub start_hour: u32,
    pub end_hour: u32,
    pub headcount: u32,
}

impl Default for OccupancySchedule {
    fn default() -> Self {
        Self {
            start_hour: 8,
            end_hour: 18,
            headcount: 5,
        }
    }
}

impl OccupancySchedule {
    /// Occupant count at a Unix timestamp (seconds, UTC).
    pub fn occupants_at(&self, timestamp: i64) -> u32 {
        let dt = DateTime::from_timestamp(timestamp, 0).expect("timestamp in chrono range");
        let weekday = dt.weekday();
        if weekday == Weekday::Sat || weekday == Weekday::Sun {
            return 0;
        }
        let hour = dt.hour();
        if hour >= self.start_hour && hour < self.end_hour {
            self.headcount
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::{NaiveDate, NaiveTime};

    fn ts(y: i32, m: u32, d: u32, h: u32, min: u32) -> i64 {
        NaiveDate::from_ymd_opt(y, m, d)
            .unwrap()
            .and_time(NaiveTime::from_hms_opt(h, min, 0).unwrap())
            .and_utc()
            .timestamp()
    }

    #[test]
    fn weekday_window() {
        let s = OccupancySchedule::default();
        // 2021-01-05 is a Tuesday.
        assert_eq!(s.occupants_at(ts(2021, 1, 5, 10, 0)), 5);
        assert_eq!(s.occupants_at(ts(2021, 1, 5, 19, 0)), 0);
        assert_eq!(s.occupants_at(ts(2021, 1, 5, 7, 59)), 0);
        assert_eq!(s.occupants_at(ts(2021, 1, 5, 17, 59)), 5);
        assert_eq!(s.occupants_at(ts(2021, 1, 5, 18, 0)), 0);
    }

    #[test]
    fn weekend_is_empty() {
        let s = OccupancySchedule::default();
        // 2021-01-09 is a Saturday.
        assert_eq!(s.occupants_at(ts(2021, 1, 9, 10, 0)), 0);
        assert_eq!(s.occupants_at(ts(2021, 1, 10, 10, 0)), 0);
    }
}
