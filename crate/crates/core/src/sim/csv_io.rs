//! CSV interchange for disturbance traces and simulation traces.
//!
//! Disturbance files carry the header
//! `timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad,occupant_count`;
//! simulation traces are written as
//! `timestamp,zone_temp,heat_sp,cool_sp,hvac_energy_J,occupants`.

use std::path::Path;

use thiserror::Error;

use super::trace::{DisturbanceTrace, TraceError, TracePoint};
use super::DisturbanceVector;
use crate::scalar::Scalar;

const DIST_COLUMNS: [&str; 6] = [
    "timestamp",
    "outdoor_temp",
    "outdoor_rh",
    "wind_speed",
    "solar_rad",
    "occupant_count",
];

#[derive(Debug, Error)]
pub enum TraceCsvError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing column '{0}' in header")]
    MissingColumn(&'static str),
    #[error("row {row}: bad value for '{column}': {message}")]
    Parse {
        row: usize,
        column: &'static str,
        message: String,
    },
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// What the loader had to fix up while parsing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    /// Rows whose relative humidity was clamped into [0, 100].
    pub clamped_rh: usize,
    /// Rows whose wind speed or solar radiation was clamped up to zero.
    pub clamped_nonnegative: usize,
}

/// Loads a disturbance trace, validating column presence, per-field
/// parses, and uniform timestamp spacing. Out-of-range humidity is
/// clamped and counted rather than rejected.
pub fn load_disturbance_csv<F: Scalar>(
    path: &Path,
) -> Result<(DisturbanceTrace<F>, LoadReport), TraceCsvError> {
    let mut reader = csv::Reader::from_path(path)?;
    let headers = reader.headers()?.clone();
    let mut index = [0usize; 6];
    for (i, col) in DIST_COLUMNS.iter().enumerate() {
        index[i] = headers
            .iter()
            .position(|h| h == *col)
            .ok_or(TraceCsvError::MissingColumn(col))?;
    }

    let mut report = LoadReport::default();
    let mut points = Vec::new();
    for (row_idx, record) in reader.records().enumerate() {
        let record = record?;
        let row = row_idx + 2; // 1-based, after the header line
        let field = |i: usize| record.get(index[i]).unwrap_or("").trim();

        let parse_f64 = |i: usize| -> Result<f64, TraceCsvError> {
            field(i).parse::<f64>().map_err(|e| TraceCsvError::Parse {
                row,
                column: DIST_COLUMNS[i],
                message: e.to_string(),
            })
        };

        let timestamp = field(0).parse::<i64>().map_err(|e| TraceCsvError::Parse {
            row,
            column: DIST_COLUMNS[0],
            message: e.to_string(),
        })?;
        let outdoor_temp = parse_f64(1)?;
        let mut outdoor_rh = parse_f64(2)?;
        let mut wind_speed = parse_f64(3)?;
        let mut solar_rad = parse_f64(4)?;
        let occupant_count =
            field(5).parse::<u32>().map_err(|e| TraceCsvError::Parse {
                row,
                column: DIST_COLUMNS[5],
                message: e.to_string(),
            })?;

        if !(0.0..=100.0).contains(&outdoor_rh) {
            outdoor_rh = outdoor_rh.clamp(0.0, 100.0);
            report.clamped_rh += 1;
        }
        if wind_speed < 0.0 {
            wind_speed = 0.0;
            report.clamped_nonnegative += 1;
        }
        if solar_rad < 0.0 {
            solar_rad = 0.0;
            report.clamped_nonnegative += 1;
        }

        points.push(TracePoint {
            timestamp,
            dist: DisturbanceVector {
                outdoor_temp: F::cast(outdoor_temp),
                outdoor_rh: F::cast(outdoor_rh),
                wind_speed: F::cast(wind_speed),
                solar_rad: F::cast(solar_rad),
                occupant_count,
            },
        });
    }

    let step = if points.len() >= 2 {
        points[1].timestamp - points[0].timestamp
    } else {
        900
    };
    let trace = DisturbanceTrace::new(points, step)?;
    Ok((trace, report))
}

pub fn write_disturbance_csv<F: Scalar>(
    path: &Path,
    trace: &DisturbanceTrace<F>,
) -> Result<(), TraceCsvError> {
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record(DIST_COLUMNS)?;
    for p in trace.points() {
        writer.write_record([
            p.timestamp.to_string(),
            format!("{}", p.dist.outdoor_temp),
            format!("{}", p.dist.outdoor_rh),
            format!("{}", p.dist.wind_speed),
            format!("{}", p.dist.solar_rad),
            p.dist.occupant_count.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// One simulation-trace row in the canonical column order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow<F> {
    pub timestamp: i64,
    pub zone_temp: F,
    pub heat_sp: i32,
    pub cool_sp: i32,
    pub hvac_energy_j: F,
    pub occupants: u32,
}

pub fn write_trace_csv<F: Scalar>(path: &Path, rows: &[TraceRow<F>]) -> Result<(), TraceCsvError> {
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record(["timestamp", "zone_temp", "heat_sp", "cool_sp", "hvac_energy_J", "occupants"])?;
    for r in rows {
        writer.write_record([
            r.timestamp.to_string(),
            format!("{}", r.zone_temp),
            r.heat_sp.to_string(),
            r.cool_sp.to_string(),
            format!("{}", r.hvac_energy_j),
            r.occupants.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_tmp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn loads_well_formed_file() {
        let f = write_tmp(
            "timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad,occupant_count\n\
             0,1.5,50,3,0,0\n\
             900,1.6,51,3,0,5\n",
        );
        let (trace, report) = load_disturbance_csv::<f64>(f.path()).unwrap();
        assert_eq!(trace.len(), 2);
        assert_eq!(report, LoadReport::default());
        assert_eq!(trace.point(1).dist.occupant_count, 5);
    }

    #[test]
    fn clamps_humidity_with_warning_count() {
        let f = write_tmp(
            "timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad,occupant_count\n\
             0,1.5,120,3,0,0\n\
             900,1.6,50,3,0,0\n",
        );
        let (trace, report) = load_disturbance_csv::<f64>(f.path()).unwrap();
        assert_eq!(trace.point(0).dist.outdoor_rh, 100.0);
        assert_eq!(report.clamped_rh, 1);
    }

    #[test]
    fn missing_column_is_named() {
        let f = write_tmp("timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad\n0,1,2,3,4\n");
        let err = load_disturbance_csv::<f64>(f.path()).unwrap_err();
        assert!(matches!(err, TraceCsvError::MissingColumn("occupant_count")));
    }

    #[test]
    fn parse_error_reports_row_and_column() {
        let f = write_tmp(
            "timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad,occupant_count\n\
             0,oops,50,3,0,0\n",
        );
        let err = load_disturbance_csv::<f64>(f.path()).unwrap_err();
        match err {
            TraceCsvError::Parse { row, column, .. } => {
                assert_eq!(row, 2);
                assert_eq!(column, "outdoor_temp");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_uniform_spacing_rejected() {
        let f = write_tmp(
            "timestamp,outdoor_temp,outdoor_rh,wind_speed,solar_rad,occupant_count\n\
             0,1,50,3,0,0\n\
             900,1,50,3,0,0\n\
             2000,1,50,3,0,0\n",
        );
        let err = load_disturbance_csv::<f64>(f.path()).unwrap_err();
        assert!(matches!(err, TraceCsvError::Trace(TraceError::Spacing { index: 2, .. })));
    }

    #[test]
    fn round_trip_through_writer() {
        let trace = crate::sim::generate_weather::<f64>(1, crate::sim::Season::Winter, 9);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trace.csv");
        write_disturbance_csv(&path, &trace).unwrap();
        let (reloaded, report) = load_disturbance_csv::<f64>(&path).unwrap();
        assert_eq!(report, LoadReport::default());
        assert_eq!(reloaded.len(), trace.len());
        for (a, b) in trace.points().iter().zip(reloaded.points()) {
            assert_eq!(a.timestamp, b.timestamp);
            assert_eq!(a.dist, b.dist);
        }
    }
}
