//! Timestamped disturbance sequences at a fixed step.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::DisturbanceVector;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint<F> {
    /// Unix timestamp, seconds.
    pub timestamp: i64,
    pub dist: DisturbanceVector<F>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("trace is empty")]
    Empty,
    #[error("timestamps not strictly increasing at entry {index}")]
    NotIncreasing { index: usize },
    #[error("non-uniform spacing at entry {index}: got {got} s, expected {expected} s")]
    Spacing { index: usize, got: i64, expected: i64 },
}

/// Ordered disturbance sequence with uniform spacing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisturbanceTrace<F> {
    step_s: i64,
    points: Vec<TracePoint<F>>,
}

impl<F: Scalar> DisturbanceTrace<F> {
    /// Validates ordering and uniform spacing equal to `step_s`.
    pub fn new(points: Vec<TracePoint<F>>, step_s: i64) -> Result<Self, TraceError> {
        if points.is_empty() {
            return Err(TraceError::Empty);
        }
        for i in 1..points.len() {
            let gap = points[i].timestamp - points[i - 1].timestamp;
            if gap <= 0 {
                return Err(TraceError::NotIncreasing { index: i });
            }
            if gap != step_s {
                return Err(TraceError::Spacing {
                    index: i,
                    got: gap,
                    expected: step_s,
                });
            }
        }
        Ok(Self { step_s, points })
    }

    pub fn step_s(&self) -> i64 {
        self.step_s
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: usize) -> &TracePoint<F> {
        &self.points[index]
    }

    pub fn points(&self) -> &[TracePoint<F>] {
        &self.points
    }

    /// Disturbance forecast of length `horizon` starting at `index`.
    /// Past the end of the trace the last entry is held constant.
    pub fn forecast(&self, index: usize, horizon: usize) -> Vec<DisturbanceVector<F>> {
        (0..horizon)
            .map(|k| {
                let i = (index + k).min(self.points.len() - 1);
                self.points[i].dist
            })
            .collect()
    }
}
