//! Thermostat setpoint actions.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Inclusive heating setpoint range in °C.
pub const HEAT_SP_RANGE: (i32, i32) = (15, 23);
/// Inclusive cooling setpoint range in °C.
pub const COOL_SP_RANGE: (i32, i32) = (21, 30);

/// The pair that corresponds to the HVAC being effectively off: heating
/// floor at the minimum, cooling ceiling at the maximum.
pub const OFF_PAIR: (i32, i32) = (15, 30);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("heating setpoint {0} outside [{}, {}]", HEAT_SP_RANGE.0, HEAT_SP_RANGE.1)]
    HeatOutOfRange(i32),
    #[error("cooling setpoint {0} outside [{}, {}]", COOL_SP_RANGE.0, COOL_SP_RANGE.1)]
    CoolOutOfRange(i32),
    #[error("heating setpoint {heat} exceeds cooling setpoint {cool}")]
    Crossed { heat: i32, cool: i32 },
}

/// Integer (heating, cooling) setpoint pair defining the thermostat
/// deadband. Invariant: both in range and `heat_sp <= cool_sp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SetpointAction {
    heat_sp: i32,
    cool_sp: i32,
}

impl SetpointAction {
    pub fn new(heat_sp: i32, cool_sp: i32) -> Result<Self, ActionError> {
        if heat_sp < HEAT_SP_RANGE.0 || heat_sp > HEAT_SP_RANGE.1 {
            return Err(ActionError::HeatOutOfRange(heat_sp));
        }
        if cool_sp < COOL_SP_RANGE.0 || cool_sp > COOL_SP_RANGE.1 {
            return Err(ActionError::CoolOutOfRange(cool_sp));
        }
        if heat_sp > cool_sp {
            return Err(ActionError::Crossed {
                heat: heat_sp,
                cool: cool_sp,
            });
        }
        Ok(Self { heat_sp, cool_sp })
    }

    /// The HVAC-off pair `(15, 30)`.
    pub fn off() -> Self {
        Self {
            heat_sp: OFF_PAIR.0,
            cool_sp: OFF_PAIR.1,
        }
    }

    pub fn heat_sp(&self) -> i32 {
        self.heat_sp
    }

    pub fn cool_sp(&self) -> i32 {
        self.cool_sp
    }

    /// L1 distance from the off pair, in setpoint-degrees. This is the
    /// planning-time energy proxy and the first tie-break key wherever
    /// actions tie.
    pub fn proxy_degrees(&self) -> u32 {
        (self.heat_sp - OFF_PAIR.0).unsigned_abs() + (OFF_PAIR.1 - self.cool_sp).unsigned_abs()
    }

    /// All valid pairs in lexicographic `(heat_sp, cool_sp)` order.
    pub fn enumerate() -> Vec<Self> {
        let mut out = Vec::new();
        for heat in HEAT_SP_RANGE.0..=HEAT_SP_RANGE.1 {
            for cool in COOL_SP_RANGE.0..=COOL_SP_RANGE.1 {
                if heat <= cool {
                    out.push(Self {
                        heat_sp: heat,
                        cool_sp: cool,
                    });
                }
            }
        }
        out
    }

    /// Uniform draw over the valid pairs; crossed draws are rejected and
    /// redrawn, so the distribution is uniform on the constrained set.
    pub fn sample_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let heat = rng.gen_range(HEAT_SP_RANGE.0..=HEAT_SP_RANGE.1);
            let cool = rng.gen_range(COOL_SP_RANGE.0..=COOL_SP_RANGE.1);
            if heat <= cool {
                return Self {
                    heat_sp: heat,
                    cool_sp: cool,
                };
            }
        }
    }
}
