//! End-to-end pipeline for interpretable HVAC control: simulate a thermal
//! zone, learn its dynamics, plan with random-shooting MPC, distill the
//! planner into a CART decision tree, verify the tree offline against
//! comfort-safety criteria, and evaluate everything in closed loop.
//!
//! The numeric core is generic over the scalar type (see [`scalar::Scalar`]);
//! the aliases below fix the `f64` instantiations used by the CLI and the
//! on-disk formats.

pub mod action;
pub mod input;
pub mod objective;
pub mod scalar;
pub mod sim;

pub use action::SetpointAction;
pub use scalar::Scalar;

/// Precision used by the CLI and all file formats.
pub type DefaultScalar = f64;

pub type PlantConfigF64 = sim::PlantConfig<f64>;
pub type DisturbanceTraceF64 = sim::DisturbanceTrace<f64>;
pub type ComfortRangeF64 = objective::ComfortRange<f64>;
pub type RewardConfigF64 = objective::RewardConfig<f64>;
