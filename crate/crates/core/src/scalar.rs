//! Scalar abstraction for the numeric core.
//!
//! Everything numerical (plant physics, reward, network training, tree
//! geometry, verification statistics) is generic over [`Scalar`], so the
//! same code runs at `f32` or `f64`. The CLI and the on-disk formats use
//! `f64`; see the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use ndarray::ScalarOperand;
use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{de::DeserializeOwned, Serialize};

/// Floating-point scalar usable throughout the crate.
///
/// Bundles the `num-traits` surface the math needs with the sampling and
/// rounding hooks that are not expressible as generic bounds.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Sum<Self>
    + ScalarOperand
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lossy cast from `f64` (for literals and config values).
    fn cast(v: f64) -> Self;

    /// Lossy cast to `f64` (for reporting and CSV output).
    fn as_f64(self) -> f64;

    /// One standard-normal draw.
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One uniform draw from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Round half-to-even. All setpoint rounding in the crate uses this
    /// convention so that e.g. 23.5 -> 24 and 24.5 -> 24.
    fn round_even(self) -> Self;
}

impl Scalar for f32 {
    fn cast(v: f64) -> Self {
        v as f32
    }

    fn as_f64(self) -> f64 {
        self as f64
    }

    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f32>()
    }

    fn round_even(self) -> Self {
        self.round_ties_even()
    }
}

impl Scalar for f64 {
    fn cast(v: f64) -> Self {
        v
    }

    fn as_f64(self) -> f64 {
        self
    }

    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f64>()
    }

    fn round_even(self) -> Self {
        self.round_ties_even()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_even_ties() {
        assert_eq!(23.5f64.round_even(), 24.0);
        assert_eq!(24.5f64.round_even(), 24.0);
        assert_eq!(21.75f64.round_even(), 22.0);
        assert_eq!((-0.5f32).round_even(), 0.0);
    }

    #[test]
    fn casts_round_trip() {
        assert_eq!(<f64 as Scalar>::cast(1.25).as_f64(), 1.25);
        assert_eq!(<f32 as Scalar>::cast(1.25).as_f64(), 1.25);
    }
}
