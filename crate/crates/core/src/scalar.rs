//! Floating point abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use serde::{de::DeserializeOwned, Serialize};

/// Real scalar used for coordinates and lengths: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Converts an `f64` literal into this scalar type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    /// Angle in `[0, 2π)` equivalent to `a`.
    fn wrap_angle(a: Self) -> Self {
        let tau = Self::TAU();
        let w = a % tau;
        let w = if w < Self::zero() { w + tau } else { w };
        if w >= tau {
            Self::zero()
        } else {
            w
        }
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
