use serde::{Deserialize, Serialize};

use crate::{Error, Result, Scalar};

/// Tolerance bundle used by every query and predicate.
///
/// `geom` is relative; `pred`, `cluster` and `sep` are absolute lengths
/// derived from `scale` (normally the diameter of the shape under test).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Tolerances<T: Scalar> {
    pub scale: T,
    pub geom: T,
    pub pred: T,
    pub cluster: T,
    pub sep: T,
}

impl<T: Scalar> Tolerances<T> {
    /// Default tolerances for a shape of diameter `diam`. A zero diameter
    /// (singleton) falls back to unit scale.
    pub fn for_scale(diam: T) -> Self {
        let scale = if diam > T::zero() && diam.is_finite() {
            diam
        } else {
            T::one()
        };
        let eps = T::epsilon();
        let geom = T::lit(1e-9).max(eps * T::lit(64.0));
        let pred = T::lit(1e-7).max(eps * T::lit(1024.0)) * scale;
        let cluster = T::lit(1e-6).max(eps * T::lit(8192.0)) * scale;
        let sep = T::lit(1e-2) * scale;
        Tolerances {
            scale,
            geom,
            pred,
            cluster,
            sep,
        }
    }

    /// Replaces the predicate slack.
    pub fn with_pred(mut self, pred: T) -> Self {
        self.pred = pred;
        self
    }

    /// Absolute width of the boundary band.
    pub fn band(&self) -> T {
        self.geom * self.scale
    }

    /// Angular slack (radians) for direction-in-cone tests.
    pub fn angle(&self) -> T {
        T::lit(1e-6).max(T::epsilon() * T::lit(1000.0))
    }

    pub fn validate(&self) -> Result<()> {
        let pos = [self.scale, self.geom, self.pred, self.cluster, self.sep]
            .iter()
            .all(|v| *v > T::zero() && v.is_finite());
        if !pos {
            return Err(Error::InvalidParameter(
                "tolerances must be strictly positive".into(),
            ));
        }
        if self.sep <= T::two() * self.cluster {
            return Err(Error::InvalidParameter(
                "separation radius must exceed twice the clustering radius".into(),
            ));
        }
        Ok(())
    }
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances::for_scale(T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_follow_diameter() {
        let t = Tolerances::<f64>::for_scale(2.0);
        assert_eq!(t.geom, 1e-9);
        assert!((t.pred - 2e-7).abs() < 1e-20);
        assert!((t.cluster - 2e-6).abs() < 1e-20);
        assert!((t.sep - 2e-2).abs() < 1e-17);
        t.validate().unwrap();
    }

    #[test]
    fn zero_diameter_uses_unit_scale() {
        let t = Tolerances::<f64>::for_scale(0.0);
        assert_eq!(t.scale, 1.0);
        t.validate().unwrap();
    }

    #[test]
    fn f32_defaults_are_valid() {
        Tolerances::<f32>::for_scale(1.0).validate().unwrap();
    }

    #[test]
    fn rejects_bad_separation() {
        let mut t = Tolerances::<f64>::for_scale(1.0);
        t.sep = t.cluster;
        assert!(t.validate().is_err());
    }
}
