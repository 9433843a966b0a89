//! Closed subsets of the circle of directions, as unions of angular
//! intervals.

use super::Point2;
use crate::Scalar;

/// Union of closed angular intervals `[lo, hi] ⊂ [0, 2π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularSet<T: Scalar> {
    intervals: Vec<(T, T)>,
}

impl<T: Scalar> AngularSet<T> {
    pub fn empty() -> Self {
        AngularSet {
            intervals: Vec::new(),
        }
    }

    pub fn full() -> Self {
        AngularSet {
            intervals: vec![(T::zero(), T::TAU())],
        }
    }

    /// The closed arc of directions from `start` sweeping CCW by `width`.
    pub fn arc(start: T, width: T) -> Self {
        let tau = T::TAU();
        if width >= tau {
            return Self::full();
        }
        if width < T::zero() {
            return Self::empty();
        }
        let s = T::wrap_angle(start);
        let e = s + width;
        if e <= tau {
            AngularSet {
                intervals: vec![(s, e)],
            }
        } else {
            AngularSet {
                intervals: vec![(s, tau), (T::zero(), e - tau)],
            }
        }
    }

    /// Union of closed intervals already inside `[0, 2π]`.
    pub fn from_intervals(mut intervals: Vec<(T, T)>) -> Self {
        intervals.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal));
        AngularSet { intervals }
    }

    pub fn point(theta: T) -> Self {
        Self::arc(theta, T::zero())
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    /// Intersection, treating endpoints within `eps` as touching.
    pub fn intersect(&self, other: &AngularSet<T>, eps: T) -> AngularSet<T> {
        let tau = T::TAU();
        let mut out: Vec<(T, T)> = Vec::new();
        for &(a0, a1) in &self.intervals {
            for &(b0, b1) in &other.intervals {
                for k in [-T::one(), T::zero(), T::one()] {
                    let (c0, c1) = (b0 + k * tau, b1 + k * tau);
                    let lo = a0.max(c0);
                    let hi = a1.min(c1);
                    if lo <= hi + eps {
                        let lo = lo.max(T::zero()).min(tau);
                        let hi = hi.max(lo).min(tau);
                        if !out
                            .iter()
                            .any(|&(x0, x1)| (x0 - lo).abs() <= eps && (x1 - hi).abs() <= eps)
                        {
                            out.push((lo, hi));
                        }
                    }
                }
            }
        }
        out.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal));
        AngularSet { intervals: out }
    }

    pub fn contains(&self, theta: T, eps: T) -> bool {
        let tau = T::TAU();
        let t = T::wrap_angle(theta);
        self.intervals.iter().any(|&(lo, hi)| {
            [t - tau, t, t + tau]
                .iter()
                .any(|&u| u >= lo - eps && u <= hi + eps)
        })
    }

    /// Midpoint direction of every interval, plus the endpoints of wide ones.
    pub fn representatives(&self) -> Vec<Point2<T>> {
        let mut v = Vec::new();
        for &(lo, hi) in &self.intervals {
            v.push(Point2::from_angle((lo + hi) * T::half()));
            if hi - lo > T::lit(1e-6) {
                v.push(Point2::from_angle(lo));
                v.push(Point2::from_angle(hi));
            }
        }
        v
    }

    pub fn midpoint(&self) -> Option<Point2<T>> {
        self.intervals
            .first()
            .map(|&(lo, hi)| Point2::from_angle((lo + hi) * T::half()))
    }
}

/// Closed set of unit directions `ζ` with `⟨ζ, w⟩ ≤ bound`.
pub fn halfplane_directions<T: Scalar>(w: Point2<T>, bound: T) -> AngularSet<T> {
    let m = w.norm();
    if m <= T::zero() {
        return if bound >= T::zero() {
            AngularSet::full()
        } else {
            AngularSet::empty()
        };
    }
    let c = bound / m;
    if c >= T::one() {
        return AngularSet::full();
    }
    if c < -T::one() {
        return AngularSet::empty();
    }
    // cos(θ − φ) ≤ c  ⇔  θ − φ ∈ [acos c, 2π − acos c]
    let phi = w.angle();
    let alpha = c.acos();
    AngularSet::arc(phi + alpha, T::TAU() - T::two() * alpha)
}

/// Angular distance from direction angle `theta` to the CCW interval
/// `[lo, lo + width]`.
pub fn angular_distance_to_arc<T: Scalar>(theta: T, lo: T, width: T) -> T {
    let off = T::wrap_angle(theta - lo);
    if off <= width {
        T::zero()
    } else {
        let past_end = off - width;
        let before_start = T::TAU() - off;
        past_end.min(before_start)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn wraparound_arc() {
        let s = AngularSet::<f64>::arc(1.5 * PI, PI);
        assert_eq!(s.intervals().len(), 2);
        assert!(s.contains(0.0, 1e-12));
        assert!(s.contains(1.9 * PI, 1e-12));
        assert!(!s.contains(PI, 1e-12));
    }

    #[test]
    fn intersections() {
        let a = AngularSet::<f64>::arc(0.0, PI);
        let b = AngularSet::<f64>::arc(FRAC_PI_2, PI);
        let c = a.intersect(&b, 1e-12);
        assert_eq!(c.intervals().len(), 1);
        let (lo, hi) = c.intervals()[0];
        assert!((lo - FRAC_PI_2).abs() < 1e-12 && (hi - PI).abs() < 1e-12);
        let d = AngularSet::<f64>::arc(PI + 0.1, 0.5);
        assert!(a.intersect(&d, 1e-12).is_empty());
    }

    #[test]
    fn point_at_zero_meets_wrapped_interval() {
        let p = AngularSet::<f64>::point(TAU - 1e-15);
        let a = AngularSet::<f64>::arc(-0.1, 0.2);
        assert!(!p.intersect(&a, 1e-12).is_empty());
    }

    #[test]
    fn halfplane() {
        // ⟨ζ, (1,0)⟩ ≤ 0 keeps the left half circle
        let s = halfplane_directions(Point2::new(1.0, 0.0), 0.0);
        assert!(s.contains(PI, 1e-12));
        assert!(s.contains(FRAC_PI_2, 1e-12));
        assert!(!s.contains(0.0, 1e-9));
        let none = halfplane_directions(Point2::new(1.0, 0.0), -2.0);
        assert!(none.is_empty());
        let all = halfplane_directions(Point2::new(1.0, 0.0), 2.0);
        assert!(all.contains(0.0, 0.0));
    }

    #[test]
    fn distance_to_arc() {
        assert_eq!(angular_distance_to_arc(0.5f64, 0.0, 1.0), 0.0);
        assert!((angular_distance_to_arc(1.5f64, 0.0, 1.0) - 0.5).abs() < 1e-12);
        assert!((angular_distance_to_arc(TAU - 0.25f64, 0.0, 1.0) - 0.25).abs() < 1e-12);
    }
}
