use serde::{Deserialize, Serialize};

use super::Point2;
use crate::{Error, Result, Scalar};

/// Closed disk `B̄(center; radius)` or its boundary circle, depending on use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Circle<T: Scalar> {
    pub center: Point2<T>,
    pub radius: T,
}

impl<T: Scalar> Circle<T> {
    pub fn new(center: Point2<T>, radius: T) -> Self {
        Circle { center, radius }
    }

    pub fn contains(&self, p: Point2<T>, slack: T) -> bool {
        p.distance(self.center) <= self.radius + slack
    }

    pub fn point_at(&self, theta: T) -> Point2<T> {
        self.center + Point2::from_angle(theta) * self.radius
    }
}

/// Side of a directed chord `p → q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Minor circular arc traversed counter-clockwise around `center`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ArcEdge<T: Scalar> {
    pub start: Point2<T>,
    pub end: Point2<T>,
    pub center: Point2<T>,
    pub radius: T,
}

impl<T: Scalar> ArcEdge<T> {
    pub fn start_angle(&self) -> T {
        (self.start - self.center).angle()
    }

    /// Central angle swept CCW from `start` to `end`, in `[0, π]` for the
    /// minor arcs built by this crate. A wrap-around produced by rounding on
    /// a vanishing arc is reported as zero.
    pub fn sweep(&self) -> T {
        let s = T::wrap_angle((self.end - self.center).angle() - self.start_angle());
        if s > T::lit(1.5) * T::PI() {
            T::zero()
        } else {
            s
        }
    }

    pub fn length(&self) -> T {
        self.radius * self.sweep()
    }

    pub fn point_at(&self, frac: T) -> Point2<T> {
        let theta = self.start_angle() + self.sweep() * frac;
        self.center + Point2::from_angle(theta) * self.radius
    }

    pub fn midpoint(&self) -> Point2<T> {
        self.point_at(T::half())
    }

    /// Outward normal of the intersection-of-disks boundary at `p`.
    pub fn normal_at(&self, p: Point2<T>) -> Point2<T> {
        (p - self.center)
            .normalized()
            .unwrap_or_else(|| Point2::new(T::one(), T::zero()))
    }

    /// True when the ray from the center along `dir` meets the arc.
    pub fn spans_direction(&self, dir: Point2<T>, ang_tol: T) -> bool {
        let off = T::wrap_angle(dir.angle() - self.start_angle());
        let sweep = self.sweep();
        off <= sweep + ang_tol || off >= T::TAU() - ang_tol
    }

    /// Point of the arc closest to `x`: the radial projection of `x` when it
    /// falls inside the angular span, otherwise the nearer endpoint.
    pub fn closest_point(&self, x: Point2<T>, ang_tol: T) -> Point2<T> {
        if let Some(d) = (x - self.center).normalized() {
            if self.spans_direction(d, ang_tol) {
                return self.center + d * self.radius;
            }
        }
        if x.distance_sq(self.start) <= x.distance_sq(self.end) {
            self.start
        } else {
            self.end
        }
    }

    /// Point of the arc farthest from `x` among the radial antipode (when in
    /// span) and the endpoints. Undefined if `x` coincides with the center,
    /// where every arc point is equidistant.
    pub fn farthest_point(&self, x: Point2<T>, ang_tol: T) -> Point2<T> {
        let far_end = if x.distance_sq(self.start) >= x.distance_sq(self.end) {
            self.start
        } else {
            self.end
        };
        if let Some(d) = (self.center - x).normalized() {
            if self.spans_direction(d, ang_tol) {
                let p = self.center + d * self.radius;
                if x.distance_sq(p) >= x.distance_sq(far_end) {
                    return p;
                }
            }
        }
        far_end
    }

    /// Supporting circle of the arc.
    pub fn circle(&self) -> Circle<T> {
        Circle::new(self.center, self.radius)
    }
}

/// Minor arc of the radius-`r` circle through `p` and `q` whose center lies
/// on `side` of the directed chord `p → q`.
///
/// With `Side::Left` the arc runs CCW from `p` to `q` and bulges to the right
/// of the chord. With `Side::Right` the CCW minor arc runs from `q` to `p`.
pub fn arc_through<T: Scalar>(
    p: Point2<T>,
    q: Point2<T>,
    r: T,
    side: Side,
    geom_tol: T,
) -> Result<ArcEdge<T>> {
    if r <= T::zero() || !r.is_finite() {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let chord = q - p;
    let len = chord.norm();
    if len <= geom_tol * r {
        return Err(Error::DegenerateChord);
    }
    let diameter = T::two() * r;
    if len > diameter * (T::one() + geom_tol) {
        return Err(Error::ChordTooLong {
            chord: len.to_f64_lossy(),
            diameter: diameter.to_f64_lossy(),
        });
    }
    let half = len * T::half();
    let h = (r * r - half * half).max(T::zero()).sqrt();
    let left = chord.perp() * (T::one() / len);
    let mid = p.midpoint(q);
    Ok(match side {
        Side::Left => ArcEdge {
            start: p,
            end: q,
            center: mid + left * h,
            radius: r,
        },
        Side::Right => ArcEdge {
            start: q,
            end: p,
            center: mid - left * h,
            radius: r,
        },
    })
}

/// Intersection points of two circles, ordered so that the first lies to the
/// right of the directed center line `c1 → c2`.
pub fn circle_intersections<T: Scalar>(
    c1: Point2<T>,
    r1: T,
    c2: Point2<T>,
    r2: T,
) -> Vec<Point2<T>> {
    let d = c2 - c1;
    let dist = d.norm();
    if dist <= T::zero() || dist > r1 + r2 || dist < (r1 - r2).abs() {
        return Vec::new();
    }
    let a = (r1 * r1 - r2 * r2 + dist * dist) / (T::two() * dist);
    let h = (r1 * r1 - a * a).max(T::zero()).sqrt();
    let u = d * (T::one() / dist);
    let base = c1 + u * a;
    let off = u.perp() * h;
    if h <= T::zero() {
        vec![base]
    } else {
        vec![base - off, base + off]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn diametral_chord_left() {
        let arc = arc_through(p(-1.0, 0.0), p(1.0, 0.0), 1.0, Side::Left, 1e-9).unwrap();
        assert!(arc.center.distance(p(0.0, 0.0)) < 1e-12);
        // CCW from angle π to 2π passes through (0, -1).
        let m = arc.midpoint();
        assert!(m.distance(p(0.0, -1.0)) < 1e-12);
        assert!((m.distance(arc.center) - 1.0).abs() < 1e-12);
        assert!((arc.sweep() - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn unit_chord_left_center() {
        let arc = arc_through(p(0.0, 0.0), p(1.0, 0.0), 1.0, Side::Left, 1e-9).unwrap();
        // ‖c - p‖ = ‖c - q‖ = 1 with c above the chord.
        let c = arc.center;
        assert!(c.distance(p(0.5, 3f64.sqrt() / 2.0)) < 1e-12);
        assert!((c.distance(p(0.0, 0.0)) - 1.0).abs() < 1e-12);
        assert!((c.distance(p(1.0, 0.0)) - 1.0).abs() < 1e-12);
        assert!((arc.sweep() - std::f64::consts::PI / 3.0).abs() < 1e-12);
        assert!(arc.midpoint().y < 0.0);
    }

    #[test]
    fn right_side_reverses_endpoints() {
        let arc = arc_through(p(0.0, 0.0), p(1.0, 0.0), 1.0, Side::Right, 1e-9).unwrap();
        assert_eq!(arc.start, p(1.0, 0.0));
        assert_eq!(arc.end, p(0.0, 0.0));
        assert!(arc.center.y < 0.0);
        assert!(arc.midpoint().y > 0.0);
    }

    #[test]
    fn chord_too_long() {
        let e = arc_through(p(0.0, 0.0), p(3.0, 0.0), 1.0, Side::Left, 1e-9).unwrap_err();
        assert!(matches!(e, Error::ChordTooLong { .. }));
    }

    #[test]
    fn degenerate_chord() {
        let e = arc_through(p(0.0, 0.0), p(0.0, 0.0), 1.0, Side::Left, 1e-9).unwrap_err();
        assert_eq!(e, Error::DegenerateChord);
    }

    #[test]
    fn slightly_long_chord_is_clamped() {
        let arc = arc_through(p(0.0, 0.0), p(2.0 + 1e-10, 0.0), 1.0, Side::Left, 1e-9).unwrap();
        assert!(arc.center.distance(p(1.0 + 5e-11, 0.0)) < 1e-9);
    }

    #[test]
    fn closest_and_farthest_on_arc() {
        let arc = arc_through(p(-1.0, 0.0), p(1.0, 0.0), 1.0, Side::Left, 1e-9).unwrap();
        let c = arc.closest_point(p(0.0, -3.0), 1e-12);
        assert!(c.distance(p(0.0, -1.0)) < 1e-12);
        // antipodal direction (0,-1) is in span when x is above the center.
        let f = arc.farthest_point(p(0.0, 0.5), 1e-12);
        assert!(f.distance(p(0.0, -1.0)) < 1e-12);
        // x below: antipode (0, 1) is not on the lower arc; endpoints win.
        let f = arc.farthest_point(p(0.3, -2.0), 1e-12);
        assert_eq!(f, p(-1.0, 0.0));
    }

    #[test]
    fn circle_circle() {
        let pts = circle_intersections(p(-0.5, 0.0), 1.0, p(0.5, 0.0), 1.0);
        assert_eq!(pts.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        assert!(pts[0].distance(p(0.0, -h)) < 1e-12);
        assert!(pts[1].distance(p(0.0, h)) < 1e-12);
        assert!(circle_intersections(p(0.0, 0.0), 1.0, p(3.0, 0.0), 1.0).is_empty());
    }
}
