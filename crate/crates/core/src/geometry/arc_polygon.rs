use serde::{Deserialize, Serialize};

use super::{bounding_box, closest_on_segment, ArcEdge, Circle, Point2, Tolerances};
use crate::{Error, Result, Scalar};

/// Ternary point classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    Inside,
    Boundary,
    Outside,
}

impl PointClass {
    /// Inside or on the boundary.
    pub fn is_member(self) -> bool {
        self != PointClass::Outside
    }
}

/// One piece of a closed boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "", tag = "kind", rename_all = "lowercase")]
pub enum BoundaryEdge<T: Scalar> {
    Segment { start: Point2<T>, end: Point2<T> },
    Arc(ArcEdge<T>),
}

impl<T: Scalar> BoundaryEdge<T> {
    pub fn start(&self) -> Point2<T> {
        match self {
            BoundaryEdge::Segment { start, .. } => *start,
            BoundaryEdge::Arc(a) => a.start,
        }
    }

    pub fn end(&self) -> Point2<T> {
        match self {
            BoundaryEdge::Segment { end, .. } => *end,
            BoundaryEdge::Arc(a) => a.end,
        }
    }

    pub fn length(&self) -> T {
        match self {
            BoundaryEdge::Segment { start, end } => start.distance(*end),
            BoundaryEdge::Arc(a) => a.length(),
        }
    }

    /// Point at arclength fraction `frac ∈ [0, 1]`.
    pub fn point_at(&self, frac: T) -> Point2<T> {
        match self {
            BoundaryEdge::Segment { start, end } => start.lerp(*end, frac),
            BoundaryEdge::Arc(a) => a.point_at(frac),
        }
    }

    /// Outward unit normal at a point of the edge.
    pub fn normal_at(&self, p: Point2<T>) -> Point2<T> {
        match self {
            BoundaryEdge::Segment { start, end } => {
                let d = *end - *start;
                Point2::new(d.y, -d.x)
                    .normalized()
                    .unwrap_or_else(|| Point2::new(T::one(), T::zero()))
            }
            BoundaryEdge::Arc(a) => a.normal_at(p),
        }
    }

    /// Signed slack of `x` against the edge's supporting set: positive on the
    /// interior side (left half-plane or supporting disk).
    pub fn slack(&self, x: Point2<T>) -> T {
        match self {
            BoundaryEdge::Segment { start, end } => {
                let d = *end - *start;
                d.cross(x - *start) / d.norm()
            }
            BoundaryEdge::Arc(a) => a.radius - x.distance(a.center),
        }
    }

    pub fn closest_point(&self, x: Point2<T>, ang_tol: T) -> Point2<T> {
        match self {
            BoundaryEdge::Segment { start, end } => closest_on_segment(x, *start, *end),
            BoundaryEdge::Arc(a) => a.closest_point(x, ang_tol),
        }
    }

    pub fn distance_to(&self, x: Point2<T>, ang_tol: T) -> T {
        x.distance(self.closest_point(x, ang_tol))
    }

    fn scaled(&self, s: T) -> Self {
        match self {
            BoundaryEdge::Segment { start, end } => BoundaryEdge::Segment {
                start: *start * s,
                end: *end * s,
            },
            BoundaryEdge::Arc(a) => BoundaryEdge::Arc(ArcEdge {
                start: a.start * s,
                end: a.end * s,
                center: a.center * s,
                radius: a.radius * s,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "", rename_all = "snake_case")]
enum Boundary<T: Scalar> {
    FullCircle(Circle<T>),
    Edges(Vec<BoundaryEdge<T>>),
}

/// Closed convex region bounded CCW by segments and minor arcs bulging
/// outward, or by one full circle. Arcs of an intersection of disks have the
/// region on their center side, so the outward normal at an arc point `p` is
/// `(p - center) / radius`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ArcPolygon<T: Scalar> {
    boundary: Boundary<T>,
}

impl<T: Scalar> ArcPolygon<T> {
    /// The closed disk bounded by `circle`.
    pub fn disk(circle: Circle<T>) -> Result<Self> {
        if !(circle.radius > T::zero()) || !circle.center.is_finite() {
            return Err(Error::InvalidPolygon("disk radius must be positive".into()));
        }
        Ok(ArcPolygon {
            boundary: Boundary::FullCircle(circle),
        })
    }

    /// Validates closure, CCW minor arcs and convexity (every vertex lies in
    /// every edge's supporting set).
    pub fn from_edges(edges: Vec<BoundaryEdge<T>>) -> Result<Self> {
        let invalid = |m: &str| Err(Error::InvalidPolygon(m.to_string()));
        if edges.len() < 2 {
            return invalid("need at least two edges");
        }
        let pts: Vec<Point2<T>> = edges.iter().flat_map(|e| [e.start(), e.end()]).collect();
        if pts.iter().any(|p| !p.is_finite()) {
            return invalid("non-finite coordinate");
        }
        let (lo, hi) = bounding_box(&pts).unwrap();
        let scale = (hi - lo).norm();
        if !(scale > T::zero()) {
            return invalid("zero extent");
        }
        let geom = Tolerances::<T>::for_scale(scale).geom;
        let band = geom * scale * T::lit(16.0);
        let n = edges.len();
        let mut has_arc = false;
        for (i, e) in edges.iter().enumerate() {
            let next = &edges[(i + 1) % n];
            if e.end().distance(next.start()) > band {
                return invalid("boundary is not closed");
            }
            if e.start().distance(e.end()) <= band {
                return invalid("degenerate edge");
            }
            if let BoundaryEdge::Arc(a) = e {
                has_arc = true;
                if !(a.radius > T::zero()) {
                    return invalid("arc radius must be positive");
                }
                let tol = geom * a.radius * T::lit(16.0);
                if (a.start.distance(a.center) - a.radius).abs() > tol
                    || (a.end.distance(a.center) - a.radius).abs() > tol
                {
                    return invalid("arc endpoint off its circle");
                }
                if a.sweep() > T::PI() + geom * T::lit(16.0) {
                    return invalid("arc is not a minor CCW arc");
                }
            }
        }
        if !has_arc && n < 3 {
            return invalid("polygon needs three edges");
        }
        for e in &edges {
            for p in &pts {
                if e.slack(*p) < -band {
                    return invalid("boundary is not convex or not CCW");
                }
            }
        }
        let poly = ArcPolygon {
            boundary: Boundary::Edges(edges),
        };
        if !(poly.area() > T::zero()) {
            return invalid("non-positive area");
        }
        Ok(poly)
    }

    pub fn full_circle(&self) -> Option<Circle<T>> {
        match &self.boundary {
            Boundary::FullCircle(c) => Some(*c),
            Boundary::Edges(_) => None,
        }
    }

    /// Boundary edges; empty for a full disk.
    pub fn edges(&self) -> &[BoundaryEdge<T>] {
        match &self.boundary {
            Boundary::FullCircle(_) => &[],
            Boundary::Edges(e) => e,
        }
    }

    /// Corner points (edge starts); empty for a full disk.
    pub fn vertices(&self) -> Vec<Point2<T>> {
        self.edges().iter().map(|e| e.start()).collect()
    }

    pub fn area(&self) -> T {
        match &self.boundary {
            Boundary::FullCircle(c) => T::PI() * c.radius * c.radius,
            Boundary::Edges(edges) => {
                let mut a = T::zero();
                for e in edges {
                    a = a + e.start().cross(e.end()) * T::half();
                    if let BoundaryEdge::Arc(arc) = e {
                        let th = arc.sweep();
                        a = a + arc.radius * arc.radius * T::half() * (th - th.sin());
                    }
                }
                a
            }
        }
    }

    pub fn perimeter(&self) -> T {
        match &self.boundary {
            Boundary::FullCircle(c) => T::TAU() * c.radius,
            Boundary::Edges(edges) => edges.iter().fold(T::zero(), |s, e| s + e.length()),
        }
    }

    /// Exact diameter: farthest pairs are vertex/edge pairs or radial
    /// antipodes on two arcs.
    pub fn diameter(&self) -> T {
        match &self.boundary {
            Boundary::FullCircle(c) => T::two() * c.radius,
            Boundary::Edges(edges) => {
                let ang = T::lit(1e-12);
                let mut best = T::zero();
                for v in edges.iter().map(|e| e.start()) {
                    best = best.max(self.farthest_point(v).1);
                }
                let arcs: Vec<&ArcEdge<T>> = edges
                    .iter()
                    .filter_map(|e| match e {
                        BoundaryEdge::Arc(a) => Some(a),
                        _ => None,
                    })
                    .collect();
                for (i, a) in arcs.iter().enumerate() {
                    for b in arcs.iter().skip(i + 1) {
                        if let Some(u) = (a.center - b.center).normalized() {
                            if a.spans_direction(u, ang) && b.spans_direction(-u, ang) {
                                let p = a.center + u * a.radius;
                                let q = b.center - u * b.radius;
                                best = best.max(p.distance(q));
                            }
                        }
                    }
                }
                best
            }
        }
    }

    /// Farthest boundary point from `x` and its distance. For `x` at an arc
    /// center the returned point is one of many equidistant ones.
    pub fn farthest_point(&self, x: Point2<T>) -> (Point2<T>, T) {
        match &self.boundary {
            Boundary::FullCircle(c) => {
                let d = (c.center - x)
                    .normalized()
                    .unwrap_or_else(|| Point2::new(T::one(), T::zero()));
                let p = c.center + d * c.radius;
                (p, x.distance(p))
            }
            Boundary::Edges(edges) => {
                let ang = T::lit(1e-12);
                let mut best = (edges[0].start(), x.distance(edges[0].start()));
                for e in edges {
                    let cand = match e {
                        BoundaryEdge::Segment { start, end } => {
                            if x.distance_sq(*start) >= x.distance_sq(*end) {
                                *start
                            } else {
                                *end
                            }
                        }
                        BoundaryEdge::Arc(a) => a.farthest_point(x, ang),
                    };
                    let d = x.distance(cand);
                    if d > best.1 {
                        best = (cand, d);
                    }
                }
                best
            }
        }
    }

    /// Minimum over edges of the signed slack; positive inside.
    pub fn slack(&self, x: Point2<T>) -> T {
        match &self.boundary {
            Boundary::FullCircle(c) => c.radius - x.distance(c.center),
            Boundary::Edges(edges) => edges.iter().fold(T::infinity(), |m, e| m.min(e.slack(x))),
        }
    }

    pub fn scaled(&self, s: T) -> Self {
        match &self.boundary {
            Boundary::FullCircle(c) => ArcPolygon {
                boundary: Boundary::FullCircle(Circle::new(c.center * s, c.radius * s)),
            },
            Boundary::Edges(edges) => ArcPolygon {
                boundary: Boundary::Edges(edges.iter().map(|e| e.scaled(s)).collect()),
            },
        }
    }
}

/// Classifies `x` against `poly` with a boundary band of width
/// `tol.geom · diam(poly)`.
pub fn classify_point<T: Scalar>(
    x: Point2<T>,
    poly: &ArcPolygon<T>,
    tol: &Tolerances<T>,
) -> PointClass {
    let band = tol.geom * poly.diameter();
    let s = poly.slack(x);
    if s > band {
        PointClass::Inside
    } else if s >= -band {
        PointClass::Boundary
    } else {
        PointClass::Outside
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{arc_through, Side};

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    pub(crate) fn lens() -> ArcPolygon<f64> {
        let a = p(-0.5, 0.0);
        let b = p(0.5, 0.0);
        let lower = arc_through(a, b, 1.0, Side::Left, 1e-9).unwrap();
        let upper = arc_through(b, a, 1.0, Side::Left, 1e-9).unwrap();
        ArcPolygon::from_edges(vec![BoundaryEdge::Arc(lower), BoundaryEdge::Arc(upper)]).unwrap()
    }

    fn square() -> ArcPolygon<f64> {
        let v = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        let edges = (0..4)
            .map(|i| BoundaryEdge::Segment {
                start: v[i],
                end: v[(i + 1) % 4],
            })
            .collect();
        ArcPolygon::from_edges(edges).unwrap()
    }

    #[test]
    fn disk_classification() {
        let d = ArcPolygon::disk(Circle::new(p(0.0, 0.0), 1.0)).unwrap();
        let t = Tolerances::for_scale(2.0);
        assert_eq!(classify_point(p(0.0, 0.0), &d, &t), PointClass::Inside);
        assert_eq!(classify_point(p(1.0, 0.0), &d, &t), PointClass::Boundary);
        assert_eq!(classify_point(p(4.0, 4.0), &d, &t), PointClass::Outside);
    }

    #[test]
    fn lens_classification() {
        let l = lens();
        let t = Tolerances::for_scale(1.0);
        let on_arc = l.edges()[0].point_at(0.3);
        assert_eq!(classify_point(on_arc, &l, &t), PointClass::Boundary);
        assert_eq!(classify_point(p(0.0, 0.0), &l, &t), PointClass::Inside);
        assert_eq!(classify_point(p(0.0, 2.5), &l, &t), PointClass::Outside);
        assert!((l.diameter() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lens_area_matches_formula() {
        // arcs centered at (0, ±√3/2): two unit disks at center distance d = √3,
        // area 2·(acos(d/2) − (d/2)·sqrt(1 − d²/4))
        let d: f64 = 3f64.sqrt();
        let expected = 2.0 * ((d / 2.0).acos() - (d / 2.0) * (1.0 - d * d / 4.0).sqrt());
        assert!((lens().area() - expected).abs() < 1e-12);
    }

    #[test]
    fn outward_normal_sign() {
        let l = lens();
        let e = l.edges()[0];
        let m = e.point_at(0.5);
        let n = e.normal_at(m);
        // lower arc: its outward normal points down
        assert!(n.y < -0.99);
        // stepping along the normal leaves the region
        let t = Tolerances::for_scale(1.0);
        assert_eq!(classify_point(m + n * 0.01, &l, &t), PointClass::Outside);
        assert_eq!(classify_point(m - n * 0.01, &l, &t), PointClass::Inside);
    }

    #[test]
    fn square_properties() {
        let s = square();
        assert!((s.area() - 1.0).abs() < 1e-15);
        assert!((s.diameter() - 2f64.sqrt()).abs() < 1e-15);
        assert!((s.perimeter() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_open_boundary() {
        let e = BoundaryEdge::Segment {
            start: p(0.0, 0.0),
            end: p(1.0, 0.0),
        };
        let f = BoundaryEdge::Segment {
            start: p(1.0, 0.0),
            end: p(1.0, 1.0),
        };
        let g = BoundaryEdge::Segment {
            start: p(1.0, 1.0),
            end: p(0.5, 0.5),
        };
        assert!(matches!(
            ArcPolygon::from_edges(vec![e, f, g]),
            Err(Error::InvalidPolygon(_))
        ));
    }

    #[test]
    fn rejects_clockwise() {
        let v = [p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), p(1.0, 0.0)];
        let edges = (0..4)
            .map(|i| BoundaryEdge::Segment {
                start: v[i],
                end: v[(i + 1) % 4],
            })
            .collect();
        assert!(ArcPolygon::from_edges(edges).is_err());
    }
}
