//! Compact planar sets under five representations, with membership,
//! boundary sampling, nearest/farthest queries and connected components.

mod components;
mod query;
mod sampling;

pub use components::connected_components;
pub use query::{cluster, hausdorff_distance, FarthestResult, ProjResult};

use serde::{Deserialize, Serialize};

use crate::geometry::{
    bounding_box, convex_hull, ArcPolygon, Circle, ConvexPolygon, Point2, PointClass, Tolerances,
};
use crate::{Error, Result, Scalar};

/// A nonempty compact subset of the plane.
///
/// Use the constructors to get validated values. `PointCloud` and
/// `Singleton` are their own boundary; `CircleCurve` is the curve only, not
/// the disk it bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "", tag = "type", content = "data", rename_all = "snake_case")]
pub enum Shape<T: Scalar> {
    PointCloud(Vec<Point2<T>>),
    ConvexPolygon(ConvexPolygon<T>),
    ArcPolygon(ArcPolygon<T>),
    CircleCurve(Circle<T>),
    Singleton(Point2<T>),
}

fn check_finite<T: Scalar>(pts: &[Point2<T>]) -> Result<()> {
    if pts.iter().all(|p| p.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidShape("non-finite coordinate".into()))
    }
}

impl<T: Scalar> Shape<T> {
    pub fn point_cloud(points: Vec<Point2<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_finite(&points)?;
        Ok(Shape::PointCloud(points))
    }

    /// Convex polygon through the hull of `vertices`; collinear vertices are
    /// merged and at least three extreme points must remain.
    pub fn convex_polygon(vertices: &[Point2<T>]) -> Result<Self> {
        check_finite(vertices)?;
        let hull = convex_hull(vertices)?;
        if hull.len() < 3 {
            return Err(Error::InvalidShape(
                "convex polygon needs three non-collinear vertices".into(),
            ));
        }
        Ok(Shape::ConvexPolygon(hull))
    }

    pub fn arc_polygon(poly: ArcPolygon<T>) -> Self {
        Shape::ArcPolygon(poly)
    }

    pub fn disk(center: Point2<T>, radius: T) -> Result<Self> {
        Ok(Shape::ArcPolygon(ArcPolygon::disk(Circle::new(
            center, radius,
        ))?))
    }

    pub fn circle_curve(center: Point2<T>, radius: T) -> Result<Self> {
        check_finite(&[center])?;
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(Error::InvalidShape("circle radius must be positive".into()));
        }
        Ok(Shape::CircleCurve(Circle::new(center, radius)))
    }

    pub fn singleton(p: Point2<T>) -> Result<Self> {
        check_finite(&[p])?;
        Ok(Shape::Singleton(p))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Shape::PointCloud(_) => "point_cloud",
            Shape::ConvexPolygon(_) => "polygon",
            Shape::ArcPolygon(_) => "arc_polygon",
            Shape::CircleCurve(_) => "circle_curve",
            Shape::Singleton(_) => "singleton",
        }
    }

    /// Default tolerances scaled by the diameter.
    pub fn tolerances(&self) -> Tolerances<T> {
        Tolerances::for_scale(self.diameter())
    }

    /// Corners of the exact representation (cloud members for clouds).
    pub fn corners(&self) -> Vec<Point2<T>> {
        match self {
            Shape::PointCloud(p) => p.clone(),
            Shape::ConvexPolygon(p) => p.vertices.clone(),
            Shape::ArcPolygon(p) => p.vertices(),
            Shape::CircleCurve(_) => Vec::new(),
            Shape::Singleton(p) => vec![*p],
        }
    }

    pub fn bounding_box(&self) -> (Point2<T>, Point2<T>) {
        let circle_box = |c: &Circle<T>| {
            let r = Point2::new(c.radius, c.radius);
            (c.center - r, c.center + r)
        };
        match self {
            Shape::CircleCurve(c) => circle_box(c),
            Shape::ArcPolygon(p) => match p.full_circle() {
                Some(c) => circle_box(&c),
                None => {
                    // arcs bulge at most to their axis-extreme points
                    let mut pts = p.vertices();
                    for e in p.edges() {
                        if let crate::geometry::BoundaryEdge::Arc(a) = e {
                            for k in 0..4 {
                                let d = Point2::from_angle(T::lit(k as f64) * T::FRAC_PI_2());
                                if a.spans_direction(d, T::zero()) {
                                    pts.push(a.center + d * a.radius);
                                }
                            }
                        }
                    }
                    bounding_box(&pts).unwrap()
                }
            },
            other => bounding_box(&other.corners()).unwrap(),
        }
    }

    /// Membership with boundary band `tol.band()`.
    pub fn membership(&self, x: Point2<T>, tol: &Tolerances<T>) -> PointClass {
        let band = tol.band();
        let near = |p: &Point2<T>| x.distance(*p) <= band;
        match self {
            Shape::PointCloud(pts) => {
                if pts.iter().any(near) {
                    PointClass::Boundary
                } else {
                    PointClass::Outside
                }
            }
            Shape::Singleton(p) => {
                if near(p) {
                    PointClass::Boundary
                } else {
                    PointClass::Outside
                }
            }
            Shape::CircleCurve(c) => {
                if (x.distance(c.center) - c.radius).abs() <= band {
                    PointClass::Boundary
                } else {
                    PointClass::Outside
                }
            }
            Shape::ConvexPolygon(poly) => {
                let s = poly.edges().fold(T::infinity(), |m, (a, b)| {
                    let d = b - a;
                    m.min(d.cross(x - a) / d.norm())
                });
                if s > band {
                    PointClass::Inside
                } else if s >= -band {
                    PointClass::Boundary
                } else {
                    PointClass::Outside
                }
            }
            Shape::ArcPolygon(poly) => {
                let s = poly.slack(x);
                if s > band {
                    PointClass::Inside
                } else if s >= -band {
                    PointClass::Boundary
                } else {
                    PointClass::Outside
                }
            }
        }
    }

    /// Max pairwise distance over the exact representation.
    pub fn diameter(&self) -> T {
        let pairwise = |pts: &[Point2<T>]| {
            let mut best = T::zero();
            for (i, p) in pts.iter().enumerate() {
                for q in &pts[i + 1..] {
                    best = best.max(p.distance(*q));
                }
            }
            best
        };
        match self {
            Shape::PointCloud(p) => pairwise(p),
            Shape::ConvexPolygon(p) => pairwise(&p.vertices),
            Shape::ArcPolygon(p) => p.diameter(),
            Shape::CircleCurve(c) => T::two() * c.radius,
            Shape::Singleton(_) => T::zero(),
        }
    }

    /// Polygons and arc-polygons have positive area; curves, clouds and
    /// singletons have empty interior.
    pub fn interior_nonempty(&self) -> bool {
        match self {
            Shape::ConvexPolygon(p) => p.double_area() > T::zero(),
            Shape::ArcPolygon(p) => p.area() > T::zero(),
            _ => false,
        }
    }

    /// True for a single point (including a cloud of coincident points).
    pub fn is_singleton(&self) -> bool {
        match self {
            Shape::Singleton(_) => true,
            Shape::PointCloud(p) => p.iter().all(|q| *q == p[0]),
            _ => false,
        }
    }

    /// `λ·A`.
    pub fn scaled(&self, s: T) -> Self {
        match self {
            Shape::PointCloud(p) => Shape::PointCloud(p.iter().map(|q| *q * s).collect()),
            Shape::ConvexPolygon(p) => Shape::ConvexPolygon(ConvexPolygon {
                vertices: p.vertices.iter().map(|q| *q * s).collect(),
            }),
            Shape::ArcPolygon(p) => Shape::ArcPolygon(p.scaled(s)),
            Shape::CircleCurve(c) => Shape::CircleCurve(Circle::new(c.center * s, c.radius * s)),
            Shape::Singleton(p) => Shape::Singleton(*p * s),
        }
    }
}
