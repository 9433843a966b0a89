use serde::{Deserialize, Serialize};

use super::Shape;
use crate::geometry::{ArcEdge, BoundaryEdge, Circle, Point2, PointClass, Tolerances};
use crate::Scalar;

/// `dfar_A(x)` with clustered representatives of `far_A(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct FarthestResult<T: Scalar> {
    pub distance: T,
    pub far_points: Vec<Point2<T>>,
}

impl<T: Scalar> FarthestResult<T> {
    /// One cluster of farthest points.
    pub fn is_singleton(&self) -> bool {
        self.far_points.len() == 1
    }
}

/// `d_A(x)` with clustered representatives of `proj_A(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ProjResult<T: Scalar> {
    pub distance: T,
    pub proj_points: Vec<Point2<T>>,
}

impl<T: Scalar> ProjResult<T> {
    pub fn is_singleton(&self) -> bool {
        self.proj_points.len() == 1
    }
}

const SPAN_TOL: f64 = 1e-12;

/// Candidates whose distance is within `within` of `target`, thinned so
/// that kept representatives are pairwise at least `sep` apart. Candidates
/// closest to the target are kept first; ties keep input order.
pub fn cluster<T: Scalar>(
    cands: &[(Point2<T>, T)],
    target: T,
    within: T,
    sep: T,
) -> Vec<Point2<T>> {
    let mut near: Vec<(usize, T)> = cands
        .iter()
        .enumerate()
        .filter(|(_, (_, d))| (*d - target).abs() <= within)
        .map(|(i, (_, d))| (i, (*d - target).abs()))
        .collect();
    near.sort_by(|a, b| {
        a.1.partial_cmp(&b.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.0.cmp(&b.0))
    });
    let mut reps: Vec<Point2<T>> = Vec::new();
    for (i, _) in near {
        let p = cands[i].0;
        if reps.iter().all(|q| q.distance(p) >= sep) {
            reps.push(p);
        }
    }
    reps
}

/// Points along a circle of equidistant candidates, spaced so consecutive
/// chords are at least `sep` long.
fn circle_ring<T: Scalar>(c: &Circle<T>, sep: T) -> Vec<Point2<T>> {
    let ratio = (sep / (T::two() * c.radius)).min(T::one());
    let step = T::two() * ratio.asin();
    let n = if step > T::zero() {
        (T::TAU() / step)
            .floor()
            .to_usize()
            .unwrap_or(2)
            .clamp(2, 100_000)
    } else {
        2
    };
    (0..n)
        .map(|k| c.point_at(T::TAU() * T::lit(k as f64) / T::lit(n as f64)))
        .collect()
}

fn arc_ring<T: Scalar>(a: &ArcEdge<T>, sep: T) -> Vec<Point2<T>> {
    let ratio = (sep / (T::two() * a.radius)).min(T::one());
    let step = T::two() * ratio.asin();
    let sweep = a.sweep();
    let m = if step > T::zero() {
        (sweep / step)
            .floor()
            .to_usize()
            .unwrap_or(1)
            .clamp(1, 100_000)
    } else {
        1
    };
    (0..=m)
        .map(|j| a.point_at(T::lit(j as f64) / T::lit(m as f64)))
        .collect()
}

impl<T: Scalar> Shape<T> {
    fn far_candidates(&self, x: Point2<T>, tol: &Tolerances<T>) -> Vec<Point2<T>> {
        let band = tol.band();
        let ang = T::lit(SPAN_TOL);
        let circle_far = |c: &Circle<T>| match (c.center - x).normalized() {
            Some(d) if x.distance(c.center) > band => vec![c.center + d * c.radius],
            _ => circle_ring(c, tol.sep),
        };
        match self {
            Shape::PointCloud(p) => p.clone(),
            Shape::Singleton(p) => vec![*p],
            Shape::ConvexPolygon(p) => p.vertices.clone(),
            Shape::CircleCurve(c) => circle_far(c),
            Shape::ArcPolygon(poly) => match poly.full_circle() {
                Some(c) => circle_far(&c),
                None => {
                    let mut out = poly.vertices();
                    for e in poly.edges() {
                        if let BoundaryEdge::Arc(a) = e {
                            if x.distance(a.center) <= band {
                                out.extend(arc_ring(a, tol.sep));
                            } else {
                                out.push(a.farthest_point(x, ang));
                            }
                        }
                    }
                    out
                }
            },
        }
    }

    fn near_candidates(&self, x: Point2<T>, tol: &Tolerances<T>) -> Vec<Point2<T>> {
        let band = tol.band();
        let ang = T::lit(SPAN_TOL);
        let circle_near = |c: &Circle<T>| match (x - c.center).normalized() {
            Some(d) if x.distance(c.center) > band => vec![c.center + d * c.radius],
            _ => circle_ring(c, tol.sep),
        };
        match self {
            Shape::PointCloud(p) => p.clone(),
            Shape::Singleton(p) => vec![*p],
            Shape::ConvexPolygon(p) => p
                .edges()
                .map(|(a, b)| crate::geometry::closest_on_segment(x, a, b))
                .collect(),
            Shape::CircleCurve(c) => circle_near(c),
            Shape::ArcPolygon(poly) => match poly.full_circle() {
                Some(c) => circle_near(&c),
                None => poly
                    .edges()
                    .iter()
                    .map(|e| e.closest_point(x, ang))
                    .collect(),
            },
        }
    }

    /// Exact farthest distance and clustered farthest points. A continuum of
    /// farthest points (x at the center of a circle or arc) is reported as
    /// representatives spaced `tol.sep` apart.
    pub fn farthest(&self, x: Point2<T>, tol: &Tolerances<T>) -> FarthestResult<T> {
        let cands: Vec<(Point2<T>, T)> = self
            .far_candidates(x, tol)
            .into_iter()
            .map(|p| (p, x.distance(p)))
            .collect();
        let distance = cands.iter().fold(T::zero(), |m, c| m.max(c.1));
        let far_points = cluster(&cands, distance, tol.cluster, tol.sep);
        FarthestResult {
            distance,
            far_points,
        }
    }

    /// Exact distance to the set and clustered nearest points. Members of a
    /// solid shape project to themselves.
    pub fn project(&self, x: Point2<T>, tol: &Tolerances<T>) -> ProjResult<T> {
        let solid = matches!(self, Shape::ConvexPolygon(_) | Shape::ArcPolygon(_));
        if solid && self.membership(x, tol) != PointClass::Outside {
            return ProjResult {
                distance: T::zero(),
                proj_points: vec![x],
            };
        }
        let cands: Vec<(Point2<T>, T)> = self
            .near_candidates(x, tol)
            .into_iter()
            .map(|p| (p, x.distance(p)))
            .collect();
        let distance = cands.iter().fold(T::infinity(), |m, c| m.min(c.1));
        let proj_points = cluster(&cands, distance, tol.cluster, tol.sep);
        ProjResult {
            distance,
            proj_points,
        }
    }

    /// `x ∈ E_r(A)`: farthest distance exceeds `r` by more than `tol.pred`.
    pub fn in_e_r(&self, x: Point2<T>, r: T, tol: &Tolerances<T>) -> bool {
        self.farthest(x, tol).distance > r + tol.pred
    }
}

/// Hausdorff distance between two shapes, evaluated on `n` boundary samples
/// of each against the other's exact projection.
pub fn hausdorff_distance<T: Scalar>(a: &Shape<T>, b: &Shape<T>, n: usize) -> T {
    let ta = a.tolerances();
    let tb = b.tolerances();
    let one_way = |from: &Shape<T>, to: &Shape<T>, tol: &Tolerances<T>| {
        from.boundary_samples(n)
            .into_iter()
            .fold(T::zero(), |m, p| m.max(to.project(p, tol).distance))
    };
    one_way(a, b, &tb).max(one_way(b, a, &ta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn square() -> Shape<f64> {
        Shape::convex_polygon(&[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap()
    }

    fn disk() -> Shape<f64> {
        Shape::disk(p(0.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn disk_farthest_against_dense_enumeration() {
        let d = disk();
        let t = d.tolerances();
        let x = p(2.0, 0.0);
        let f = d.farthest(x, &t);
        // oracle: dense boundary enumeration
        let dense = (0..100_000)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / 100_000.0;
                x.distance(p(th.cos(), th.sin()))
            })
            .fold(0.0, f64::max);
        assert!((f.distance - 3.0).abs() < 1e-12);
        assert!((dense - 3.0).abs() < 1e-9);
        assert_eq!(f.far_points.len(), 1);
        assert!(f.far_points[0].distance(p(-1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn square_farthest_two_corners() {
        let s = square();
        let t = s.tolerances();
        let f = s.farthest(p(0.5, -1.0), &t);
        assert!((f.distance - 4.25f64.sqrt()).abs() < 1e-12);
        assert_eq!(f.far_points.len(), 2);
        assert!(f.far_points.contains(&p(0.0, 1.0)) && f.far_points.contains(&p(1.0, 1.0)));
    }

    #[test]
    fn disk_center_far_set_covers_circle() {
        let d = disk();
        let t = d.tolerances();
        let f = d.farthest(p(0.0, 0.0), &t);
        assert!((f.distance - 1.0).abs() < 1e-12);
        assert!(f.far_points.len() > 100);
        for (i, a) in f.far_points.iter().enumerate() {
            for b in &f.far_points[i + 1..] {
                assert!(a.distance(*b) >= t.sep);
            }
        }
        // every circle point is within one spacing of a representative
        let worst = (0..1000)
            .map(|k| {
                let q = Point2::from_angle(std::f64::consts::TAU * k as f64 / 1000.0);
                f.far_points
                    .iter()
                    .map(|r| r.distance(q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        assert!(worst < 2.0 * t.sep);
    }

    #[test]
    fn projections() {
        let d = disk();
        let t = d.tolerances();
        let pr = d.project(p(2.0, 0.0), &t);
        assert!((pr.distance - 1.0).abs() < 1e-15);
        assert!(pr.proj_points[0].distance(p(1.0, 0.0)) < 1e-15);

        let c = Shape::point_cloud(vec![p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        let pr = c.project(p(1.0, 0.0), &c.tolerances());
        assert_eq!(pr.distance, 1.0);
        assert_eq!(pr.proj_points.len(), 2);

        let s = square();
        let pr = s.project(p(0.5, 2.0), &s.tolerances());
        assert_eq!(pr.proj_points, vec![p(0.5, 1.0)]);
        assert_eq!(pr.distance, 1.0);
    }

    #[test]
    fn e_r_membership() {
        let d = disk();
        let t = d.tolerances();
        assert!(d.in_e_r(p(1.5, 0.0), 2.0, &t));
        assert!(!d.in_e_r(p(0.0, 0.0), 2.0, &t));
        let s = Shape::singleton(p(0.0, 0.0)).unwrap();
        assert!(s.in_e_r(p(3.0, 0.0), 2.0, &s.tolerances()));
    }

    #[test]
    fn lens_arc_center_far_set_is_the_arc() {
        use crate::geometry::{arc_through, ArcPolygon, Side};
        let a = p(-0.5, 0.0);
        let b = p(0.5, 0.0);
        let lower = arc_through(a, b, 1.0, Side::Left, 1e-9).unwrap();
        let upper = arc_through(b, a, 1.0, Side::Left, 1e-9).unwrap();
        let lens = Shape::arc_polygon(
            ArcPolygon::from_edges(vec![BoundaryEdge::Arc(lower), BoundaryEdge::Arc(upper)])
                .unwrap(),
        );
        let t = lens.tolerances();
        let f = lens.farthest(lower.center, &t);
        assert!((f.distance - 1.0).abs() < 1e-12);
        assert!(f.far_points.len() > 10);
        let g = lens.farthest(p(0.0, -5.0), &t);
        assert!(g.is_singleton());
        assert!(g.far_points[0].distance(upper.midpoint()) < 1e-12);
    }

    #[test]
    fn hausdorff_of_shifted_disks() {
        let a = disk();
        let b = Shape::disk(p(0.1, 0.0), 1.0).unwrap();
        let h = hausdorff_distance(&a, &b, 256);
        assert!((h - 0.1).abs() < 1e-9);
        assert_eq!(hausdorff_distance(&a, &a, 64), 0.0);
    }
}
