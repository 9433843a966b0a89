use serde::{Deserialize, Serialize};

use super::intersection::{dedup, disk_intersection, DiskIntersection};
use crate::geometry::{
    arc_through, convex_hull, minimum_enclosing_circle, ArcEdge, ArcPolygon, BoundaryEdge, Circle,
    Point2, Side, Tolerances,
};
use crate::shapes::Shape;
use crate::{Error, Result, Scalar};

/// Smallest `r`-strongly convex set containing `source_points`: a singleton,
/// a full disk when the points fit only tightly, or an arc-polygon of
/// radius-`r` arcs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct BallHull<T: Scalar> {
    pub shape: Shape<T>,
    pub r: T,
    pub source_points: Vec<Point2<T>>,
}

enum Prelude<T: Scalar> {
    Done(Shape<T>),
    Points(Vec<Point2<T>>),
}

fn prelude<T: Scalar>(points: &[Point2<T>], r: T, tol: &Tolerances<T>) -> Result<Prelude<T>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(r > T::zero()) {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let tau = tol.geom * r;
    let mec = minimum_enclosing_circle(points)?;
    if mec.radius > r * (T::one() + tol.geom) {
        return Err(Error::InfeasibleRadius {
            mec_radius: mec.radius.to_f64_lossy(),
            r: r.to_f64_lossy(),
        });
    }
    let pts = dedup(points, tau);
    if pts.len() == 1 {
        return Ok(Prelude::Done(Shape::Singleton(pts[0])));
    }
    if mec.radius >= r * (T::one() - tol.geom) {
        return Ok(Prelude::Done(Shape::ArcPolygon(ArcPolygon::disk(
            Circle::new(mec.center, r),
        )?)));
    }
    Ok(Prelude::Points(pts))
}

fn lens<T: Scalar>(p: Point2<T>, q: Point2<T>, r: T, tol: &Tolerances<T>) -> Result<ArcPolygon<T>> {
    let lower = arc_through(p, q, r, Side::Left, tol.geom)?;
    let upper = arc_through(q, p, r, Side::Left, tol.geom)?;
    ArcPolygon::from_edges(vec![BoundaryEdge::Arc(lower), BoundaryEdge::Arc(upper)])
}

/// Ball hull by spindle pruning of the convex hull.
///
/// A hull vertex is dropped while it lies strictly inside the radius-`r`
/// spindle of its two neighbours (margin `tol.geom · r`); the scan restarts
/// after every deletion. Survivors are joined by radius-`r` arcs centered on
/// the inner side.
pub fn ball_hull<T: Scalar>(
    points: &[Point2<T>],
    r: T,
    tol: &Tolerances<T>,
) -> Result<BallHull<T>> {
    let done = |shape| BallHull {
        shape,
        r,
        source_points: points.to_vec(),
    };
    let pts = match prelude(points, r, tol)? {
        Prelude::Done(s) => return Ok(done(s)),
        Prelude::Points(p) => p,
    };
    let mut v = convex_hull(&pts)?.vertices;
    if v.len() == 1 {
        return Ok(done(Shape::Singleton(v[0])));
    }
    let margin = tol.geom * r;
    'prune: while v.len() > 2 {
        let n = v.len();
        for i in 0..n {
            let prev = v[(i + n - 1) % n];
            let next = v[(i + 1) % n];
            let arc = arc_through(prev, next, r, Side::Left, tol.geom)?;
            if v[i].distance(arc.center) < r - margin {
                v.remove(i);
                continue 'prune;
            }
        }
        break;
    }
    let poly = if v.len() == 2 {
        lens(v[0], v[1], r, tol)?
    } else {
        let n = v.len();
        let edges = (0..n)
            .map(|i| {
                arc_through(v[i], v[(i + 1) % n], r, Side::Left, tol.geom).map(BoundaryEdge::Arc)
            })
            .collect::<Result<Vec<_>>>()?;
        ArcPolygon::from_edges(edges)?
    };
    Ok(done(Shape::ArcPolygon(poly)))
}

/// Ball hull through the kernel `K = ⋂ B̄(p; r)`: the points whose circles
/// carry arcs of `K` become vertices, joined by radius-`r` arcs centered at
/// the corners of `K`.
pub fn ball_hull_dual<T: Scalar>(
    points: &[Point2<T>],
    r: T,
    tol: &Tolerances<T>,
) -> Result<BallHull<T>> {
    let done = |shape| BallHull {
        shape,
        r,
        source_points: points.to_vec(),
    };
    let pts = match prelude(points, r, tol)? {
        Prelude::Done(s) => return Ok(done(s)),
        Prelude::Points(p) => p,
    };
    let kernel = match disk_intersection(&pts, r, tol)? {
        DiskIntersection::Empty => {
            let mec = minimum_enclosing_circle(&pts)?;
            return Err(Error::InfeasibleRadius {
                mec_radius: mec.radius.to_f64_lossy(),
                r: r.to_f64_lossy(),
            });
        }
        DiskIntersection::Point(c) => {
            return Ok(done(Shape::ArcPolygon(ArcPolygon::disk(Circle::new(
                c, r,
            ))?)));
        }
        DiskIntersection::Region(k) => k,
    };
    if let Some(c) = kernel.full_circle() {
        return Ok(done(Shape::Singleton(c.center)));
    }
    let arcs: Vec<ArcEdge<T>> = kernel
        .edges()
        .iter()
        .filter_map(|e| match e {
            BoundaryEdge::Arc(a) => Some(*a),
            BoundaryEdge::Segment { .. } => None,
        })
        .collect();
    let n = arcs.len();
    let edges: Vec<BoundaryEdge<T>> = (0..n)
        .map(|i| {
            BoundaryEdge::Arc(ArcEdge {
                start: arcs[i].center,
                end: arcs[(i + 1) % n].center,
                center: arcs[i].end,
                radius: r,
            })
        })
        .collect();
    Ok(done(Shape::ArcPolygon(ArcPolygon::from_edges(edges)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointClass;
    use crate::shapes::hausdorff_distance;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn tol(pts: &[Point2<f64>]) -> Tolerances<f64> {
        Shape::PointCloud(pts.to_vec()).tolerances()
    }

    #[test]
    fn singleton_hull() {
        let pts = [p(0.3, 0.4)];
        assert_eq!(
            ball_hull(&pts, 1.0, &tol(&pts)).unwrap().shape,
            Shape::Singleton(p(0.3, 0.4))
        );
        assert_eq!(
            ball_hull_dual(&pts, 1.0, &tol(&pts)).unwrap().shape,
            Shape::Singleton(p(0.3, 0.4))
        );
    }

    #[test]
    fn unit_pair_lens() {
        let pts = [p(-0.5, 0.0), p(0.5, 0.0)];
        let h = ball_hull(&pts, 1.0, &tol(&pts)).unwrap();
        let Shape::ArcPolygon(poly) = &h.shape else {
            panic!()
        };
        let y = 3f64.sqrt() / 2.0;
        let mut cs: Vec<_> = poly
            .edges()
            .iter()
            .map(|e| match e {
                BoundaryEdge::Arc(a) => a.center,
                _ => panic!(),
            })
            .collect();
        cs.sort_by(|a, b| a.y.partial_cmp(&b.y).unwrap());
        assert!(cs[0].distance(p(0.0, -y)) < 1e-12 && cs[1].distance(p(0.0, y)) < 1e-12);
        let d = ball_hull_dual(&pts, 1.0, &tol(&pts)).unwrap();
        assert!(hausdorff_distance(&h.shape, &d.shape, 256) < 1e-9);
    }

    #[test]
    fn diametral_pair_is_disk() {
        let pts = [p(-1.0, 0.0), p(1.0, 0.0)];
        let h = ball_hull(&pts, 1.0, &tol(&pts)).unwrap();
        let Shape::ArcPolygon(poly) = &h.shape else {
            panic!()
        };
        let c = poly.full_circle().unwrap();
        assert!(c.center.distance(p(0.0, 0.0)) < 1e-12 && c.radius == 1.0);
    }

    #[test]
    fn near_collinear_middle_pruned() {
        let pts = [p(0.0, 0.0), p(1.0, 0.01), p(2.0, 0.0)];
        let h = ball_hull(&pts, 5.0, &tol(&pts)).unwrap();
        let Shape::ArcPolygon(poly) = &h.shape else {
            panic!()
        };
        assert_eq!(poly.edges().len(), 2);
        let t = h.shape.tolerances();
        assert_eq!(h.shape.membership(p(1.0, 0.01), &t), PointClass::Inside);
    }

    #[test]
    fn infeasible_radius_message() {
        let pts = [p(0.0, 0.0), p(1.0, 0.0)];
        let e = ball_hull(&pts, 0.4, &tol(&pts)).unwrap_err();
        assert_eq!(e.to_string(), "infeasible radius: MEC radius 0.5 > r = 0.4");
    }

    #[test]
    fn square_corners_both_constructions() {
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        let t = tol(&pts);
        let a = ball_hull(&pts, 1.0, &t).unwrap();
        let b = ball_hull_dual(&pts, 1.0, &t).unwrap();
        let Shape::ArcPolygon(poly) = &a.shape else {
            panic!()
        };
        assert_eq!(poly.edges().len(), 4);
        assert!(hausdorff_distance(&a.shape, &b.shape, 512) < 1e-9);
    }

    fn points_in_disk(raw: &[(f64, f64)], rad: f64) -> Vec<Point2<f64>> {
        raw.iter()
            .map(|&(a, s)| Point2::from_angle(a) * (rad * s.sqrt()))
            .collect()
    }

    proptest! {
        #[test]
        fn constructions_agree_and_contain(
            raw in proptest::collection::vec((0.0f64..std::f64::consts::TAU, 0.0f64..1.0), 2..12),
            r in 0.5f64..3.0,
        ) {
            let pts = points_in_disk(&raw, 0.9 * r);
            let t = tol(&pts);
            let a = ball_hull(&pts, r, &t).unwrap();
            let b = ball_hull_dual(&pts, r, &t).unwrap();
            let diam = a.shape.diameter().max(1e-300);
            prop_assert!(hausdorff_distance(&a.shape, &b.shape, 256) < 1e-7 * diam);
            let st = a.shape.tolerances();
            let mec = minimum_enclosing_circle(&pts).unwrap();
            for q in &pts {
                prop_assert!(a.shape.membership(*q, &st).is_member());
            }
            for s in a.shape.boundary_samples(128) {
                prop_assert!(s.distance(mec.center) <= r * (1.0 + 1e-9));
            }
        }

        #[test]
        fn idempotent(
            raw in proptest::collection::vec((0.0f64..std::f64::consts::TAU, 0.0f64..1.0), 3..10),
        ) {
            let r = 1.0;
            let pts = points_in_disk(&raw, 0.9);
            let a = ball_hull(&pts, r, &tol(&pts)).unwrap();
            let again_pts = a.shape.boundary_samples(200);
            let b = ball_hull(&again_pts, r, &tol(&again_pts)).unwrap();
            let diam = a.shape.diameter();
            prop_assert!(hausdorff_distance(&a.shape, &b.shape, 256) < 1e-2 * diam);
        }

        #[test]
        fn monotone_in_points(
            raw in proptest::collection::vec((0.0f64..std::f64::consts::TAU, 0.0f64..1.0), 3..10),
            extra in proptest::collection::vec((0.0f64..std::f64::consts::TAU, 0.0f64..1.0), 1..4),
        ) {
            let r = 1.0;
            let p_set = points_in_disk(&raw, 0.6);
            let mut q_set = p_set.clone();
            q_set.extend(points_in_disk(&extra, 0.6));
            let a = ball_hull(&p_set, r, &tol(&p_set)).unwrap();
            let b = ball_hull(&q_set, r, &tol(&q_set)).unwrap();
            let t = b.shape.tolerances();
            for s in a.shape.boundary_samples(128) {
                prop_assert!(b.shape.membership(s, &t).is_member());
            }
        }
    }
}
