use serde::{Deserialize, Serialize};

use crate::geometry::{
    circle_intersections, minimum_enclosing_circle, ArcEdge, ArcPolygon, BoundaryEdge, Circle,
    Point2, Tolerances,
};
use crate::{Error, Result, Scalar};

/// `⋂ B̄(c; r)` over a set of centers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "", tag = "kind", content = "data", rename_all = "snake_case")]
pub enum DiskIntersection<T: Scalar> {
    Empty,
    Point(Point2<T>),
    Region(ArcPolygon<T>),
}

pub(crate) fn dedup<T: Scalar>(points: &[Point2<T>], eps: T) -> Vec<Point2<T>> {
    let mut out: Vec<Point2<T>> = Vec::with_capacity(points.len());
    for p in points {
        if out.iter().all(|q| q.distance(*p) > eps) {
            out.push(*p);
        }
    }
    out
}

/// Piece of `arc` inside `B̄(c; r)`, or `None` when nothing is left.
/// Endpoints already inside the disk are kept bit-for-bit.
fn clip_arc<T: Scalar>(arc: &ArcEdge<T>, c: Point2<T>, r: T, slack: T) -> Option<ArcEdge<T>> {
    let inside = |p: Point2<T>| p.distance(c) <= r + slack;
    let s_in = inside(arc.start);
    let e_in = inside(arc.end);
    let m_in = inside(arc.midpoint());
    if s_in && e_in && m_in {
        return Some(*arc);
    }
    let cuts = circle_intersections(arc.center, arc.radius, c, r);
    let sweep = arc.sweep();
    let s0 = arc.start_angle();
    let along = |p: Point2<T>| T::wrap_angle((p - arc.center).angle() - s0);
    // The arc's circle meets the disk in the CCW window [cuts[0], cuts[1]].
    let start = if s_in {
        Some(arc.start)
    } else {
        cuts.first().filter(|p| along(**p) <= sweep).copied()
    };
    let end = if e_in {
        Some(arc.end)
    } else {
        cuts.get(1).filter(|p| along(**p) <= sweep).copied()
    };
    match (start, end) {
        (Some(s), Some(e)) => {
            let piece = ArcEdge {
                start: s,
                end: e,
                center: arc.center,
                radius: arc.radius,
            };
            if along(s) <= along(e) && s.distance(e) > slack {
                Some(piece)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Exact boundary of `⋂ B̄(c; r)` by incremental clipping.
///
/// Returns `Empty` when the centers do not fit in a radius-`r` circle and
/// `Point` when they fit only tightly (within `tol.geom · r`).
pub fn disk_intersection<T: Scalar>(
    centers: &[Point2<T>],
    r: T,
    tol: &Tolerances<T>,
) -> Result<DiskIntersection<T>> {
    if centers.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(r > T::zero()) {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let tau = tol.geom * r;
    let c = dedup(centers, tau);
    let mec = minimum_enclosing_circle(&c)?;
    if mec.radius > r + tau {
        return Ok(DiskIntersection::Empty);
    }
    if mec.radius >= r - tau {
        return Ok(DiskIntersection::Point(mec.center));
    }
    if c.len() == 1 {
        return Ok(DiskIntersection::Region(ArcPolygon::disk(Circle::new(
            c[0], r,
        ))?));
    }

    // Two-disk lens to start.
    let (a, b) = (c[0], c[1]);
    let ab = circle_intersections(a, r, b, r);
    if ab.len() < 2 {
        return Ok(DiskIntersection::Point(a.midpoint(b)));
    }
    // cuts[0] is right of a → b; the arc of circle a inside disk b runs CCW
    // from cuts[0] to cuts[1].
    let mut arcs = vec![
        ArcEdge {
            start: ab[0],
            end: ab[1],
            center: a,
            radius: r,
        },
        ArcEdge {
            start: ab[1],
            end: ab[0],
            center: b,
            radius: r,
        },
    ];
    let slack = tau;
    for &q in &c[2..] {
        let kept: Vec<Option<ArcEdge<T>>> = arcs.iter().map(|e| clip_arc(e, q, r, slack)).collect();
        if kept.iter().zip(&arcs).all(|(k, e)| k.as_ref() == Some(e)) {
            continue;
        }
        let pieces: Vec<ArcEdge<T>> = kept.into_iter().flatten().collect();
        if pieces.is_empty() {
            return Ok(DiskIntersection::Point(mec.center));
        }
        let mut next: Vec<ArcEdge<T>> = Vec::with_capacity(pieces.len() + 1);
        let n = pieces.len();
        for i in 0..n {
            next.push(pieces[i]);
            let to = pieces[(i + 1) % n].start;
            let from = pieces[i].end;
            if from.distance(to) > slack {
                next.push(ArcEdge {
                    start: from,
                    end: to,
                    center: q,
                    radius: r,
                });
            }
        }
        if next.len() < 2 {
            return Ok(DiskIntersection::Point(mec.center));
        }
        arcs = next;
    }
    let edges: Vec<BoundaryEdge<T>> = arcs.into_iter().map(BoundaryEdge::Arc).collect();
    match ArcPolygon::from_edges(edges) {
        Ok(poly) => Ok(DiskIntersection::Region(poly)),
        Err(_) => Ok(DiskIntersection::Point(mec.center)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{classify_point, PointClass};
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn tol() -> Tolerances<f64> {
        Tolerances::for_scale(1.0)
    }

    #[test]
    fn single_center_is_disk() {
        let DiskIntersection::Region(poly) =
            disk_intersection(&[p(1.0, 2.0)], 1.0, &tol()).unwrap()
        else {
            panic!()
        };
        assert_eq!(poly.full_circle(), Some(Circle::new(p(1.0, 2.0), 1.0)));
    }

    #[test]
    fn tangent_and_far_pairs() {
        assert_eq!(
            disk_intersection(&[p(-1.0, 0.0), p(1.0, 0.0)], 1.0, &tol()).unwrap(),
            DiskIntersection::Point(p(0.0, 0.0))
        );
        assert_eq!(
            disk_intersection(&[p(-1.5, 0.0), p(1.5, 0.0)], 1.0, &tol()).unwrap(),
            DiskIntersection::Empty
        );
    }

    #[test]
    fn lens_of_two_centers() {
        let DiskIntersection::Region(poly) =
            disk_intersection(&[p(0.0, 0.0), p(1.0, 0.0)], 1.0, &tol()).unwrap()
        else {
            panic!()
        };
        assert_eq!(poly.edges().len(), 2);
        let h = 3f64.sqrt() / 2.0;
        let mut v = poly.vertices();
        v.sort_by(|a, b| a.y.partial_cmp(&b.y).unwrap());
        assert!(v[0].distance(p(0.5, -h)) < 1e-12);
        assert!(v[1].distance(p(0.5, h)) < 1e-12);
        // lens area: 2(θ - sin θ)/2 with θ = 2π/3 on each side
        let th = 2.0 * std::f64::consts::PI / 3.0;
        assert!((poly.area() - (th - th.sin())).abs() < 1e-12);
    }

    #[test]
    fn triangle_of_centers() {
        let cs = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)];
        let DiskIntersection::Region(poly) = disk_intersection(&cs, 1.0, &tol()).unwrap() else {
            panic!()
        };
        assert_eq!(poly.edges().len(), 3);
        for e in poly.edges() {
            let BoundaryEdge::Arc(a) = e else { panic!() };
            assert!(cs.contains(&a.center));
        }
    }

    fn brute_inside(cs: &[Point2<f64>], r: f64, x: Point2<f64>) -> f64 {
        cs.iter()
            .map(|c| r - x.distance(*c))
            .fold(f64::INFINITY, f64::min)
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(
            raw in proptest::collection::vec((-0.6f64..0.6, -0.6f64..0.6), 1..10),
            qs in proptest::collection::vec((-1.5f64..1.5, -1.5f64..1.5), 50),
        ) {
            let cs: Vec<_> = raw.iter().map(|&(x, y)| p(x, y)).collect();
            let r = 1.0;
            let t = tol();
            match disk_intersection(&cs, r, &t).unwrap() {
                DiskIntersection::Region(poly) => {
                    for e in poly.edges() {
                        let BoundaryEdge::Arc(a) = e else { panic!() };
                        prop_assert!(a.radius == r);
                        prop_assert!(cs.contains(&a.center));
                    }
                    for &(x, y) in &qs {
                        let q = p(x, y);
                        let s = brute_inside(&cs, r, q);
                        match classify_point(q, &poly, &t) {
                            PointClass::Inside => prop_assert!(s > -1e-9),
                            PointClass::Outside => prop_assert!(s < 1e-9),
                            PointClass::Boundary => prop_assert!(s.abs() < 1e-6),
                        }
                    }
                }
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
