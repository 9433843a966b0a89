use serde::{Deserialize, Serialize};

use super::{bounding_box, orient, Point2};
use crate::{Error, Result, Scalar};

/// Vertex list of a convex polygon in counter-clockwise order.
///
/// May hold one (a point) or two (a segment) vertices when produced by
/// [`convex_hull`] on degenerate input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ConvexPolygon<T: Scalar> {
    pub vertices: Vec<Point2<T>>,
}

impl<T: Scalar> ConvexPolygon<T> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Twice the signed area (shoelace).
    pub fn double_area(&self) -> T {
        let n = self.vertices.len();
        (0..n).fold(T::zero(), |acc, i| {
            acc + self.vertices[i].cross(self.vertices[(i + 1) % n])
        })
    }

    /// Directed edges `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (Point2<T>, Point2<T>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

/// Convex hull by Andrew's monotone chain. Collinear and duplicate points
/// are dropped; the result is CCW starting from the lexicographically
/// smallest vertex.
pub fn convex_hull<T: Scalar>(points: &[Point2<T>]) -> Result<ConvexPolygon<T>> {
    let (lo, hi) = bounding_box(points).ok_or(Error::EmptyInput)?;
    let scale = (hi - lo).norm();
    let geom = T::lit(1e-9).max(T::epsilon() * T::lit(64.0));
    let dup = geom * scale;
    let flat = geom * scale * scale;

    let mut pts: Vec<Point2<T>> = points.to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.y.partial_cmp(&b.y).unwrap_or(std::cmp::Ordering::Equal))
    });
    pts.dedup_by(|a, b| a.distance(*b) <= dup);
    if pts.len() <= 2 {
        if pts.len() == 2 && pts[0].distance(pts[1]) <= dup {
            pts.truncate(1);
        }
        return Ok(ConvexPolygon { vertices: pts });
    }

    let mut hull: Vec<Point2<T>> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point2<T>>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= flat
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() == 2 && hull[0].distance(hull[1]) <= dup {
        hull.truncate(1);
    }
    Ok(ConvexPolygon { vertices: hull })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn singleton() {
        let h = convex_hull(&[p(0.0, 0.0)]).unwrap();
        assert_eq!(h.vertices, vec![p(0.0, 0.0)]);
    }

    #[test]
    fn interior_point_dropped() {
        let pts = [p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(0.25, 0.25)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices, vec![p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]);
        // direct check: every input inside the triangle
        for q in pts {
            for (a, b) in h.edges() {
                assert!(orient(a, b, q) >= 0.0);
            }
        }
    }

    #[test]
    fn unit_square_ccw() {
        let pts = [p(1.0, 1.0), p(0.0, 0.0), p(0.0, 1.0), p(1.0, 0.0)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(
            h.vertices,
            vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]
        );
        assert!((h.double_area() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn collinear_points_collapse_to_segment() {
        let pts = [p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), p(0.5, 0.5)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices, vec![p(0.0, 0.0), p(2.0, 2.0)]);
    }

    #[test]
    fn collinear_edge_points_removed() {
        let pts = [
            p(0.0, 0.0),
            p(0.5, 0.0),
            p(1.0, 0.0),
            p(1.0, 1.0),
            p(0.0, 1.0),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn empty_input() {
        assert_eq!(convex_hull::<f64>(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn duplicates() {
        let h = convex_hull(&[p(1.0, 1.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(h.len(), 1);
    }
}
