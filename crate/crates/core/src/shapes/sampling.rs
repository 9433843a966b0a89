use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Shape;
use crate::geometry::{BoundaryEdge, Circle, Point2, PointClass, Tolerances};
use crate::Scalar;

/// Split `m` fill points over edges proportionally to length (largest
/// remainder, ties to the lower index).
fn allocate<T: Scalar>(lengths: &[T], m: usize) -> Vec<usize> {
    let total = lengths.iter().fold(T::zero(), |a, l| a + *l);
    if m == 0 || !(total > T::zero()) {
        return vec![0; lengths.len()];
    }
    let quotas: Vec<f64> = lengths
        .iter()
        .map(|l| (*l / total).to_f64_lossy() * m as f64)
        .collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut left = m - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = quotas[a] - quotas[a].floor();
        let fb = quotas[b] - quotas[b].floor();
        fb.partial_cmp(&fa)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    for &i in order.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    counts
}

fn ring<T: Scalar>(c: &Circle<T>, n: usize) -> Vec<Point2<T>> {
    let n = n.max(1);
    (0..n)
        .map(|k| c.point_at(T::TAU() * T::lit(k as f64) / T::lit(n as f64)))
        .collect()
}

fn fill_edges<T: Scalar>(
    corners: Vec<Point2<T>>,
    edges: &[BoundaryEdge<T>],
    n: usize,
) -> Vec<Point2<T>> {
    let m = n.saturating_sub(corners.len());
    let lengths: Vec<T> = edges.iter().map(|e| e.length()).collect();
    let counts = allocate(&lengths, m);
    let mut out = Vec::with_capacity(corners.len() + m);
    for (e, &k) in edges.iter().zip(&counts) {
        out.push(e.start());
        for j in 1..=k {
            out.push(e.point_at(T::lit(j as f64) / T::lit((k + 1) as f64)));
        }
    }
    out
}

impl<T: Scalar> Shape<T> {
    /// `n` boundary points: every corner plus an arclength-uniform fill.
    /// Clouds return themselves and curves get `n` equally spaced points
    /// starting at angle 0. Never fewer points than there are corners.
    pub fn boundary_samples(&self, n: usize) -> Vec<Point2<T>> {
        match self {
            Shape::PointCloud(p) => p.clone(),
            Shape::Singleton(p) => vec![*p],
            Shape::CircleCurve(c) => ring(c, n),
            Shape::ConvexPolygon(poly) => {
                let edges: Vec<BoundaryEdge<T>> = poly
                    .edges()
                    .map(|(start, end)| BoundaryEdge::Segment { start, end })
                    .collect();
                fill_edges(poly.vertices.clone(), &edges, n)
            }
            Shape::ArcPolygon(poly) => match poly.full_circle() {
                Some(c) => ring(&c, n),
                None => fill_edges(poly.vertices(), poly.edges(), n),
            },
        }
    }

    /// Up to `n` interior points by rejection sampling in the bounding box.
    /// Empty for shapes without interior.
    pub fn inner_samples(&self, n: usize, seed: u64, tol: &Tolerances<T>) -> Vec<Point2<T>> {
        if !self.interior_nonempty() || n == 0 {
            return Vec::new();
        }
        let (lo, hi) = self.bounding_box();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n);
        let mut attempts = 0usize;
        while out.len() < n && attempts < 1000 * n {
            attempts += 1;
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            let x = Point2::new(
                lo.x + (hi.x - lo.x) * T::lit(u),
                lo.y + (hi.y - lo.y) * T::lit(v),
            );
            if self.membership(x, tol) == PointClass::Inside {
                out.push(x);
            }
        }
        out
    }
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

    #[test]
    fn square_corners_and_midpoints() {
        let s = square().boundary_samples(8);
        let expected = [
            p(0.0, 0.0),
            p(0.5, 0.0),
            p(1.0, 0.0),
            p(1.0, 0.5),
            p(1.0, 1.0),
            p(0.5, 1.0),
            p(0.0, 1.0),
            p(0.0, 0.5),
        ];
        assert_eq!(s.len(), 8);
        for (a, b) in s.iter().zip(expected) {
            assert!(a.distance(b) < 1e-15);
        }
    }

    #[test]
    fn circle_four_points() {
        let c = Shape::circle_curve(p(0.0, 0.0), 1.0).unwrap();
        let s = c.boundary_samples(4);
        let expected = [p(1.0, 0.0), p(0.0, 1.0), p(-1.0, 0.0), p(0.0, -1.0)];
        for (a, b) in s.iter().zip(expected) {
            assert!(a.distance(b) < 1e-15);
        }
    }

    #[test]
    fn singleton_any_n() {
        let s = Shape::singleton(p(2.0, 3.0)).unwrap();
        assert_eq!(s.boundary_samples(17), vec![p(2.0, 3.0)]);
    }

    #[test]
    fn samples_are_boundary_points() {
        let t = Tolerances::for_scale(2f64.sqrt());
        let sq = square();
        for x in sq.boundary_samples(37) {
            assert_eq!(sq.membership(x, &t), PointClass::Boundary);
        }
        for x in sq.inner_samples(50, 3, &t) {
            assert_eq!(sq.membership(x, &t), PointClass::Inside);
        }
    }

    #[test]
    fn too_few_keeps_corners() {
        assert_eq!(square().boundary_samples(2).len(), 4);
    }

    #[test]
    fn allocation_is_proportional() {
        assert_eq!(allocate(&[1.0f64, 1.0, 2.0], 4), vec![1, 1, 2]);
        assert_eq!(allocate(&[1.0f64, 1.0, 1.0], 2), vec![1, 1, 0]);
    }
}
