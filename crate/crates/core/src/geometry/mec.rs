use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Circle, Point2};
use crate::{Error, Result, Scalar};

/// Smallest circle enclosing `points` (seed 0 shuffle).
pub fn minimum_enclosing_circle<T: Scalar>(points: &[Point2<T>]) -> Result<Circle<T>> {
    minimum_enclosing_circle_seeded(points, 0)
}

/// Welzl's incremental algorithm in its iterative move-to-front-free form:
/// expected linear time over a deterministic shuffle drawn from `seed`.
pub fn minimum_enclosing_circle_seeded<T: Scalar>(
    points: &[Point2<T>],
    seed: u64,
) -> Result<Circle<T>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let scale = pts
        .iter()
        .fold(T::zero(), |m, p| m.max(p.x.abs()).max(p.y.abs()))
        .max(T::one());
    let slack = scale * T::epsilon() * T::lit(64.0);
    let inside = |c: &Circle<T>, p: Point2<T>| p.distance(c.center) <= c.radius + slack;

    let mut circle = Circle::new(pts[0], T::zero());
    for i in 1..pts.len() {
        if inside(&circle, pts[i]) {
            continue;
        }
        circle = Circle::new(pts[i], T::zero());
        for j in 0..i {
            if inside(&circle, pts[j]) {
                continue;
            }
            circle = from_two(pts[i], pts[j]);
            for k in 0..j {
                if !inside(&circle, pts[k]) {
                    circle = from_three(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    Ok(circle)
}

fn from_two<T: Scalar>(a: Point2<T>, b: Point2<T>) -> Circle<T> {
    Circle::new(a.midpoint(b), a.distance(b) * T::half())
}

/// Circumcircle of three points, or the diametral circle of the farthest
/// pair when they are (nearly) collinear.
fn from_three<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> Circle<T> {
    let ab = b - a;
    let ac = c - a;
    let d = T::two() * ab.cross(ac);
    let scale = ab.norm_sq().max(ac.norm_sq());
    if d.abs() <= scale * T::epsilon() * T::lit(16.0) {
        let pairs = [(a, b), (a, c), (b, c)];
        let (p, q) = pairs
            .into_iter()
            .max_by(|x, y| {
                x.0.distance_sq(x.1)
                    .partial_cmp(&y.0.distance_sq(y.1))
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        return from_two(p, q);
    }
    let ux = (ac.y * ab.norm_sq() - ab.y * ac.norm_sq()) / d;
    let uy = (ab.x * ac.norm_sq() - ac.x * ab.norm_sq()) / d;
    let off = Point2::new(ux, uy);
    Circle::new(a + off, off.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn single_point() {
        let c = minimum_enclosing_circle(&[p(0.0, 0.0)]).unwrap();
        assert_eq!(c.center, p(0.0, 0.0));
        assert_eq!(c.radius, 0.0);
    }

    #[test]
    fn diametral_pair() {
        let c = minimum_enclosing_circle(&[p(-1.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert!(c.center.distance(p(0.0, 0.0)) < 1e-15);
        assert!((c.radius - 1.0).abs() < 1e-15);
    }

    /// Circumcircle from the intersection of two perpendicular bisectors,
    /// solved by Cramer's rule; `None` for collinear triples.
    fn circum(a: Point2<f64>, b: Point2<f64>, c: Point2<f64>) -> Option<Circle<f64>> {
        // 2(b-a)·u = |b|²-|a|², 2(c-a)·u = |c|²-|a|²
        let (a1, b1) = (2.0 * (b.x - a.x), 2.0 * (b.y - a.y));
        let (a2, b2) = (2.0 * (c.x - a.x), 2.0 * (c.y - a.y));
        let r1 = b.norm_sq() - a.norm_sq();
        let r2 = c.norm_sq() - a.norm_sq();
        let det = a1 * b2 - a2 * b1;
        if det.abs() < 1e-12 {
            return None;
        }
        let u = p((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det);
        Some(Circle::new(u, u.distance(a)))
    }

    /// Brute force over all pairs and triples: the smallest candidate circle
    /// that encloses every point.
    fn brute_force(pts: &[Point2<f64>]) -> f64 {
        let mut best = f64::INFINITY;
        let encloses =
            |c: &Circle<f64>| pts.iter().all(|q| q.distance(c.center) <= c.radius + 1e-9);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let c = Circle::new(pts[i].midpoint(pts[j]), pts[i].distance(pts[j]) / 2.0);
                if encloses(&c) {
                    best = best.min(c.radius);
                }
                for k in j + 1..pts.len() {
                    if let Some(c) = circum(pts[i], pts[j], pts[k]) {
                        if encloses(&c) {
                            best = best.min(c.radius);
                        }
                    }
                }
            }
        }
        if pts.len() == 1 {
            0.0
        } else {
            best
        }
    }

    #[test]
    fn unit_square() {
        let sq = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        let c = minimum_enclosing_circle(&sq).unwrap();
        assert!(c.center.distance(p(0.5, 0.5)) < 1e-12);
        let expected = 2f64.sqrt() / 2.0;
        assert!((c.radius - expected).abs() < 1e-12);
        for q in sq {
            assert!((q.distance(c.center) - expected).abs() < 1e-12);
        }
        assert!((brute_force(&sq) - expected).abs() < 1e-12);
    }

    #[test]
    fn empty() {
        assert!(minimum_enclosing_circle::<f64>(&[]).is_err());
    }

    #[test]
    fn f32_square() {
        let sq = [
            Point2::new(0.0f32, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let c = minimum_enclosing_circle(&sq).unwrap();
        assert!((c.radius - std::f32::consts::FRAC_1_SQRT_2).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            raw in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..9),
            seed in 0u64..4,
        ) {
            let pts: Vec<_> = raw.iter().map(|&(x, y)| p(x, y)).collect();
            let c = minimum_enclosing_circle_seeded(&pts, seed).unwrap();
            for q in &pts {
                prop_assert!(q.distance(c.center) <= c.radius * (1.0 + 1e-9) + 1e-12);
            }
            let bf = brute_force(&pts);
            prop_assert!((c.radius - bf).abs() <= 1e-7 * bf.max(1.0));
        }

        #[test]
        fn non_support_points_are_irrelevant(
            raw in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 2..9),
        ) {
            let pts: Vec<_> = raw.iter().map(|&(x, y)| p(x, y)).collect();
            let c = minimum_enclosing_circle(&pts).unwrap();
            for i in 0..pts.len() {
                if (pts[i].distance(c.center) - c.radius).abs() > 1e-6 * c.radius.max(1.0) {
                    let mut rest = pts.clone();
                    rest.remove(i);
                    let c2 = minimum_enclosing_circle(&rest).unwrap();
                    prop_assert!((c2.radius - c.radius).abs() <= 1e-9 * c.radius.max(1.0));
                    prop_assert!(c2.center.distance(c.center) <= 1e-7 * c.radius.max(1.0));
                }
            }
        }
    }
}
