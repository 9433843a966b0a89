use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::{bounding_box, convex_hull, Point2};
use crate::shapes::Shape;
use crate::Scalar;

/// Grid-oracle verdict for ball-hull membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleVerdict {
    In,
    Out,
    Borderline,
}

/// Feasible covering-ball centers on a `grid_n × grid_n` grid over the
/// bounding box of the points inflated by `r`.
///
/// `x` is `Out` when a feasible center (within `r` of every point) is more
/// than `r + 2·cell` from `x`; `In` when every center within `r + cell` of
/// every point is within `r − 2·cell` of `x`. Farthest-center queries use the
/// convex hull of each feasible set, which gives the same maxima as scanning
/// the whole set.
#[derive(Debug, Clone)]
pub struct OracleGrid<T: Scalar> {
    r: T,
    cell: T,
    strict: Vec<Point2<T>>,
    loose: Vec<Point2<T>>,
}

impl<T: Scalar> OracleGrid<T> {
    pub fn new(points: &[Point2<T>], r: T, grid_n: usize) -> Self {
        let grid_n = grid_n.max(2);
        let (lo, hi) = bounding_box(points).expect("oracle needs points");
        let lo = lo - Point2::new(r, r);
        let hi = hi + Point2::new(r, r);
        let step = T::one() / T::lit((grid_n - 1) as f64);
        let dx = (hi.x - lo.x) * step;
        let dy = (hi.y - lo.y) * step;
        let cell = dx.max(dy);
        let rows: Vec<(Vec<_>, Vec<_>)> = (0..grid_n)
            .into_par_iter()
            .map(|i| {
                let mut strict = Vec::new();
                let mut loose = Vec::new();
                for j in 0..grid_n {
                    let c = Point2::new(lo.x + dx * T::lit(i as f64), lo.y + dy * T::lit(j as f64));
                    let m = points.iter().fold(T::zero(), |m, p| m.max(c.distance(*p)));
                    if m <= r {
                        strict.push(c);
                    }
                    if m <= r + cell {
                        loose.push(c);
                    }
                }
                (strict, loose)
            })
            .collect();
        let (strict, loose): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let reduce = |v: Vec<Vec<Point2<T>>>| {
            let all: Vec<Point2<T>> = v.into_iter().flatten().collect();
            match convex_hull(&all) {
                Ok(h) => h.vertices,
                Err(_) => all,
            }
        };
        OracleGrid {
            r,
            cell,
            strict: reduce(strict),
            loose: reduce(loose),
        }
    }

    /// Grid spacing.
    pub fn cell(&self) -> T {
        self.cell
    }

    pub fn classify(&self, x: Point2<T>) -> OracleVerdict {
        let far = |set: &[Point2<T>]| {
            set.iter()
                .fold(T::neg_infinity(), |m, c| m.max(c.distance(x)))
        };
        let two = T::two() * self.cell;
        if far(&self.strict) > self.r + two {
            OracleVerdict::Out
        } else if far(&self.loose) <= self.r - two {
            OracleVerdict::In
        } else {
            OracleVerdict::Borderline
        }
    }
}

/// One-shot grid oracle; prefer [`OracleGrid`] for many queries.
pub fn oracle_membership<T: Scalar>(
    points: &[Point2<T>],
    r: T,
    x: Point2<T>,
    grid_n: usize,
) -> OracleVerdict {
    OracleGrid::new(points, r, grid_n).classify(x)
}

/// Queries where a non-borderline oracle verdict disagrees with the
/// membership of `x` in `hull`.
pub fn oracle_contradictions<T: Scalar>(
    points: &[Point2<T>],
    hull: &Shape<T>,
    r: T,
    queries: &[Point2<T>],
    grid_n: usize,
) -> Vec<(Point2<T>, OracleVerdict)> {
    let grid = OracleGrid::new(points, r, grid_n);
    let tol = hull.tolerances();
    queries
        .iter()
        .filter_map(|&x| {
            let v = grid.classify(x);
            let member = hull.membership(x, &tol).is_member();
            match v {
                OracleVerdict::In if !member => Some((x, v)),
                OracleVerdict::Out if member => Some((x, v)),
                _ => None,
            }
        })
        .collect()
}
