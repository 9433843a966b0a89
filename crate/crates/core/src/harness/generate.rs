use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::{arc_through, ArcPolygon, BoundaryEdge, Point2, Side, Tolerances};
use crate::hulls::ball_hull;
use crate::shapes::Shape;
use crate::{Error, Result};

type P = Point2<f64>;

/// Shape family and its size parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceKind {
    Disk {
        radius: f64,
    },
    CircleCurve {
        radius: f64,
    },
    Square {
        side: f64,
    },
    RegularPolygon {
        sides: usize,
        circumradius: f64,
    },
    RandomPolygon {
        vertices: usize,
        circumradius: f64,
    },
    /// Ball hull of two points at distance `d` with arc radius `r_h`.
    Lens {
        d: f64,
        r_h: f64,
    },
    /// Ball hull at radius `r_h` of `k` points drawn in a disk of radius `0.9·r_h`.
    RandomBallHull {
        k: usize,
        r_h: f64,
    },
    PointCloud {
        count: usize,
        radius: f64,
    },
    TwoPoints {
        d: f64,
    },
    /// Evenly spaced samples of a segment.
    SegmentCloud {
        count: usize,
        length: f64,
    },
    Singleton,
}

/// One corpus entry: a shape family, the radius `r` the predicates are
/// evaluated at, and the generation seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub id: String,
    #[serde(flatten)]
    pub kind: InstanceKind,
    pub r: f64,
    pub seed: u64,
}

/// Verdicts known in closed form; `None` where the family does not fix them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundTruth {
    pub strongly_convex: Option<bool>,
    pub spherically_supported: Option<bool>,
    pub interior_nonempty: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub shape: Shape<f64>,
    pub truth: GroundTruth,
}

fn bad(m: &str) -> Error {
    Error::InfeasibleSpec(m.to_string())
}

fn positive(v: f64, what: &str) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(bad(&format!("{what} must be positive")))
    }
}

fn in_disk(rng: &mut ChaCha8Rng, center: P, radius: f64) -> P {
    let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let s: f64 = rng.gen();
    center + P::from_angle(th) * (radius * s.sqrt())
}

fn lens(a: P, b: P, r: f64) -> Result<Shape<f64>> {
    let g = Tolerances::<f64>::default().geom;
    let lo = arc_through(a, b, r, Side::Left, g)?;
    let up = arc_through(b, a, r, Side::Left, g)?;
    Ok(Shape::arc_polygon(ArcPolygon::from_edges(vec![
        BoundaryEdge::Arc(lo),
        BoundaryEdge::Arc(up),
    ])?))
}

/// Builds the shape of `spec` deterministically from its seed. Each seed
/// also picks a small translation so that repeated templates differ.
pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    positive(spec.r, "r")?;
    let r = spec.r;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xB0A1);
    let o = P::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let rot: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let (shape, sc, sph) = match &spec.kind {
        InstanceKind::Disk { radius } => {
            positive(*radius, "radius")?;
            (
                Shape::disk(o, *radius)?,
                Some(*radius <= r),
                Some(*radius <= r),
            )
        }
        InstanceKind::CircleCurve { radius } => {
            positive(*radius, "radius")?;
            (
                Shape::circle_curve(o, *radius)?,
                Some(false),
                Some(*radius <= r),
            )
        }
        InstanceKind::Square { side } => {
            positive(*side, "side")?;
            let h = side / 2.0;
            let v: Vec<P> = (0..4)
                .map(|k| {
                    o + P::from_angle(rot + std::f64::consts::FRAC_PI_2 * k as f64)
                        * (h * 2f64.sqrt())
                })
                .collect();
            (Shape::convex_polygon(&v)?, Some(false), Some(false))
        }
        InstanceKind::RegularPolygon {
            sides,
            circumradius,
        } => {
            positive(*circumradius, "circumradius")?;
            if *sides < 3 {
                return Err(bad("regular polygon needs three sides"));
            }
            let v: Vec<P> = (0..*sides)
                .map(|k| {
                    o + P::from_angle(rot + std::f64::consts::TAU * k as f64 / *sides as f64)
                        * *circumradius
                })
                .collect();
            (Shape::convex_polygon(&v)?, Some(false), Some(false))
        }
        InstanceKind::RandomPolygon {
            vertices,
            circumradius,
        } => {
            positive(*circumradius, "circumradius")?;
            if *vertices < 3 || *vertices > 32 {
                return Err(bad("random polygon needs 3 to 32 vertices"));
            }
            let gap = 0.5 * std::f64::consts::TAU / *vertices as f64;
            let angles = loop {
                let mut a: Vec<f64> = (0..*vertices)
                    .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                    .collect();
                a.sort_by(|x, y| x.partial_cmp(y).unwrap());
                let ok = a.windows(2).all(|w| w[1] - w[0] >= gap)
                    && a[0] + std::f64::consts::TAU - a[a.len() - 1] >= gap;
                if ok {
                    break a;
                }
            };
            let v: Vec<P> = angles
                .iter()
                .map(|&t| o + P::from_angle(t) * *circumradius)
                .collect();
            (Shape::convex_polygon(&v)?, Some(false), Some(false))
        }
        InstanceKind::Lens { d, r_h } => {
            positive(*d, "d")?;
            positive(*r_h, "r_h")?;
            if *d >= 2.0 * r_h {
                return Err(bad("lens needs d < 2 r_h"));
            }
            let u = P::from_angle(rot) * (d / 2.0);
            (lens(o - u, o + u, *r_h)?, Some(*r_h <= r), Some(*r_h <= r))
        }
        InstanceKind::RandomBallHull { k, r_h } => {
            positive(*r_h, "r_h")?;
            if *k < 2 {
                return Err(bad("random ball hull needs two points"));
            }
            let pts: Vec<P> = (0..*k).map(|_| in_disk(&mut rng, o, 0.9 * r_h)).collect();
            let tol = Shape::PointCloud(pts.clone()).tolerances();
            let h = ball_hull(&pts, *r_h, &tol)?;
            let arcs = matches!(&h.shape, Shape::ArcPolygon(p) if !p.edges().is_empty());
            let truth = if *r_h <= r {
                Some(true)
            } else if arcs {
                Some(false)
            } else {
                None
            };
            (h.shape, truth, truth)
        }
        InstanceKind::PointCloud { count, radius } => {
            positive(*radius, "radius")?;
            if *count < 2 {
                return Err(bad("point cloud needs two points"));
            }
            let pts: Vec<P> = (0..*count).map(|_| in_disk(&mut rng, o, *radius)).collect();
            (Shape::point_cloud(pts)?, Some(false), None)
        }
        InstanceKind::TwoPoints { d } => {
            positive(*d, "d")?;
            let u = P::from_angle(rot) * (d / 2.0);
            (
                Shape::point_cloud(vec![o - u, o + u])?,
                Some(false),
                Some(*d <= 2.0 * r),
            )
        }
        InstanceKind::SegmentCloud { count, length } => {
            positive(*length, "length")?;
            if *count < 3 {
                return Err(bad("segment cloud needs three points"));
            }
            let u = P::from_angle(rot) * *length;
            let a = o - u * 0.5;
            let pts: Vec<P> = (0..*count)
                .map(|i| a + u * (i as f64 / (*count - 1) as f64))
                .collect();
            (Shape::point_cloud(pts)?, Some(false), Some(false))
        }
        InstanceKind::Singleton => (Shape::singleton(o)?, Some(true), Some(true)),
    };
    let truth = GroundTruth {
        strongly_convex: sc,
        spherically_supported: sph,
        interior_nonempty: shape.interior_nonempty(),
    };
    Ok(Instance {
        spec: spec.clone(),
        shape,
        truth,
    })
}

fn templates() -> Vec<(&'static str, InstanceKind, f64)> {
    use InstanceKind::*;
    vec![
        ("disk-1-r1", Disk { radius: 1.0 }, 1.0),
        ("disk-1-r0.5", Disk { radius: 1.0 }, 0.5),
        ("disk-0.5-r2", Disk { radius: 0.5 }, 2.0),
        ("circle-1-r1", CircleCurve { radius: 1.0 }, 1.0),
        ("circle-1-r0.5", CircleCurve { radius: 1.0 }, 0.5),
        ("square-1-r2", Square { side: 1.0 }, 2.0),
        ("square-1-r0.5", Square { side: 1.0 }, 0.5),
        (
            "hexagon-1-r10",
            RegularPolygon {
                sides: 6,
                circumradius: 1.0,
            },
            10.0,
        ),
        (
            "polygon7-1-r1",
            RandomPolygon {
                vertices: 7,
                circumradius: 1.0,
            },
            1.0,
        ),
        ("lens-1-1-r1", Lens { d: 1.0, r_h: 1.0 }, 1.0),
        ("lens-1-1-r0.5", Lens { d: 1.0, r_h: 1.0 }, 0.5),
        ("bh6-1-r2", RandomBallHull { k: 6, r_h: 1.0 }, 2.0),
        ("bh8-2-r1", RandomBallHull { k: 8, r_h: 2.0 }, 1.0),
        ("bh5-0.5-r0.5", RandomBallHull { k: 5, r_h: 0.5 }, 0.5),
        ("bh10-10-r10", RandomBallHull { k: 10, r_h: 10.0 }, 10.0),
        (
            "cloud20-1-r1",
            PointCloud {
                count: 20,
                radius: 1.0,
            },
            1.0,
        ),
        ("two-1-r1", TwoPoints { d: 1.0 }, 1.0),
        (
            "segment21-1-r10",
            SegmentCloud {
                count: 21,
                length: 1.0,
            },
            10.0,
        ),
        ("singleton-r1", Singleton, 1.0),
    ]
}

/// Every template at seeds `0..5`: 95 instances over all families with
/// `r ∈ {0.5, 1, 2, 10}`, sorted by id.
pub fn default_corpus() -> Vec<InstanceSpec> {
    let mut out = Vec::new();
    for (name, kind, r) in templates() {
        for seed in 0..5u64 {
            out.push(InstanceSpec {
                id: format!("{name}-s{seed}"),
                kind: kind.clone(),
                r,
                seed,
            });
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_generation() {
        for spec in default_corpus() {
            let a = generate(&spec).unwrap();
            let b = generate(&spec).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn circle_curve_truth() {
        let spec = InstanceSpec {
            id: "c".into(),
            kind: InstanceKind::CircleCurve { radius: 1.0 },
            r: 1.0,
            seed: 0,
        };
        let i = generate(&spec).unwrap();
        assert!(matches!(i.shape, Shape::CircleCurve(_)));
        assert_eq!(i.truth.spherically_supported, Some(true));
        assert_eq!(i.truth.strongly_convex, Some(false));
    }

    #[test]
    fn infeasible_specs() {
        let spec = InstanceSpec {
            id: "l".into(),
            kind: InstanceKind::Lens { d: 3.0, r_h: 1.0 },
            r: 1.0,
            seed: 0,
        };
        assert!(matches!(generate(&spec), Err(Error::InfeasibleSpec(_))));
    }

    #[test]
    fn corpus_spans_kinds() {
        let c = default_corpus();
        assert!(c.len() >= 60);
        let mut rs: Vec<f64> = c.iter().map(|s| s.r).collect();
        rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        rs.dedup();
        assert_eq!(rs, vec![0.5, 1.0, 2.0, 10.0]);
    }
}
