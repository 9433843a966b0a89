use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_radius, Certificate, PredicateConfig, SampleSet, Witness, WitnessLog};
use crate::geometry::{Point2, Tolerances};
use crate::normals::{normal_cone, ConeKind, NormalCone};
use crate::shapes::Shape;
use crate::{Error, Result, Scalar};

const PAIR_POOL: usize = 48;

/// Boundary samples with their normal cones.
fn coned<T: Scalar>(
    shape: &Shape<T>,
    pts: &[Point2<T>],
    tol: &Tolerances<T>,
) -> Result<Vec<NormalCone<T>>> {
    pts.iter().map(|&a| normal_cone(shape, a, tol)).collect()
}

fn pool<T: Scalar>(shape: &Shape<T>, n: usize) -> Vec<Point2<T>> {
    shape.boundary_samples(n.min(PAIR_POOL))
}

/// Intersection `a − tζ = b − sη` of two negative normal rays.
fn ray_meet<T: Scalar>(
    a: Point2<T>,
    z: Point2<T>,
    b: Point2<T>,
    e: Point2<T>,
) -> Option<(Point2<T>, T, T)> {
    let den = z.cross(e);
    if den.abs() <= T::lit(1e-9) {
        return None;
    }
    // a − tz = b − se  ⇔  t z − s e = a − b
    let d = a - b;
    let t = d.cross(e) / den;
    let s = d.cross(z) / den;
    Some((a - z * t, t, s))
}

/// Sample points of `E_r(A)`: uniform draws in the bounding box inflated by
/// `max(3r, 2·diam)`, plus constructed points where two negative normal
/// segments longer than `r` can meet (intersections of negative generator
/// rays, and far points of perpendicular bisectors of boundary pairs).
/// Fails with `EmptySampleRegion` when none lands in `E_r(A)`.
pub fn er_candidates<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
    tol: &Tolerances<T>,
) -> Result<Vec<Point2<T>>> {
    let diam = shape.diameter();
    let (lo, hi) = shape.bounding_box();
    let pad = (T::lit(3.0) * r).max(T::two() * diam);
    let lo = lo - Point2::new(pad, pad);
    let hi = hi + Point2::new(pad, pad);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x45_72_53_61);
    let mut out: Vec<Point2<T>> = Vec::new();
    for _ in 0..cfg.n_er {
        let u: f64 = rng.gen();
        let v: f64 = rng.gen();
        out.push(Point2::new(
            lo.x + (hi.x - lo.x) * T::lit(u),
            lo.y + (hi.y - lo.y) * T::lit(v),
        ));
    }

    let pts = pool(shape, cfg.n_boundary);
    let cones = coned(shape, &pts, tol)?;
    let min_len = r + tol.pred;
    let far = r.max(diam);
    let reach = [
        (T::lit(1.5) * r).max(T::lit(3.0) * diam),
        T::lit(10.0) * far,
        T::lit(100.0) * far,
    ];
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (a, b) = (pts[i], pts[j]);
            if a.distance(b) < tol.sep {
                continue;
            }
            let (ca, cb) = (&cones[i], &cones[j]);
            if ca.kind != ConeKind::All && cb.kind != ConeKind::All {
                for z in ca.test_directions() {
                    for e in cb.test_directions() {
                        if let Some((x, t, s)) = ray_meet(a, z, b, e) {
                            if t > min_len && s > min_len {
                                out.push(x);
                            }
                        }
                    }
                }
            }
            if let Some(u) = (b - a).perp().normalized() {
                let m = a.midpoint(b);
                for &d in &reach {
                    out.push(m + u * d);
                    out.push(m - u * d);
                }
            }
        }
    }
    out.retain(|&x| shape.in_e_r(x, r, tol));
    if out.is_empty() {
        return Err(Error::EmptySampleRegion);
    }
    Ok(out)
}

fn sep_distinct<T: Scalar>(pts: &[Point2<T>], sep: T) -> Option<(Point2<T>, Point2<T>)> {
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if p.distance(*q) >= sep {
                return Some((*p, *q));
            }
        }
    }
    None
}

/// No point of the sampled `E_r(A)` is the endpoint of two negative normal
/// segments longer than `r` at `τ_sep`-distinct boundary samples. Segment
/// membership allows `tol.angle()` of angular slack on the normal cone.
pub fn is_negatively_s_convex<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let cones = coned(shape, &samples.boundary, &tol)?;
    let xs = er_candidates(shape, r, cfg, &tol)?;
    let mut log = WitnessLog::new(tol.pred);
    let ang = tol.angle();
    for &x in &xs {
        let mut hits: Vec<(Point2<T>, T)> = Vec::new();
        for cone in &cones {
            let a = cone.apex;
            let len = x.distance(a);
            if !(len > r + tol.pred) {
                continue;
            }
            if let Some(z) = (a - x).normalized() {
                if cone.contains(z, ang) {
                    hits.push((a, len));
                }
            }
        }
        let apexes: Vec<Point2<T>> = hits.iter().map(|h| h.0).collect();
        if let Some((a, b)) = sep_distinct(&apexes, tol.sep) {
            let shortest = x.distance(a).min(x.distance(b));
            log.offer(Witness {
                a,
                zeta: (a - x).normalized().unwrap(),
                x,
                violation: shortest - r,
            });
        }
    }
    let mut counts = samples.counts();
    counts.er = xs.len();
    Ok(log.finish("negatively-convex", Some(r), counts, &tol))
}

/// `far_A(x)` is one cluster at every sampled `x ∈ E_r(A)`.
pub fn far_singleton_on_er<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let xs = er_candidates(shape, r, cfg, &tol)?;
    let mut log = WitnessLog::new(tol.pred);
    for &x in &xs {
        let f = shape.farthest(x, &tol);
        if f.far_points.len() > 1 {
            let a = f.far_points[0];
            log.offer(Witness {
                a,
                zeta: (a - x).normalized().unwrap_or(Point2::origin()),
                x,
                violation: a.distance(f.far_points[1]),
            });
        }
    }
    let counts = super::SampleCounts {
        er: xs.len(),
        ..Default::default()
    };
    Ok(log.finish("far-singleton", Some(r), counts, &tol))
}

/// Two-way check of `E_r(A) = ⋃ {a − tζ : t > r}` over unit normals at
/// boundary points. `⊇`: `a − tζ ∈ E_r(A)` for generators `ζ` and
/// `t ∈ {r + 2δ, 2r, 5r}` (`r + 2δ` clears the conservative band of the
/// `E_r` test). `⊆`: every far point `a` of a sampled `x ∈ E_r(A)` has
/// `(a − x)/‖a − x‖` in its normal cone and `‖x − a‖ > r`.
pub fn er_ray_representation_check<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let mut log = WitnessLog::new(tol.pred);
    let mut directions = 0;
    let ts = [r + T::two() * tol.pred, T::two() * r, T::lit(5.0) * r];
    for &a in &samples.boundary {
        let cone = normal_cone(shape, a, &tol)?;
        for z in cone.test_directions() {
            directions += 1;
            for &t in &ts {
                let x = a - z * t;
                let d = shape.farthest(x, &tol).distance;
                if !shape.in_e_r(x, r, &tol) {
                    log.offer(Witness {
                        a,
                        zeta: z,
                        x,
                        violation: (r + tol.pred - d).max(tol.pred * T::two()),
                    });
                }
            }
        }
    }
    let xs = er_candidates(shape, r, cfg, &tol)?;
    for &x in &xs {
        let f = shape.farthest(x, &tol);
        for &a in &f.far_points {
            let len = x.distance(a);
            let cone = normal_cone(shape, a, &tol)?;
            let z = (a - x).normalized().unwrap_or(Point2::origin());
            let off = cone.angular_distance(z);
            // near-ties admitted by clustering may sit up to this far off their cone
            let slack = (T::two() * (f.distance - len).max(T::zero()) / len).sqrt();
            if off > tol.angle() + slack || !(len > r) {
                log.offer(Witness {
                    a,
                    zeta: z,
                    x,
                    violation: (off * len).max(r - len).max(tol.pred * T::two()),
                });
            }
        }
    }
    let mut counts = samples.counts();
    counts.directions = directions;
    counts.er = xs.len();
    Ok(log.finish("er-rays", Some(r), counts, &tol))
}
