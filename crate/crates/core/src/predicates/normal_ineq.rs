use super::{check_radius, Certificate, PredicateConfig, SampleSet, Witness, WitnessLog};
use crate::geometry::{Point2, Tolerances};
use crate::normals::normal_cone;
use crate::shapes::Shape;
use crate::{Error, Result, Scalar};

/// `max ⟨ζ, x − a⟩ − sign·‖x − a‖²/(2r)` over the whole cone at every
/// boundary sample against every sample `x`.
fn cone_inequality<T: Scalar>(
    id: &str,
    shape: &Shape<T>,
    r: T,
    sign: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let mut log = WitnessLog::new(tol.pred);
    let mut directions = 0;
    for &a in &samples.boundary {
        let cone = normal_cone(shape, a, &tol)?;
        directions += cone.test_directions().len();
        for &x in samples.all() {
            let w = x - a;
            let lhs = cone.max_inner(w);
            let rhs = sign * w.norm_sq() / (T::two() * r);
            log.offer(Witness {
                a,
                zeta: cone.argmax_inner(w),
                x,
                violation: lhs - rhs,
            });
        }
    }
    let mut counts = samples.counts();
    counts.directions = directions;
    Ok(log.finish(id, Some(r), counts, &tol))
}

/// `⟨ζ, x − a⟩ ≤ −‖x − a‖²/(2r)` for every unit proximal normal `ζ` at every
/// boundary point and every `x ∈ A`. The maximum over each cone is taken
/// exactly.
pub fn is_strongly_convex<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    cone_inequality("strongly-convex", shape, r, -T::one(), cfg)
}

/// `⟨ζ, x − a⟩ ≤ ‖x − a‖²/(2r)` for every unit proximal normal.
pub fn is_prox_regular<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    cone_inequality("prox-regular", shape, r, T::one(), cfg)
}

fn unit<T: Scalar>(zeta: Point2<T>) -> Result<Point2<T>> {
    zeta.normalized()
        .ok_or_else(|| Error::InvalidParameter("zero direction".into()))
}

/// Every sample lies in `B̄(a − rζ/‖ζ‖; r)` up to `tol.pred`. Returns the
/// worst offending sample and its excess when the check fails.
pub fn ball_cover_check<T: Scalar>(
    a: Point2<T>,
    zeta: Point2<T>,
    r: T,
    samples: &[Point2<T>],
    tol: &Tolerances<T>,
) -> Result<Option<(Point2<T>, T)>> {
    let c = a - unit(zeta)? * r;
    let mut worst: Option<(Point2<T>, T)> = None;
    for &x in samples {
        let excess = x.distance(c) - r;
        if excess > tol.pred && worst.is_none_or(|(_, e)| excess > e) {
            worst = Some((x, excess));
        }
    }
    Ok(worst)
}

/// `a ∈ far_A(a − rζ/‖ζ‖)`: the farthest distance from the ball center is
/// at most `r + tol.pred` and `a` is within `tol.cluster` of attaining it.
/// Returns the farthest point and the excess when the check fails.
pub fn far_point_check<T: Scalar>(
    shape: &Shape<T>,
    a: Point2<T>,
    zeta: Point2<T>,
    r: T,
    tol: &Tolerances<T>,
) -> Result<Option<(Point2<T>, T)>> {
    let x0 = a - unit(zeta)? * r;
    let f = shape.farthest(x0, tol);
    if f.distance <= r + tol.pred && x0.distance(a) >= f.distance - tol.cluster {
        Ok(None)
    } else {
        Ok(Some((f.far_points[0], f.distance - r)))
    }
}

fn over_generators<T: Scalar>(
    id: &str,
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
    mut check: impl FnMut(
        Point2<T>,
        Point2<T>,
        &SampleSet<T>,
        &Tolerances<T>,
    ) -> Result<Option<(Point2<T>, T)>>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let mut log = WitnessLog::new(tol.pred);
    let mut directions = 0;
    for &a in &samples.boundary {
        let cone = normal_cone(shape, a, &tol)?;
        for zeta in cone.test_directions() {
            directions += 1;
            if let Some((x, violation)) = check(a, zeta, &samples, &tol)? {
                log.offer(Witness {
                    a,
                    zeta,
                    x,
                    violation,
                });
            }
        }
    }
    let mut counts = samples.counts();
    counts.directions = directions;
    Ok(log.finish(id, Some(r), counts, &tol))
}

/// `A ⊂ B̄(a − rζ; r)` for every boundary sample and every cone generator.
pub fn is_ball_covered<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    over_generators("ball-cover", shape, r, cfg, |a, z, s, t| {
        ball_cover_check(a, z, r, s.all(), t)
    })
}

/// `a ∈ far_A(a − rζ)` for every boundary sample and every cone generator.
pub fn has_far_point_property<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    over_generators("far-point", shape, r, cfg, |a, z, _, t| {
        far_point_check(shape, a, z, r, t)
    })
}
