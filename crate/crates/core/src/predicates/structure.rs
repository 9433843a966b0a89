use super::{Certificate, PredicateConfig, SampleCounts, SampleSet, Witness, WitnessLog};
use crate::geometry::{Point2, PointClass};
use crate::normals::direction_net;
use crate::shapes::Shape;
use crate::{Result, Scalar};

const MAX_PAIR_POINTS: usize = 96;

fn thin<T: Scalar>(pts: &[Point2<T>], cap: usize) -> Vec<Point2<T>> {
    if pts.len() <= cap {
        return pts.to_vec();
    }
    (0..cap).map(|i| pts[i * pts.len() / cap]).collect()
}

/// Midpoint convexity. Polygons, arc-polygons and singletons are convex by
/// construction; other shapes are tested on pairs of samples, failing when a
/// midpoint is farther than `tol.pred` from the set.
pub fn is_convex<T: Scalar>(shape: &Shape<T>, cfg: &PredicateConfig<T>) -> Result<Certificate<T>> {
    let tol = cfg.tolerances(shape);
    let mut log = WitnessLog::new(tol.pred);
    if matches!(
        shape,
        Shape::ConvexPolygon(_) | Shape::ArcPolygon(_) | Shape::Singleton(_)
    ) {
        return Ok(log.finish("convex", None, SampleCounts::default(), &tol));
    }
    let samples = SampleSet::new(shape, cfg, &tol);
    let pts = thin(samples.all(), MAX_PAIR_POINTS);
    for (i, &x) in pts.iter().enumerate() {
        for &y in &pts[i + 1..] {
            let m = x.midpoint(y);
            let d = shape.project(m, &tol).distance;
            log.offer(Witness {
                a: x,
                zeta: (y - x).normalized().unwrap_or(Point2::origin()),
                x: y,
                violation: d,
            });
        }
    }
    let mut counts = samples.counts();
    counts.boundary = pts.len().min(counts.boundary);
    Ok(log.finish("convex", None, counts, &tol))
}

/// Uniform cone condition: for each boundary sample `a` some direction `v`
/// and radius `ε` with `a' + t·w ∈ A` for sampled `a' ∈ A ∩ B(a; ε)`,
/// `t ∈ [0, ε)` and `w ∈ B(v; ε)`. Lengths are in units of the diameter.
pub fn epi_lipschitz_sampled<T: Scalar>(
    shape: &Shape<T>,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let scale = tol.scale;
    let mut log = WitnessLog::new(tol.pred);
    let nets: Vec<Point2<T>> = direction_net(32);
    let eps_grid = [0.2, 0.1, 0.05, 0.02];
    let boundary = thin(&samples.boundary, 48);
    for &a in &boundary {
        let mut found = false;
        'search: for &e in &eps_grid {
            let eps = T::lit(e);
            let len = eps * scale;
            let near: Vec<Point2<T>> = thin(
                &samples
                    .all()
                    .iter()
                    .copied()
                    .filter(|q| q.distance(a) < len)
                    .collect::<Vec<_>>(),
                12,
            );
            let ts = [0.0, 0.25, 0.5, 0.75, 0.99].map(|f| len * T::lit(f));
            for &v in &nets {
                let ws = [
                    v,
                    v * (T::one() + eps * T::lit(0.99)),
                    v * (T::one() - eps * T::lit(0.99)),
                    v + v.perp() * (eps * T::lit(0.99)),
                    v - v.perp() * (eps * T::lit(0.99)),
                ];
                let ok = near.iter().chain(std::iter::once(&a)).all(|&q| {
                    ts.iter().all(|&t| {
                        ws.iter()
                            .all(|&w| shape.membership(q + w * t, &tol) != PointClass::Outside)
                    })
                });
                if ok {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            let v = nets[0];
            let probe = a + v * (T::lit(0.01) * scale);
            log.offer(Witness {
                a,
                zeta: v,
                x: probe,
                violation: shape.project(probe, &tol).distance.max(tol.pred * T::two()),
            });
        }
    }
    let mut counts = samples.counts();
    counts.directions = nets.len();
    Ok(log.finish("epi-lipschitz", None, counts, &tol))
}

/// Analytic verdict for the supported shapes: bodies with positive area are
/// epi-Lipschitz; curves and singletons are not; clouds go through the
/// sampled cone search.
pub fn is_epi_lipschitz<T: Scalar>(
    shape: &Shape<T>,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    let tol = cfg.tolerances(shape);
    let mut log = WitnessLog::new(tol.pred);
    match shape {
        Shape::ConvexPolygon(_) | Shape::ArcPolygon(_) if shape.interior_nonempty() => {}
        Shape::PointCloud(_) => return epi_lipschitz_sampled(shape, cfg),
        _ => {
            let a = shape.boundary_samples(1)[0];
            let v = Point2::new(T::one(), T::zero());
            let step = T::lit(0.01) * tol.scale;
            let x = a + v * step;
            log.offer(Witness {
                a,
                zeta: v,
                x,
                violation: shape.project(x, &tol).distance.max(tol.pred * T::two()),
            });
        }
    }
    Ok(log.finish("epi-lipschitz", None, SampleCounts::default(), &tol))
}
