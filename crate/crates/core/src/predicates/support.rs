use super::{check_radius, Certificate, PredicateConfig, SampleSet, Witness, WitnessLog};
use crate::geometry::{halfplane_directions, Point2, Tolerances};
use crate::normals::{normal_cone, proximal_probe, NormalCone};
use crate::shapes::Shape;
use crate::{Result, Scalar};

/// Intersects the cone's directions with `⟨ζ, x − a⟩ ≤ coef·‖x − a‖² + δ`
/// sample by sample. On emptiness returns the witness built from the last
/// feasible direction and its worst sample.
fn feasible_or_witness<T: Scalar>(
    cone: &NormalCone<T>,
    samples: &[Point2<T>],
    coef: T,
    tol: &Tolerances<T>,
) -> std::result::Result<Vec<Point2<T>>, Witness<T>> {
    let a = cone.apex;
    let mut set = cone.angular_set();
    let mut last = set.clone();
    for &x in samples {
        let w = x - a;
        let h = halfplane_directions(w, coef * w.norm_sq() + tol.pred);
        set = set.intersect(&h, tol.angle());
        if set.is_empty() {
            let zeta = last
                .midpoint()
                .unwrap_or_else(|| Point2::new(T::one(), T::zero()));
            let (x, violation) = samples
                .iter()
                .map(|&y| {
                    let v = y - a;
                    (y, zeta.dot(v) - coef * v.norm_sq())
                })
                .fold(
                    (x, T::neg_infinity()),
                    |best, c| if c.1 > best.1 { c } else { best },
                );
            return Err(Witness {
                a,
                zeta,
                x,
                violation,
            });
        }
        last = set.clone();
    }
    Ok(set.representatives())
}

/// Some unit normal `ζ_a` with `A ⊂ B̄(a − rζ_a; r)` at every boundary
/// sample, decided by angular-interval intersection.
pub fn is_spherically_supported<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let coef = -T::one() / (T::two() * r);
    let mut log = WitnessLog::new(tol.pred);
    for &a in &samples.boundary {
        let cone = normal_cone(shape, a, &tol)?;
        if let Err(w) = feasible_or_witness(&cone, samples.all(), coef, &tol) {
            log.offer(w);
        }
    }
    Ok(log.finish("spherically-supported", Some(r), samples.counts(), &tol))
}

/// Some unit normal at every boundary sample whose open `r`-ball misses the
/// shape: the `+1/(2r)` inequality on samples, confirmed by an exact probe.
pub fn has_exterior_sphere<T: Scalar>(
    shape: &Shape<T>,
    r: T,
    cfg: &PredicateConfig<T>,
) -> Result<Certificate<T>> {
    check_radius(r)?;
    let tol = cfg.tolerances(shape);
    let samples = SampleSet::new(shape, cfg, &tol);
    let coef = T::one() / (T::two() * r);
    let mut log = WitnessLog::new(tol.pred);
    for &a in &samples.boundary {
        let cone = normal_cone(shape, a, &tol)?;
        match feasible_or_witness(&cone, samples.all(), coef, &tol) {
            Err(w) => {
                log.offer(w);
            }
            Ok(reps) => {
                let mut ok = false;
                for z in &reps {
                    if proximal_probe(shape, a, *z, r, &tol)? {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    let z = reps[0];
                    let c = a + z * r;
                    let pr = shape.project(c, &tol);
                    log.offer(Witness {
                        a,
                        zeta: z,
                        x: pr.proj_points[0],
                        violation: r - pr.distance,
                    });
                }
            }
        }
    }
    Ok(log.finish("exterior-sphere", Some(r), samples.counts(), &tol))
}
