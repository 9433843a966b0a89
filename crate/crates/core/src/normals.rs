//! Normal cones of the supported shapes and sphere-realization tests on
//! normal directions.

use serde::{Deserialize, Serialize};

use crate::geometry::{
    angular_distance_to_arc, halfplane_directions, AngularSet, BoundaryEdge, Point2, PointClass,
    Tolerances,
};
use crate::shapes::Shape;
use crate::{Error, Result, Scalar};

/// Shape of a planar normal cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeKind {
    /// One direction (smooth boundary point).
    Ray,
    /// Closed wedge from `generators[0]` CCW to `generators[1]`.
    Wedge,
    /// A direction and its opposite.
    Line,
    /// Every direction.
    All,
}

/// Unit generators of the proximal normal cone at `apex`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct NormalCone<T: Scalar> {
    pub apex: Point2<T>,
    pub kind: ConeKind,
    pub generators: Vec<Point2<T>>,
}

impl<T: Scalar> NormalCone<T> {
    fn ray(apex: Point2<T>, z: Point2<T>) -> Self {
        NormalCone {
            apex,
            kind: ConeKind::Ray,
            generators: vec![z],
        }
    }

    fn all(apex: Point2<T>) -> Self {
        NormalCone {
            apex,
            kind: ConeKind::All,
            generators: Vec::new(),
        }
    }

    /// A wedge from `z1` CCW to `z2`, collapsed to a ray when the two
    /// directions agree within `ang`.
    fn wedge(apex: Point2<T>, z1: Point2<T>, z2: Point2<T>, ang: T) -> Self {
        let width = T::wrap_angle(z2.angle() - z1.angle());
        if width <= ang || width >= T::TAU() - ang {
            Self::ray(apex, z1)
        } else {
            NormalCone {
                apex,
                kind: ConeKind::Wedge,
                generators: vec![z1, z2],
            }
        }
    }

    /// CCW aperture of a wedge; zero for rays.
    pub fn aperture(&self) -> T {
        match self.kind {
            ConeKind::Wedge => {
                T::wrap_angle(self.generators[1].angle() - self.generators[0].angle())
            }
            ConeKind::Ray => T::zero(),
            ConeKind::Line | ConeKind::All => T::PI(),
        }
    }

    /// Unit directions of the cone as a closed angular set.
    pub fn angular_set(&self) -> AngularSet<T> {
        match self.kind {
            ConeKind::Ray => AngularSet::point(self.generators[0].angle()),
            ConeKind::Wedge => AngularSet::arc(self.generators[0].angle(), self.aperture()),
            ConeKind::Line => {
                let th = self.generators[0].angle();
                let mut iv = AngularSet::point(th).intervals().to_vec();
                iv.extend_from_slice(AngularSet::point(th + T::PI()).intervals());
                AngularSet::from_intervals(iv)
            }
            ConeKind::All => AngularSet::full(),
        }
    }

    /// Angle between direction `dir` and the nearest unit vector of the cone.
    pub fn angular_distance(&self, dir: Point2<T>) -> T {
        let th = dir.angle();
        match self.kind {
            ConeKind::Ray => angular_distance_to_arc(th, self.generators[0].angle(), T::zero()),
            ConeKind::Wedge => {
                angular_distance_to_arc(th, self.generators[0].angle(), self.aperture())
            }
            ConeKind::Line => {
                let g = self.generators[0].angle();
                angular_distance_to_arc(th, g, T::zero()).min(angular_distance_to_arc(
                    th,
                    g + T::PI(),
                    T::zero(),
                ))
            }
            ConeKind::All => T::zero(),
        }
    }

    pub fn contains(&self, dir: Point2<T>, ang: T) -> bool {
        self.angular_distance(dir) <= ang
    }

    /// `max ⟨ζ, w⟩` over unit `ζ` in the cone.
    pub fn max_inner(&self, w: Point2<T>) -> T {
        let m = w.norm();
        if m <= T::zero() {
            return T::zero();
        }
        m * self.angular_distance(w).min(T::PI()).cos()
    }

    /// Unit `ζ` in the cone attaining [`max_inner`](Self::max_inner).
    pub fn argmax_inner(&self, w: Point2<T>) -> Point2<T> {
        if let Some(u) = w.normalized() {
            if self.contains(u, T::zero()) {
                return u;
            }
        }
        let dirs = self.test_directions();
        let mut best = dirs[0];
        for d in dirs {
            if d.dot(w) > best.dot(w) {
                best = d;
            }
        }
        best
    }

    /// Finite directions spanning the cone: extreme rays and the bisector
    /// for wedges, both rays for lines, a 64-direction net for `All`.
    pub fn test_directions(&self) -> Vec<Point2<T>> {
        match self.kind {
            ConeKind::Ray => self.generators.clone(),
            ConeKind::Wedge => {
                let g0 = self.generators[0];
                let mid = Point2::from_angle(g0.angle() + self.aperture() * T::half());
                vec![g0, mid, self.generators[1]]
            }
            ConeKind::Line => vec![self.generators[0], -self.generators[0]],
            ConeKind::All => direction_net(64),
        }
    }
}

/// `n` unit directions evenly spaced from angle 0.
pub fn direction_net<T: Scalar>(n: usize) -> Vec<Point2<T>> {
    (0..n)
        .map(|k| Point2::from_angle(T::TAU() * T::lit(k as f64) / T::lit(n as f64)))
        .collect()
}

fn require_boundary<T: Scalar>(shape: &Shape<T>, a: Point2<T>, tol: &Tolerances<T>) -> Result<()> {
    if shape.membership(a, tol) == PointClass::Boundary {
        Ok(())
    } else {
        Err(Error::NotBoundaryPoint)
    }
}

fn edge_cone<T: Scalar>(edges: &[BoundaryEdge<T>], a: Point2<T>, band: T, ang: T) -> NormalCone<T> {
    let n = edges.len();
    for (i, e) in edges.iter().enumerate() {
        if a.distance(e.start()) <= band {
            let prev = &edges[(i + n - 1) % n];
            let v = e.start();
            return NormalCone::wedge(a, prev.normal_at(v), e.normal_at(v), ang);
        }
    }
    let span = T::lit(1e-12);
    let best = edges
        .iter()
        .min_by(|x, y| {
            x.distance_to(a, span)
                .partial_cmp(&y.distance_to(a, span))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("arc-polygon has edges");
    NormalCone::ray(a, best.normal_at(best.closest_point(a, span)))
}

/// Proximal normal cone of `shape` at a boundary point `a`.
///
/// Convex shapes: edge interiors give a ray, corners a closed wedge from the
/// incoming to the outgoing edge normal. Circle curves give the radial line.
/// Singletons and cloud members give every direction.
pub fn normal_cone<T: Scalar>(
    shape: &Shape<T>,
    a: Point2<T>,
    tol: &Tolerances<T>,
) -> Result<NormalCone<T>> {
    require_boundary(shape, a, tol)?;
    let band = tol.band();
    let ang = tol.angle();
    Ok(match shape {
        Shape::Singleton(_) | Shape::PointCloud(_) => NormalCone::all(a),
        Shape::CircleCurve(c) => {
            let z = (a - c.center)
                .normalized()
                .unwrap_or_else(|| Point2::new(T::one(), T::zero()));
            NormalCone {
                apex: a,
                kind: ConeKind::Line,
                generators: vec![z, -z],
            }
        }
        Shape::ConvexPolygon(p) => {
            let edges: Vec<BoundaryEdge<T>> = p
                .edges()
                .map(|(s, e)| BoundaryEdge::Segment { start: s, end: e })
                .collect();
            edge_cone(&edges, a, band, ang)
        }
        Shape::ArcPolygon(poly) => match poly.full_circle() {
            Some(c) => NormalCone::ray(
                a,
                (a - c.center)
                    .normalized()
                    .unwrap_or_else(|| Point2::new(T::one(), T::zero())),
            ),
            None => edge_cone(poly.edges(), a, band, ang),
        },
    })
}

/// True iff the open ball `B(a + tζ; t)` misses `shape` up to `tol.pred`,
/// i.e. `ζ` is a proximal normal realized by a `t`-sphere.
pub fn proximal_probe<T: Scalar>(
    shape: &Shape<T>,
    a: Point2<T>,
    zeta: Point2<T>,
    t: T,
    tol: &Tolerances<T>,
) -> Result<bool> {
    require_boundary(shape, a, tol)?;
    if !(t > T::zero()) {
        return Err(Error::InvalidParameter(
            "probe radius must be positive".into(),
        ));
    }
    let z = zeta
        .normalized()
        .ok_or_else(|| Error::InvalidParameter("zero direction".into()))?;
    let d = shape.project(a + z * t, tol).distance;
    Ok(d >= t - tol.pred)
}

/// Probe radii and the largest proximal constant tested.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ProbeConfig<T: Scalar> {
    pub t_list: Vec<T>,
    pub sigma_max: T,
}

impl<T: Scalar> ProbeConfig<T> {
    pub fn validate(&self) -> Result<()> {
        let ok = !self.t_list.is_empty()
            && self.t_list[0] > T::zero()
            && self.t_list.windows(2).all(|w| w[0] < w[1])
            && self.sigma_max > T::zero();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(
                "probe radii must be positive and increasing".into(),
            ))
        }
    }

    /// Radii `1/(2σ)` down to the smallest one allowed by `sigma_max`.
    pub fn for_radius(r: T, sigma_max: T) -> Self {
        let floor = T::one() / (T::two() * sigma_max);
        let mut t_list: Vec<T> = [0.25, 0.5, 1.0]
            .iter()
            .map(|f| r * T::lit(*f))
            .filter(|t| *t >= floor)
            .collect();
        if t_list.is_empty() {
            t_list.push(floor);
        }
        ProbeConfig { t_list, sigma_max }
    }
}

/// Directions `ζ` of `cone` with `⟨ζ, x − a⟩ ≤ coef·‖x − a‖² + slack` for
/// every sample `x`.
pub fn feasible_directions<T: Scalar>(
    cone: &NormalCone<T>,
    samples: &[Point2<T>],
    coef: T,
    slack: T,
    ang: T,
) -> AngularSet<T> {
    let mut set = cone.angular_set();
    for x in samples {
        let w = *x - cone.apex;
        let h = halfplane_directions(w, coef * w.norm_sq() + slack);
        set = set.intersect(&h, ang);
        if set.is_empty() {
            break;
        }
    }
    set
}

/// Unit normals `ζ` at `a` with `shape ⊂ B̄(a − rζ; r)` on `samples`, up to
/// `tol.pred`, as an angular set.
pub fn support_directions<T: Scalar>(
    shape: &Shape<T>,
    a: Point2<T>,
    r: T,
    samples: &[Point2<T>],
    tol: &Tolerances<T>,
) -> Result<AngularSet<T>> {
    let cone = normal_cone(shape, a, tol)?;
    let coef = -T::one() / (T::two() * r);
    Ok(feasible_directions(
        &cone,
        samples,
        coef,
        tol.pred,
        tol.angle(),
    ))
}

/// Unit normals `ζ` at `a` whose ball `B(a + rζ; r)` misses every sample.
pub fn exterior_directions<T: Scalar>(
    shape: &Shape<T>,
    a: Point2<T>,
    r: T,
    samples: &[Point2<T>],
    tol: &Tolerances<T>,
) -> Result<AngularSet<T>> {
    let cone = normal_cone(shape, a, tol)?;
    let coef = T::one() / (T::two() * r);
    Ok(feasible_directions(
        &cone,
        samples,
        coef,
        tol.pred,
        tol.angle(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{arc_through, ArcPolygon, Side};
    use proptest::prelude::*;

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn square() -> Shape<f64> {
        Shape::convex_polygon(&[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap()
    }

    fn lens() -> Shape<f64> {
        let a = p(-0.5, 0.0);
        let b = p(0.5, 0.0);
        let lower = arc_through(a, b, 1.0, Side::Left, 1e-9).unwrap();
        let upper = arc_through(b, a, 1.0, Side::Left, 1e-9).unwrap();
        Shape::arc_polygon(
            ArcPolygon::from_edges(vec![BoundaryEdge::Arc(lower), BoundaryEdge::Arc(upper)])
                .unwrap(),
        )
    }

    fn samples(s: &Shape<f64>, n: usize) -> Vec<Point2<f64>> {
        let mut v = s.boundary_samples(n);
        v.extend(s.inner_samples(n / 2, 1, &s.tolerances()));
        v
    }

    #[test]
    fn square_corner_wedge() {
        let s = square();
        let c = normal_cone(&s, p(0.0, 0.0), &s.tolerances()).unwrap();
        assert_eq!(c.kind, ConeKind::Wedge);
        assert!(c.generators[0].distance(p(-1.0, 0.0)) < 1e-12);
        assert!(c.generators[1].distance(p(0.0, -1.0)) < 1e-12);
        assert!((c.aperture() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(c.contains(p(-1.0, -1.0).normalized().unwrap(), 1e-9));
        assert!(!c.contains(p(1.0, 1.0).normalized().unwrap(), 1e-9));
    }

    #[test]
    fn square_edge_ray_and_interior_error() {
        let s = square();
        let t = s.tolerances();
        let c = normal_cone(&s, p(0.5, 0.0), &t).unwrap();
        assert_eq!(c.kind, ConeKind::Ray);
        assert!(c.generators[0].distance(p(0.0, -1.0)) < 1e-12);
        assert!(matches!(
            normal_cone(&s, p(0.5, 0.5), &t),
            Err(Error::NotBoundaryPoint)
        ));
    }

    #[test]
    fn lens_arc_point_radial() {
        let l = lens();
        let t = l.tolerances();
        let Shape::ArcPolygon(poly) = &l else {
            unreachable!()
        };
        let BoundaryEdge::Arc(arc) = poly.edges()[0] else {
            unreachable!()
        };
        let m = arc.midpoint();
        let c = normal_cone(&l, m, &t).unwrap();
        assert_eq!(c.kind, ConeKind::Ray);
        assert!(c.generators[0].distance((m - arc.center) * (1.0 / arc.radius)) < 1e-12);
        // outward: stepping along the normal leaves the lens
        assert_eq!(
            l.membership(m + c.generators[0] * 0.01, &t),
            PointClass::Outside
        );
        let corner = normal_cone(&l, p(-0.5, 0.0), &t).unwrap();
        assert_eq!(corner.kind, ConeKind::Wedge);
    }

    #[test]
    fn circle_curve_line_probes() {
        let c = Shape::circle_curve(p(0.0, 0.0), 1.0).unwrap();
        let t = c.tolerances();
        let cone = normal_cone(&c, p(1.0, 0.0), &t).unwrap();
        assert_eq!(cone.kind, ConeKind::Line);
        for z in cone.test_directions() {
            assert!(proximal_probe(&c, p(1.0, 0.0), z, 1.0, &t).unwrap());
        }
        assert!(proximal_probe(&c, p(1.0, 0.0), p(-1.0, 0.0), 1.0, &t).unwrap());
        assert!(!proximal_probe(&c, p(1.0, 0.0), p(-1.0, 0.0), 1.1, &t).unwrap());
    }

    #[test]
    fn disk_probes() {
        let d = Shape::disk(p(0.0, 0.0), 1.0).unwrap();
        let t = d.tolerances();
        for s in [0.1, 1.0, 100.0] {
            assert!(proximal_probe(&d, p(1.0, 0.0), p(1.0, 0.0), s, &t).unwrap());
        }
        assert!(!proximal_probe(&d, p(1.0, 0.0), p(-1.0, 0.0), 0.5, &t).unwrap());
    }

    #[test]
    fn support_directions_examples() {
        let d = Shape::disk(p(0.0, 0.0), 1.0).unwrap();
        let set =
            support_directions(&d, p(1.0, 0.0), 1.0, &samples(&d, 400), &d.tolerances()).unwrap();
        assert!(set.contains(0.0, 1e-9));
        let (lo, hi) = set.intervals()[0];
        assert!(hi - lo < 1e-6 || (set.intervals().len() == 2));

        let s = square();
        let set =
            support_directions(&s, p(0.5, 0.0), 10.0, &samples(&s, 64), &s.tolerances()).unwrap();
        assert!(set.is_empty());

        let c = Shape::circle_curve(p(0.0, 0.0), 1.0).unwrap();
        let set =
            support_directions(&c, p(1.0, 0.0), 1.0, &samples(&c, 256), &c.tolerances()).unwrap();
        assert!(set.contains(0.0, 1e-9));
    }

    #[test]
    fn convex_cone_inequality_and_nontriviality() {
        for s in [square(), lens(), Shape::disk(p(0.3, 0.2), 2.0).unwrap()] {
            let t = s.tolerances();
            let xs = samples(&s, 64);
            for a in s.boundary_samples(32) {
                let cone = normal_cone(&s, a, &t).unwrap();
                assert!(!cone.generators.is_empty());
                for z in cone.test_directions() {
                    for x in &xs {
                        assert!(z.dot(*x - a) <= t.pred);
                    }
                }
            }
        }
    }

    #[test]
    fn max_inner_matches_dense_search() {
        let s = square();
        let cone = normal_cone(&s, p(1.0, 1.0), &s.tolerances()).unwrap();
        for w in [p(1.0, 0.2), p(-1.0, -0.3), p(0.0, -1.0), p(-1.0, 1.0)] {
            let dense = (0..=20_000)
                .map(|k| cone.aperture() * k as f64 / 20_000.0 + cone.generators[0].angle())
                .map(|th| Point2::from_angle(th).dot(w))
                .fold(f64::MIN, f64::max);
            assert!((cone.max_inner(w) - dense).abs() < 1e-6);
            assert!((cone.argmax_inner(w).dot(w) - cone.max_inner(w)).abs() < 1e-9);
        }
    }

    proptest! {
        #[test]
        fn support_implies_probe(k in 0usize..64, r in 1.0f64..4.0) {
            let d = Shape::disk(p(0.0, 0.0), 1.0).unwrap();
            let t = d.tolerances();
            let a = d.boundary_samples(64)[k];
            let set = support_directions(&d, a, r, &samples(&d, 128), &t).unwrap();
            let cfg = ProbeConfig::for_radius(r, 100.0);
            for z in set.representatives() {
                for &s in &cfg.t_list {
                    prop_assert!(proximal_probe(&d, a, z, s, &t).unwrap());
                }
            }
        }

        #[test]
        fn probe_monotone(k in 0usize..32, th in 0.0f64..std::f64::consts::TAU, s in 0.05f64..3.0) {
            let l = lens();
            let t = l.tolerances();
            let a = l.boundary_samples(32)[k];
            let z = Point2::from_angle(th);
            if proximal_probe(&l, a, z, s, &t).unwrap() {
                prop_assert!(proximal_probe(&l, a, z, s * 0.5, &t).unwrap());
            }
        }
    }
}
