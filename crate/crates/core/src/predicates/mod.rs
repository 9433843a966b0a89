//! Certificate-producing checks of the regularity predicates: strong
//! convexity and its equivalent forms, spherical support, prox-regularity,
//! exterior spheres, epi-Lipschitz cones, convexity and the far-point
//! conditions on `E_r(A)`.
//!
//! "For all boundary points" is discretized by [`Shape::boundary_samples`]
//! (always including corners); "for all points of `A`" adds interior
//! samples. Tolerances only ever favour `holds = true`: a witness is only
//! reported when its violation exceeds `tol.pred`.

mod er;
mod normal_ineq;
mod structure;
mod support;

pub use er::{
    er_candidates, er_ray_representation_check, far_singleton_on_er, is_negatively_s_convex,
};
pub use normal_ineq::{
    ball_cover_check, far_point_check, has_far_point_property, is_ball_covered, is_prox_regular,
    is_strongly_convex,
};
pub use structure::{epi_lipschitz_sampled, is_convex, is_epi_lipschitz};
pub use support::{has_exterior_sphere, is_spherically_supported};

use serde::{Deserialize, Serialize};

use crate::geometry::{Point2, Tolerances};
use crate::shapes::Shape;
use crate::{Error, Result, Scalar};

/// Maximum number of witnesses kept per certificate.
pub const MAX_WITNESSES: usize = 16;

/// Sampling budget and seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct PredicateConfig<T: Scalar> {
    pub n_boundary: usize,
    pub n_inner: usize,
    pub n_er: usize,
    pub seed: u64,
    /// Absolute `δ_pred`; defaults to the shape's scaled value.
    #[serde(default)]
    pub delta_pred: Option<T>,
}

impl<T: Scalar> Default for PredicateConfig<T> {
    fn default() -> Self {
        PredicateConfig {
            n_boundary: 128,
            n_inner: 64,
            n_er: 256,
            seed: 0,
            delta_pred: None,
        }
    }
}

impl<T: Scalar> PredicateConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.n_boundary == 0 || self.n_inner == 0 || self.n_er == 0 {
            return Err(Error::InvalidParameter(
                "sample counts must be positive".into(),
            ));
        }
        if let Some(d) = self.delta_pred {
            if !(d > T::zero()) {
                return Err(Error::InvalidParameter(
                    "delta_pred must be positive".into(),
                ));
            }
        }
        Ok(())
    }

    /// Shape tolerances with the configured `δ_pred` override.
    pub fn tolerances(&self, shape: &Shape<T>) -> Tolerances<T> {
        let t = shape.tolerances();
        match self.delta_pred {
            Some(d) => t.with_pred(d),
            None => t,
        }
    }
}

/// One violated instance of a predicate's defining inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Witness<T: Scalar> {
    pub a: Point2<T>,
    pub zeta: Point2<T>,
    pub x: Point2<T>,
    pub violation: T,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleCounts {
    pub boundary: usize,
    pub inner: usize,
    pub directions: usize,
    pub er: usize,
}

/// Verdict of one predicate with its witnesses and the tolerances used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Certificate<T: Scalar> {
    pub predicate_id: String,
    pub r: Option<T>,
    pub holds: bool,
    pub witnesses: Vec<Witness<T>>,
    pub samples_used: SampleCounts,
    pub tol: Tolerances<T>,
}

/// Boundary samples (corners included) and interior samples of a shape.
#[derive(Debug, Clone)]
pub struct SampleSet<T: Scalar> {
    pub boundary: Vec<Point2<T>>,
    pub inner: Vec<Point2<T>>,
    all: Vec<Point2<T>>,
}

impl<T: Scalar> SampleSet<T> {
    pub fn new(shape: &Shape<T>, cfg: &PredicateConfig<T>, tol: &Tolerances<T>) -> Self {
        let boundary = shape.boundary_samples(cfg.n_boundary);
        let inner = shape.inner_samples(cfg.n_inner, cfg.seed, tol);
        let mut all = boundary.clone();
        all.extend_from_slice(&inner);
        SampleSet {
            boundary,
            inner,
            all,
        }
    }

    /// Boundary followed by interior samples.
    pub fn all(&self) -> &[Point2<T>] {
        &self.all
    }

    pub fn counts(&self) -> SampleCounts {
        SampleCounts {
            boundary: self.boundary.len(),
            inner: self.inner.len(),
            ..SampleCounts::default()
        }
    }
}

/// Collects the worst witnesses, ordered by decreasing violation and then
/// by discovery order.
#[derive(Debug, Clone)]
pub(crate) struct WitnessLog<T: Scalar> {
    items: Vec<(usize, Witness<T>)>,
    seen: usize,
    pred: T,
}

impl<T: Scalar> WitnessLog<T> {
    pub(crate) fn new(pred: T) -> Self {
        WitnessLog {
            items: Vec::new(),
            seen: 0,
            pred,
        }
    }

    /// Records a witness if its violation exceeds `δ_pred`.
    pub(crate) fn offer(&mut self, w: Witness<T>) -> bool {
        if !(w.violation > self.pred) {
            return false;
        }
        self.items.push((self.seen, w));
        self.seen += 1;
        if self.items.len() > 4 * MAX_WITNESSES {
            self.trim();
        }
        true
    }

    fn trim(&mut self) {
        self.items.sort_by(|a, b| {
            b.1.violation
                .partial_cmp(&a.1.violation)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.0.cmp(&b.0))
        });
        self.items.truncate(MAX_WITNESSES);
    }

    pub(crate) fn finish(
        mut self,
        id: &str,
        r: Option<T>,
        samples_used: SampleCounts,
        tol: &Tolerances<T>,
    ) -> Certificate<T> {
        self.trim();
        Certificate {
            predicate_id: id.to_string(),
            r,
            holds: self.items.is_empty(),
            witnesses: self.items.into_iter().map(|(_, w)| w).collect(),
            samples_used,
            tol: *tol,
        }
    }
}

pub(crate) fn check_radius<T: Scalar>(r: T) -> Result<()> {
    if r > T::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter("r must be positive".into()))
    }
}
