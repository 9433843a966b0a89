use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{generate, Instance, InstanceSpec};
use crate::geometry::Point2;
use crate::predicates::{
    er_ray_representation_check, far_singleton_on_er, has_far_point_property, is_ball_covered,
    is_convex, is_epi_lipschitz, is_negatively_s_convex, is_spherically_supported,
    is_strongly_convex, Certificate, PredicateConfig, SampleSet, Witness,
};
use crate::shapes::Shape;
use crate::{Error, Result};

type P = Point2<f64>;

/// Theorem-level check run by [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "T1.1")]
    T11,
    #[serde(rename = "C1.2")]
    C12,
    #[serde(rename = "C1.3")]
    C13,
    #[serde(rename = "T1.4")]
    T14,
    #[serde(rename = "P2.3")]
    P23,
    #[serde(rename = "R2.4")]
    R24,
    #[serde(rename = "FAR2.1")]
    Far21,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T11,
        TheoremId::C12,
        TheoremId::C13,
        TheoremId::T14,
        TheoremId::P23,
        TheoremId::R24,
        TheoremId::Far21,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T11 => "T1.1",
            TheoremId::C12 => "C1.2",
            TheoremId::C13 => "C1.3",
            TheoremId::T14 => "T1.4",
            TheoremId::P23 => "P2.3",
            TheoremId::R24 => "R2.4",
            TheoremId::Far21 => "FAR2.1",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem id {s}")))
    }
}

/// Suite-wide settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub predicate: PredicateConfig<f64>,
    /// Query points per instance for the far-point property checks.
    pub far_queries: usize,
    /// Radii for the ray-representation check.
    pub er_radii: Vec<f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            predicate: PredicateConfig::default(),
            far_queries: 12,
            er_radii: vec![0.5, 2.0],
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.predicate.seed = seed;
        self
    }
}

/// An instance whose verdicts break the checked statement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub instance: String,
    /// Names of the failed implications.
    pub failed: Vec<String>,
    pub lhs: BTreeMap<String, bool>,
    pub rhs: BTreeMap<String, bool>,
    pub witnesses: Vec<Witness<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub theorem_id: TheoremId,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<FailureRecord>,
    /// Wall time in seconds; excluded from [`SuiteReport::canonical_json`].
    pub runtime: Option<f64>,
}

impl SuiteReport {
    /// JSON with the runtime field removed.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.runtime = None;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }
}

struct Outcome {
    failed: Vec<String>,
    lhs: BTreeMap<String, bool>,
    rhs: BTreeMap<String, bool>,
    witnesses: Vec<Witness<f64>>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failed: Vec::new(),
            lhs: BTreeMap::new(),
            rhs: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    fn lhs(&mut self, name: &str, c: &Certificate<f64>) -> bool {
        self.lhs.insert(name.to_string(), c.holds);
        self.witnesses.extend(c.witnesses.iter().take(2));
        c.holds
    }

    fn rhs(&mut self, name: &str, c: &Certificate<f64>) -> bool {
        self.rhs.insert(name.to_string(), c.holds);
        self.witnesses.extend(c.witnesses.iter().take(2));
        c.holds
    }

    fn flag(&mut self, side_lhs: bool, name: &str, v: bool) -> bool {
        let m = if side_lhs {
            &mut self.lhs
        } else {
            &mut self.rhs
        };
        m.insert(name.to_string(), v);
        v
    }

    /// Records `lhs ⇒ rhs` and `rhs ⇒ lhs` separately.
    fn biconditional(&mut self, lhs: bool, rhs: bool) {
        if lhs && !rhs {
            self.failed.push("lhs=>rhs".into());
        }
        if rhs && !lhs {
            self.failed.push("rhs=>lhs".into());
        }
    }
}

/// Whether the theorem's hypotheses cover this instance.
fn applies(t: TheoremId, shape: &Shape<f64>) -> bool {
    match t {
        TheoremId::T11 => !shape.is_singleton(),
        TheoremId::C12 => !shape.is_singleton() && !matches!(shape, Shape::PointCloud(_)),
        _ => true,
    }
}

fn evaluate(t: TheoremId, inst: &Instance, cfg: &SuiteConfig) -> Result<Option<Outcome>> {
    let shape = &inst.shape;
    if !applies(t, shape) {
        return Ok(None);
    }
    let r = inst.spec.r;
    let pc = &cfg.predicate;
    let mut o = Outcome::new();
    match t {
        TheoremId::T11 => {
            let l = o.lhs("strongly_convex", &is_strongly_convex(shape, r, pc)?);
            let s = o.rhs(
                "spherically_supported",
                &is_spherically_supported(shape, r, pc)?,
            );
            let i = o.flag(false, "interior_nonempty", shape.interior_nonempty());
            o.biconditional(l, s && i);
        }
        TheoremId::C12 => {
            let l = o.lhs("strongly_convex", &is_strongly_convex(shape, r, pc)?);
            let e = o.rhs("epi_lipschitz", &is_epi_lipschitz(shape, pc)?);
            let s = o.rhs(
                "spherically_supported",
                &is_spherically_supported(shape, r, pc)?,
            );
            o.biconditional(l, e && s);
        }
        TheoremId::C13 => {
            let l = o.lhs("strongly_convex", &is_strongly_convex(shape, r, pc)?);
            let c = o.rhs("convex", &is_convex(shape, pc)?);
            let s = o.rhs(
                "spherically_supported",
                &is_spherically_supported(shape, r, pc)?,
            );
            o.biconditional(l, c && s);
        }
        TheoremId::T14 => {
            let l = o.lhs("strongly_convex", &is_strongly_convex(shape, r, pc)?);
            let c = o.rhs("convex", &is_convex(shape, pc)?);
            let b = o.flag(false, "bounded", true);
            let n = o.rhs("negatively_convex", &is_negatively_s_convex(shape, r, pc)?);
            o.biconditional(l, c && b && n);
        }
        TheoremId::P23 => {
            let ii = o.lhs("ii_strongly_convex", &is_strongly_convex(shape, r, pc)?);
            let iii = o.rhs("iii_ball_cover", &is_ball_covered(shape, r, pc)?);
            let iv = o.rhs("iv_far_point", &has_far_point_property(shape, r, pc)?);
            let c = is_convex(shape, pc)?;
            let f = far_singleton_on_er(shape, r, pc)?;
            let v = o.flag(false, "v_convex_far_singleton", c.holds && f.holds);
            for (name, x) in [("ii=iii", iii), ("ii=iv", iv), ("ii=v", v)] {
                if x != ii {
                    o.failed.push(name.into());
                }
            }
            if !v {
                o.witnesses
                    .extend(c.witnesses.iter().chain(&f.witnesses).take(2));
            }
        }
        TheoremId::R24 => {
            for &er in &cfg.er_radii {
                let c = er_ray_representation_check(shape, er, pc)?;
                if !o.rhs(&format!("er_rays_r{er}"), &c) {
                    o.failed.push(format!("r={er}"));
                }
            }
        }
        TheoremId::Far21 => far_properties(inst, cfg, &mut o),
    }
    Ok(Some(o))
}

/// Far-point and projection properties at random query points around the
/// shape: persistence of a unique farthest point along `x + t(x − a)`, the
/// farthest-point inequality, persistence of a unique projection along
/// `a + t(x − a)`, `dfar ≥ d` and monotonicity of `E_r` in `r`.
fn far_properties(inst: &Instance, cfg: &SuiteConfig, o: &mut Outcome) {
    let shape = &inst.shape;
    let tol = cfg.predicate.tolerances(shape);
    let samples = SampleSet::new(shape, &cfg.predicate, &tol);
    let ys = samples.all();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.predicate.seed ^ inst.spec.seed ^ 0xFA_21);
    let (lo, hi) = shape.bounding_box();
    let pad = 2.0 * tol.scale;
    let mut counts: BTreeMap<&str, bool> = BTreeMap::new();
    let mut fail = |name: &'static str, w: Option<Witness<f64>>, o: &mut Outcome| {
        counts.insert(name, false);
        if !o.failed.iter().any(|f| f == name) {
            o.failed.push(name.to_string());
        }
        if let Some(w) = w {
            if o.witnesses.len() < 8 {
                o.witnesses.push(w);
            }
        }
    };
    for _ in 0..cfg.far_queries {
        let x = P::new(
            rng.gen_range(lo.x - pad..hi.x + pad),
            rng.gen_range(lo.y - pad..hi.y + pad),
        );
        let f = shape.farthest(x, &tol);
        let pr = shape.project(x, &tol);
        if f.distance < pr.distance - tol.pred {
            fail("dfar>=d", None, o);
        }
        for &a in &f.far_points {
            for &y in ys {
                let lhs = (a - x).dot(y - a);
                let bound = -0.5 * (y - a).norm_sq() + tol.pred;
                if lhs > bound {
                    let w = Witness {
                        a,
                        zeta: a - x,
                        x: y,
                        violation: lhs - bound + tol.pred,
                    };
                    fail("far_inequality", Some(w), o);
                }
            }
        }
        if f.is_singleton() {
            let a = f.far_points[0];
            for t in [0.5, 1.0, 2.0] {
                let x2 = x + (x - a) * t;
                let g = shape.farthest(x2, &tol);
                if !g.is_singleton() || g.far_points[0].distance(a) > tol.cluster {
                    let w = Witness {
                        a,
                        zeta: x - a,
                        x: x2,
                        violation: g.far_points[0].distance(a),
                    };
                    fail("far_persistence", Some(w), o);
                }
            }
        }
        if pr.is_singleton() {
            let a = pr.proj_points[0];
            for t in [0.25, 0.5, 0.9] {
                let x2 = a + (x - a) * t;
                let g = shape.project(x2, &tol);
                if !g.is_singleton() || g.proj_points[0].distance(a) > tol.cluster {
                    let w = Witness {
                        a,
                        zeta: x - a,
                        x: x2,
                        violation: g.proj_points[0].distance(a),
                    };
                    fail("proj_persistence", Some(w), o);
                }
            }
        }
        let r = inst.spec.r;
        for (r1, r2) in [(0.5 * r, r), (r, 2.0 * r)] {
            if shape.in_e_r(x, r2, &tol) && !shape.in_e_r(x, r1, &tol) {
                fail("er_monotone", None, o);
            }
        }
    }
    for name in [
        "dfar>=d",
        "far_inequality",
        "far_persistence",
        "proj_persistence",
        "er_monotone",
    ] {
        o.rhs
            .insert(name.to_string(), *counts.get(name).unwrap_or(&true));
    }
}

/// Evaluates theorem `t` on every applicable instance. Instances run in
/// parallel; the report lists failures by instance id.
pub fn run_suite(t: TheoremId, corpus: &[InstanceSpec], cfg: &SuiteConfig) -> Result<SuiteReport> {
    if corpus.is_empty() {
        return Err(Error::EmptyInput);
    }
    let start = Instant::now();
    let results: Vec<Result<Option<(String, Outcome)>>> = corpus
        .par_iter()
        .map(|spec| {
            let inst = generate(spec)?;
            Ok(evaluate(t, &inst, cfg)?.map(|o| (spec.id.clone(), o)))
        })
        .collect();
    let mut instances = 0;
    let mut passes = 0;
    let mut failures = Vec::new();
    for r in results {
        if let Some((id, o)) = r? {
            instances += 1;
            if o.failed.is_empty() {
                passes += 1;
            } else {
                failures.push(FailureRecord {
                    instance: id,
                    failed: o.failed,
                    lhs: o.lhs,
                    rhs: o.rhs,
                    witnesses: o.witnesses,
                });
            }
        }
    }
    failures.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(SuiteReport {
        theorem_id: t,
        instances,
        passes,
        failures,
        runtime: Some(start.elapsed().as_secs_f64()),
    })
}

/// Truth-table cells `(strongly_convex, spherically_supported,
/// interior_nonempty)` realized by the corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdequacyReport {
    pub cells: BTreeMap<String, Vec<String>>,
    /// Required cells with no instance.
    pub missing: Vec<String>,
    /// Non-singleton instances in a cell the characterization forbids.
    pub forbidden: Vec<String>,
}

impl AdequacyReport {
    pub fn passes(&self) -> bool {
        self.missing.is_empty() && self.forbidden.is_empty()
    }
}

fn cell(sc: bool, sph: bool, int: bool) -> String {
    let b = |v: bool| if v { 'T' } else { 'F' };
    format!("({},{},{})", b(sc), b(sph), b(int))
}

/// Checks that the corpus populates `(T,T,T)`, `(F,T,F)`, `(F,F,T)` and
/// `(F,F,F)` and that no non-singleton is strongly convex while failing
/// spherical support or having empty interior.
pub fn truth_table_adequacy(
    corpus: &[InstanceSpec],
    cfg: &PredicateConfig<f64>,
) -> Result<AdequacyReport> {
    let rows: Vec<Result<(String, String, bool)>> = corpus
        .par_iter()
        .map(|spec| {
            let inst = generate(spec)?;
            let s = &inst.shape;
            let sc = is_strongly_convex(s, spec.r, cfg)?.holds;
            let sph = is_spherically_supported(s, spec.r, cfg)?.holds;
            let int = s.interior_nonempty();
            let forbidden = !s.is_singleton() && sc && (!sph || !int);
            Ok((cell(sc, sph, int), spec.id.clone(), forbidden))
        })
        .collect();
    let mut cells: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut forbidden = Vec::new();
    for row in rows {
        let (c, id, bad) = row?;
        if bad {
            forbidden.push(id.clone());
        }
        cells.entry(c).or_default().push(id);
    }
    let missing = ["(T,T,T)", "(F,T,F)", "(F,F,T)", "(F,F,F)"]
        .iter()
        .filter(|c| !cells.contains_key(**c))
        .map(|c| c.to_string())
        .collect();
    Ok(AdequacyReport {
        cells,
        missing,
        forbidden,
    })
}
