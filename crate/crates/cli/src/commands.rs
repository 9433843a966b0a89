use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ballconvex::geometry::{bounding_box, Point2, Tolerances};
use ballconvex::harness::{default_corpus, run_suite, InstanceSpec, SuiteConfig, TheoremId};
use ballconvex::hulls::{ball_hull, ball_hull_dual, oracle_contradictions};
use ballconvex::predicates::{
    er_ray_representation_check, far_singleton_on_er, has_exterior_sphere, is_convex,
    is_epi_lipschitz, is_negatively_s_convex, is_prox_regular, is_spherically_supported,
    is_strongly_convex, Certificate, PredicateConfig,
};
use ballconvex::shapes::Shape;
use ballconvex::Point2d;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::document::{
    parse_numbers, parse_point, read_points, read_shape, CertificateDocument, ShapeDocument,
};
use crate::svg::{render, BallOverlay, Overlays};
use crate::{CliError, Command};

pub const PREDICATES: [&str; 9] = [
    "strongly-convex",
    "spherically-supported",
    "prox-regular",
    "exterior-sphere",
    "epi-lipschitz",
    "negatively-convex",
    "far-singleton",
    "er-rays",
    "convex",
];

pub fn run(cmd: Command) -> Result<u8, CliError> {
    match cmd {
        Command::Hull {
            input,
            r,
            dual,
            oracle_check,
            queries,
            grid,
            seed,
            svg,
            json,
        } => hull(
            &input,
            r,
            dual,
            oracle_check.then_some((queries, grid, seed)),
            svg,
            json,
        ),
        Command::Check {
            shape,
            predicate,
            r,
            samples,
            seed,
            json,
        } => check(&shape, &predicate, r, samples, seed, json),
        Command::Farthest { shape, x, r, json } => farthest(&shape, &x, r, json),
        Command::Suite {
            theorem,
            corpus,
            seed,
            json,
        } => suite(&theorem, &corpus, seed, json),
        Command::Render {
            shapes,
            svg,
            normals,
            balls,
            er,
        } => render_cmd(&shapes, &svg, normals, &balls, er),
    }
}

fn emit<S: Serialize>(value: &S, json: Option<PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    match json {
        Some(path) => write(&path, &(text + "\n")),
        None => {
            stdout(&text);
            Ok(())
        }
    }
}

/// Prints to stdout; a closed pipe is not an error.
fn stdout(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Input(format!(
            "{name} must be positive and finite"
        )))
    }
}

/// `δ_pred` from `BALLCONVEX_TOL`, when set.
fn env_tolerance() -> Result<Option<f64>, CliError> {
    match std::env::var("BALLCONVEX_TOL") {
        Ok(s) => {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("BALLCONVEX_TOL is not a number: {s:?}")))?;
            positive("BALLCONVEX_TOL", v).map(Some)
        }
        Err(_) => Ok(None),
    }
}

fn hull(
    input: &Path,
    r: f64,
    dual: bool,
    oracle: Option<(usize, usize, u64)>,
    svg: Option<PathBuf>,
    json: Option<PathBuf>,
) -> Result<u8, CliError> {
    let r = positive("r", r)?;
    let pts = read_points(input)?;
    let (lo, hi) = bounding_box(&pts).expect("points are nonempty");
    let tol = Tolerances::for_scale(lo.distance(hi));
    let bh = if dual {
        ball_hull_dual(&pts, r, &tol)
    } else {
        ball_hull(&pts, r, &tol)
    }?;
    if let Some((n, grid, seed)) = oracle {
        if grid < 100 {
            return Err(CliError::Input("--grid must be at least 100".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (blo, bhi) = bh.shape.bounding_box();
        let pad = 0.25 * blo.distance(bhi).max(r * 1e-3);
        let qs: Vec<Point2d> = (0..n)
            .map(|_| {
                Point2::new(
                    rng.gen_range(blo.x - pad..=bhi.x + pad),
                    rng.gen_range(blo.y - pad..=bhi.y + pad),
                )
            })
            .collect();
        let bad = oracle_contradictions(&pts, &bh.shape, r, &qs, grid);
        if !bad.is_empty() {
            eprintln!(
                "oracle disagrees with the hull at {} of {} queries",
                bad.len(),
                n
            );
            for (x, v) in bad.iter().take(5) {
                eprintln!("  ({}, {}): oracle says {:?}", x.x, x.y, v);
            }
            return Err(CliError::Failed("oracle check failed".into()));
        }
        eprintln!("oracle check: {n} queries agree");
    }
    if let Some(path) = svg {
        write(
            &path,
            &render(std::slice::from_ref(&bh.shape), &Overlays::default()),
        )?;
    }
    emit(&ShapeDocument::from_shape(&bh.shape, Some(r)), json)?;
    Ok(0)
}

fn needs_radius(pred: &str) -> bool {
    !matches!(pred, "convex" | "epi-lipschitz")
}

pub fn evaluate(
    shape: &Shape<f64>,
    pred: &str,
    r: Option<f64>,
    cfg: &PredicateConfig<f64>,
) -> Result<Certificate<f64>, CliError> {
    let r = if needs_radius(pred) {
        let r = r.ok_or_else(|| CliError::Input(format!("{pred} needs --r")))?;
        positive("r", r)?
    } else {
        0.0
    };
    let c = match pred {
        "strongly-convex" => is_strongly_convex(shape, r, cfg),
        "spherically-supported" => is_spherically_supported(shape, r, cfg),
        "prox-regular" => is_prox_regular(shape, r, cfg),
        "exterior-sphere" => has_exterior_sphere(shape, r, cfg),
        "epi-lipschitz" => is_epi_lipschitz(shape, cfg),
        "negatively-convex" => is_negatively_s_convex(shape, r, cfg),
        "far-singleton" => far_singleton_on_er(shape, r, cfg),
        "er-rays" => er_ray_representation_check(shape, r, cfg),
        "convex" => is_convex(shape, cfg),
        other => return Err(CliError::UnknownPredicate(other.into())),
    };
    Ok(c?)
}

fn check(
    path: &Path,
    pred: &str,
    r: Option<f64>,
    samples: Option<usize>,
    seed: u64,
    json: Option<PathBuf>,
) -> Result<u8, CliError> {
    if !PREDICATES.contains(&pred) {
        return Err(CliError::UnknownPredicate(pred.into()));
    }
    let shape = read_shape(path)?;
    let mut cfg = PredicateConfig {
        seed,
        delta_pred: env_tolerance()?,
        ..PredicateConfig::default()
    };
    if let Some(n) = samples {
        if n == 0 {
            return Err(CliError::Input("--samples must be positive".into()));
        }
        cfg.n_boundary = n;
        cfg.n_inner = n.div_ceil(2);
        cfg.n_er = 2 * n;
    }
    let cert = evaluate(&shape, pred, r, &cfg)?;
    let holds = cert.holds;
    if !holds {
        eprintln!("{pred} fails with {} witness(es)", cert.witnesses.len());
    }
    emit(&CertificateDocument::new(&shape, cert), json)?;
    Ok(if holds { 0 } else { 3 })
}

#[derive(Serialize)]
struct FarthestOutput {
    x: Point2d,
    dfar: f64,
    far_points: Vec<Point2d>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_er: Option<bool>,
}

fn farthest(path: &Path, x: &str, r: Option<f64>, json: Option<PathBuf>) -> Result<u8, CliError> {
    let x = parse_point(x).map_err(|e| CliError::Input(format!("--x: {e}")))?;
    let shape = read_shape(path)?;
    let mut tol = shape.tolerances();
    if let Some(d) = env_tolerance()? {
        tol = tol.with_pred(d);
    }
    let f = shape.farthest(x, &tol);
    let in_er = match r {
        Some(r) => Some(shape.in_e_r(x, positive("r", r)?, &tol)),
        None => None,
    };
    emit(
        &FarthestOutput {
            x,
            dfar: f.distance,
            far_points: f.far_points,
            in_er,
        },
        json,
    )?;
    Ok(0)
}

fn suite(theorem: &str, corpus: &str, seed: u64, json: Option<PathBuf>) -> Result<u8, CliError> {
    let t: TheoremId = theorem.parse().map_err(|_| {
        CliError::Input(format!(
            "unknown theorem {theorem:?}; expected one of {}",
            TheoremId::ALL.map(|t| t.as_str()).join(", ")
        ))
    })?;
    let specs: Vec<InstanceSpec> = if corpus == "default" {
        default_corpus()
    } else {
        let text =
            fs::read_to_string(corpus).map_err(|e| CliError::Io(format!("{corpus}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{corpus}: {e}")))?
    };
    let mut cfg = SuiteConfig::default().with_seed(seed);
    cfg.predicate.delta_pred = env_tolerance()?;
    let report = run_suite(t, &specs, &cfg)?;
    eprintln!(
        "{}: {}/{} instances pass in {:.2} s",
        t.as_str(),
        report.passes,
        report.instances,
        report.runtime.unwrap_or(0.0)
    );
    let text = report.canonical_json();
    match json {
        Some(path) => write(&path, &(text + "\n"))?,
        None => stdout(&text),
    }
    Ok(if report.failures.is_empty() { 0 } else { 3 })
}

fn parse_ball(s: &str) -> Result<BallOverlay, CliError> {
    let v = parse_numbers(s, 5).map_err(|e| CliError::Input(format!("--balls {s:?}: {e}")))?;
    let r = positive("ball radius", v[4])?;
    let zeta = Point2::new(v[2], v[3]);
    if zeta.normalized().is_none() {
        return Err(CliError::Input("ball direction must be nonzero".into()));
    }
    Ok(BallOverlay {
        a: Point2::new(v[0], v[1]),
        zeta,
        r,
    })
}

fn render_cmd(
    paths: &[PathBuf],
    svg: &Path,
    normals: bool,
    balls: &[String],
    er: Option<f64>,
) -> Result<u8, CliError> {
    let shapes = paths
        .iter()
        .map(|p| read_shape(p))
        .collect::<Result<Vec<_>, _>>()?;
    let ov = Overlays {
        normals,
        balls: balls
            .iter()
            .map(|b| parse_ball(b))
            .collect::<Result<_, _>>()?,
        er: er.map(|r| positive("er", r)).transpose()?,
    };
    write(svg, &render(&shapes, &ov))?;
    Ok(0)
}
