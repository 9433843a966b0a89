//! Deterministic SVG rendering with a fixed 800×800 viewport.

use std::fmt::Write;

use ballconvex::geometry::{BoundaryEdge, Point2};
use ballconvex::normals::{normal_cone, ConeKind};
use ballconvex::shapes::Shape;
use ballconvex::Point2d;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const SHAPE_COLORS: [&str; 4] = ["#1f4e79", "#8c2d19", "#2e6b30", "#6b2e6b"];

/// A ball `B̄(a − rζ/‖ζ‖; r)` drawn as a supporting circle at `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallOverlay {
    pub a: Point2d,
    pub zeta: Point2d,
    pub r: f64,
}

impl BallOverlay {
    pub fn center(&self) -> Point2d {
        let u = self.zeta.normalized().unwrap_or(Point2::new(1.0, 0.0));
        self.a - u * self.r
    }
}

#[derive(Debug, Clone, Default)]
pub struct Overlays {
    pub normals: bool,
    pub balls: Vec<BallOverlay>,
    pub er: Option<f64>,
}

struct View {
    lo: Point2d,
    scale: f64,
    off: Point2d,
}

impl View {
    fn fit(lo: Point2d, hi: Point2d) -> Self {
        let w = (hi.x - lo.x).max(1e-12);
        let h = (hi.y - lo.y).max(1e-12);
        let scale = (SIZE - 2.0 * MARGIN) / w.max(h);
        let off = Point2::new(
            MARGIN + 0.5 * ((SIZE - 2.0 * MARGIN) - w * scale),
            MARGIN + 0.5 * ((SIZE - 2.0 * MARGIN) - h * scale),
        );
        View { lo, scale, off }
    }

    fn map(&self, p: Point2d) -> (String, String) {
        let x = self.off.x + (p.x - self.lo.x) * self.scale;
        let y = SIZE - (self.off.y + (p.y - self.lo.y) * self.scale);
        (num(x), num(y))
    }

    fn len(&self, l: f64) -> String {
        num(l * self.scale)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn extent(shapes: &[Shape<f64>], ov: &Overlays) -> (Point2d, Point2d) {
    let mut boxes: Vec<(Point2d, Point2d)> = shapes.iter().map(|s| s.bounding_box()).collect();
    for b in &ov.balls {
        let c = b.center();
        boxes.push((c - Point2::new(b.r, b.r), c + Point2::new(b.r, b.r)));
    }
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (a, b) in boxes {
        lo = Point2::new(lo.x.min(a.x), lo.y.min(a.y));
        hi = Point2::new(hi.x.max(b.x), hi.y.max(b.y));
    }
    if let Some(r) = ov.er {
        lo = lo - Point2::new(r, r);
        hi += Point2::new(r, r);
    }
    let pad = ((hi.x - lo.x).max(hi.y - lo.y) * 0.05).max(0.05);
    (lo - Point2::new(pad, pad), hi + Point2::new(pad, pad))
}

fn shape_element(out: &mut String, s: &Shape<f64>, v: &View, color: &str) {
    match s {
        Shape::PointCloud(pts) => {
            for p in pts {
                let (x, y) = v.map(*p);
                let _ = writeln!(
                    out,
                    r#"<circle cx="{x}" cy="{y}" r="2.50" fill="{color}"/>"#
                );
            }
        }
        Shape::Singleton(p) => {
            let (x, y) = v.map(*p);
            let _ = writeln!(
                out,
                r#"<circle cx="{x}" cy="{y}" r="3.50" fill="{color}"/>"#
            );
        }
        Shape::CircleCurve(c) => {
            let (x, y) = v.map(c.center);
            let _ = writeln!(
                out,
                r#"<circle cx="{x}" cy="{y}" r="{}" fill="none" stroke="{color}" stroke-width="2.00"/>"#,
                v.len(c.radius)
            );
        }
        Shape::ConvexPolygon(p) => {
            let mut d = String::new();
            for (i, q) in p.vertices.iter().enumerate() {
                let (x, y) = v.map(*q);
                let _ = write!(d, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
            }
            d.push('Z');
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2.00"/>"#
            );
        }
        Shape::ArcPolygon(p) => {
            if let Some(c) = p.full_circle() {
                let (x, y) = v.map(c.center);
                let _ = writeln!(
                    out,
                    r#"<circle cx="{x}" cy="{y}" r="{}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2.00"/>"#,
                    v.len(c.radius)
                );
                return;
            }
            let mut d = String::new();
            for (i, e) in p.edges().iter().enumerate() {
                if i == 0 {
                    let (x, y) = v.map(e.start());
                    let _ = write!(d, "M{x} {y} ");
                }
                let (x, y) = v.map(e.end());
                match e {
                    BoundaryEdge::Segment { .. } => {
                        let _ = write!(d, "L{x} {y} ");
                    }
                    BoundaryEdge::Arc(a) => {
                        // CCW in the plane is the positive sweep once y is flipped
                        let rr = v.len(a.radius);
                        let _ = write!(d, "A{rr} {rr} 0 0 1 {x} {y} ");
                    }
                }
            }
            d.push('Z');
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2.00"/>"#
            );
        }
    }
}

fn normals_element(out: &mut String, s: &Shape<f64>, v: &View, len: f64) {
    let tol = s.tolerances();
    let mut pts = s.boundary_samples(32);
    if !matches!(s, Shape::PointCloud(_)) {
        pts.extend(s.corners());
    }
    for a in pts {
        let Ok(cone) = normal_cone(s, a, &tol) else {
            continue;
        };
        if cone.kind == ConeKind::All {
            continue;
        }
        let (x0, y0) = v.map(a);
        for g in &cone.generators {
            let (x1, y1) = v.map(a + *g * len);
            let _ = writeln!(
                out,
                r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#c07000" stroke-width="1.50"/>"##
            );
        }
    }
}

fn er_element(out: &mut String, shapes: &[Shape<f64>], v: &View, lo: Point2d, hi: Point2d, r: f64) {
    const N: usize = 80;
    let step = Point2::new((hi.x - lo.x) / N as f64, (hi.y - lo.y) / N as f64);
    let side = v.len(step.x.max(step.y));
    let _ = writeln!(out, r##"<g fill="#d9a400" fill-opacity="0.18">"##);
    for i in 0..N {
        for j in 0..N {
            let c = Point2::new(
                lo.x + (i as f64 + 0.5) * step.x,
                lo.y + (j as f64 + 0.5) * step.y,
            );
            let inside = shapes.iter().all(|s| s.in_e_r(c, r, &s.tolerances()));
            if inside {
                let (x, y) = v.map(c - Point2::new(0.5 * step.x, -0.5 * step.y));
                let _ = writeln!(
                    out,
                    r#"<rect x="{x}" y="{y}" width="{side}" height="{side}"/>"#
                );
            }
        }
    }
    let _ = writeln!(out, "</g>");
}

/// Renders shapes and overlays. Identical inputs give identical bytes.
pub fn render(shapes: &[Shape<f64>], ov: &Overlays) -> String {
    let (lo, hi) = extent(shapes, ov);
    let v = View::fit(lo, hi);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(out, r#"<rect width="800" height="800" fill="white"/>"#);
    if let Some(r) = ov.er {
        er_element(&mut out, shapes, &v, lo, hi, r);
    }
    for (i, s) in shapes.iter().enumerate() {
        shape_element(&mut out, s, &v, SHAPE_COLORS[i % SHAPE_COLORS.len()]);
    }
    if ov.normals {
        let len = 0.08 * (hi.x - lo.x).max(hi.y - lo.y);
        for s in shapes {
            normals_element(&mut out, s, &v, len);
        }
    }
    for b in &ov.balls {
        let (x, y) = v.map(b.center());
        let _ = writeln!(
            out,
            r##"<circle cx="{x}" cy="{y}" r="{}" fill="none" stroke="#555555" stroke-width="1.50" stroke-dasharray="6 4"/>"##,
            v.len(b.r)
        );
        let (ax, ay) = v.map(b.a);
        let _ = writeln!(
            out,
            r##"<circle cx="{ax}" cy="{ay}" r="3.00" fill="#555555"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_shape_and_flip() {
        let s = Shape::convex_polygon(&[
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        let svg = render(std::slice::from_ref(&s), &Overlays::default());
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(!svg.contains("<line"));
        // y = 0 sits below y = 1 on screen
        let v = View::fit(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0));
        let (_, y0) = v.map(Point2::new(0.0, 0.0));
        let (_, y1) = v.map(Point2::new(0.0, 1.0));
        assert!(y0.parse::<f64>().unwrap() > y1.parse::<f64>().unwrap());
        assert_eq!(svg, render(&[s], &Overlays::default()));
    }

    #[test]
    fn no_negative_zero() {
        assert_eq!(num(-0.001), "0.00");
        assert_eq!(num(1.005), format!("{:.2}", 1.005));
    }
}
