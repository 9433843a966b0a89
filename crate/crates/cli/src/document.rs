//! On-disk formats: shape and certificate documents, point files.

use std::fs;
use std::path::Path;

use ballconvex::geometry::{ArcPolygon, Circle, ConvexPolygon, Point2};
use ballconvex::predicates::Certificate;
use ballconvex::shapes::Shape;
use ballconvex::Point2d;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const SHAPE_SCHEMA: &str = "ballconvex/shape-v1";
pub const CERTIFICATE_SCHEMA: &str = "ballconvex/certificate-v1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeDocument {
    pub schema: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub data: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
}

impl ShapeDocument {
    pub fn from_shape(shape: &Shape<f64>, r: Option<f64>) -> Self {
        let (kind, data) = match shape {
            Shape::PointCloud(p) => ("point_cloud", to_value(p)),
            Shape::ConvexPolygon(p) => ("polygon", to_value(p)),
            Shape::ArcPolygon(p) => ("arc_polygon", to_value(p)),
            Shape::CircleCurve(c) => ("circle_curve", to_value(c)),
            Shape::Singleton(p) => ("singleton", to_value(p)),
        };
        ShapeDocument {
            schema: SHAPE_SCHEMA.into(),
            kind: kind.into(),
            data,
            r,
        }
    }

    /// Rebuilds the shape through the validating constructors.
    pub fn to_shape(&self) -> Result<Shape<f64>, CliError> {
        if self.schema != SHAPE_SCHEMA {
            return Err(CliError::Input(format!(
                "unsupported schema {:?}",
                self.schema
            )));
        }
        let shape = match self.kind.as_str() {
            "point_cloud" => Shape::point_cloud(from_value(&self.data)?)?,
            "polygon" => {
                let p: ConvexPolygon<f64> = from_value(&self.data)?;
                Shape::convex_polygon(&p.vertices)?
            }
            "arc_polygon" => {
                let p: ArcPolygon<f64> = from_value(&self.data)?;
                match p.full_circle() {
                    Some(c) => Shape::disk(c.center, c.radius)?,
                    None => Shape::arc_polygon(ArcPolygon::from_edges(p.edges().to_vec())?),
                }
            }
            "circle_curve" => {
                let c: Circle<f64> = from_value(&self.data)?;
                Shape::circle_curve(c.center, c.radius)?
            }
            "singleton" => Shape::singleton(from_value(&self.data)?)?,
            other => return Err(CliError::Input(format!("unknown shape type {other:?}"))),
        };
        Ok(shape)
    }
}

fn to_value<S: Serialize>(v: &S) -> Value {
    serde_json::to_value(v).expect("geometry serializes")
}

fn from_value<D: for<'de> Deserialize<'de>>(v: &Value) -> Result<D, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("bad shape data: {e}")))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema: String,
    pub tool_version: String,
    pub shape_type: String,
    pub certificate: Certificate<f64>,
}

impl CertificateDocument {
    pub fn new(shape: &Shape<f64>, certificate: Certificate<f64>) -> Self {
        CertificateDocument {
            schema: CERTIFICATE_SCHEMA.into(),
            tool_version: TOOL_VERSION.into(),
            shape_type: ShapeDocument::from_shape(shape, None).kind,
            certificate,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn read_shape(path: &Path) -> Result<Shape<f64>, CliError> {
    let text = read(path)?;
    let doc: ShapeDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.to_shape()
}

/// `x,y` per line; blank lines and `#` comments are skipped.
pub fn parse_csv(text: &str) -> Result<Vec<Point2d>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = parse_point(line).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))?;
        out.push(p);
    }
    Ok(out)
}

pub fn parse_point(s: &str) -> Result<Point2d, String> {
    let v = parse_numbers(s, 2)?;
    Ok(Point2::new(v[0], v[1]))
}

pub fn parse_numbers(s: &str, n: usize) -> Result<Vec<f64>, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("not a number: {:?}", t.trim()))
        })
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!(
            "expected {n} comma-separated numbers, got {}",
            v.len()
        ));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err("non-finite number".into());
    }
    Ok(v)
}

/// Points from CSV, a JSON array of `[x, y]`, or a point-cloud/singleton
/// shape document.
pub fn read_points(path: &Path) -> Result<Vec<Point2d>, CliError> {
    let text = read(path)?;
    let trimmed = text.trim_start();
    let pts = if trimmed.starts_with('[') {
        serde_json::from_str::<Vec<Point2d>>(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    } else if trimmed.starts_with('{') {
        let doc: ShapeDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        match doc.to_shape()? {
            Shape::PointCloud(p) => p,
            Shape::Singleton(p) => vec![p],
            s => s.corners(),
        }
    } else {
        parse_csv(&text)?
    };
    if pts.is_empty() {
        return Err(CliError::Input(format!("{}: no points", path.display())));
    }
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(CliError::Input("non-finite coordinate".into()));
    }
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_comments_and_blanks() {
        let pts = parse_csv("# header\n0,0\n\n 1 , 2 # trailing\n").unwrap();
        assert_eq!(pts, vec![Point2::new(0.0, 0.0), Point2::new(1.0, 2.0)]);
        assert!(parse_csv("1,2,3\n").is_err());
        assert!(parse_csv("a,b\n").is_err());
    }

    #[test]
    fn document_round_trip() {
        let shapes = [
            Shape::disk(Point2::new(0.0, 0.0), 1.0).unwrap(),
            Shape::circle_curve(Point2::new(1.0, 0.0), 2.0).unwrap(),
            Shape::singleton(Point2::new(1.0, 1.0)).unwrap(),
            Shape::convex_polygon(&[
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
            ])
            .unwrap(),
            Shape::point_cloud(vec![Point2::new(0.0, 0.0), Point2::new(3.0, 0.0)]).unwrap(),
        ];
        for s in shapes {
            let doc = ShapeDocument::from_shape(&s, Some(1.0));
            let text = serde_json::to_string(&doc).unwrap();
            let back: ShapeDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_shape().unwrap(), s);
        }
    }

    #[test]
    fn wrong_schema_rejected() {
        let mut doc =
            ShapeDocument::from_shape(&Shape::singleton(Point2::new(0.0, 0.0)).unwrap(), None);
        doc.schema = "other".into();
        assert!(doc.to_shape().is_err());
    }
}
