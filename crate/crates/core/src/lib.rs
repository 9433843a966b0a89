//! Computational geometry for r-strongly convex planar sets: ball hulls,
//! farthest-point queries, normal cones, and certificate-producing
//! regularity predicates, plus a harness that checks the characterization
//! theorems over generated corpora.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod error;
pub mod geometry;
pub mod harness;
pub mod hulls;
pub mod normals;
pub mod predicates;
mod scalar;
pub mod shapes;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Point2d = geometry::Point2<f64>;
pub type Circle64 = geometry::Circle<f64>;
pub type ArcPolygon64 = geometry::ArcPolygon<f64>;
pub type Tolerances64 = geometry::Tolerances<f64>;
pub type Shape64 = shapes::Shape<f64>;
pub type NormalCone64 = normals::NormalCone<f64>;
pub type Certificate64 = predicates::Certificate<f64>;
pub type Point2f = geometry::Point2<f32>;
pub type Shape32 = shapes::Shape<f32>;
