//! Planar primitives: points, circles, arcs, convex hulls, the minimum
//! enclosing circle and tolerance-aware classification.

mod angles;
mod arc_polygon;
mod circle;
mod hull;
mod mec;
mod point;
mod tolerance;

pub use angles::{angular_distance_to_arc, halfplane_directions, AngularSet};
pub use arc_polygon::{classify_point, ArcPolygon, BoundaryEdge, PointClass};
pub use circle::{arc_through, circle_intersections, ArcEdge, Circle, Side};
pub use hull::{convex_hull, ConvexPolygon};
pub use mec::{minimum_enclosing_circle, minimum_enclosing_circle_seeded};
pub use point::{bounding_box, closest_on_segment, orient, Point2};
pub use tolerance::Tolerances;
