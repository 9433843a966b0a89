//! Intersections of equal-radius disks, ball hulls of finite point sets and
//! an independent grid oracle for ball-hull membership.

mod ball;
mod intersection;
mod oracle;

pub use ball::{ball_hull, ball_hull_dual, BallHull};
pub use intersection::{disk_intersection, DiskIntersection};
pub use oracle::{oracle_contradictions, oracle_membership, OracleGrid, OracleVerdict};
