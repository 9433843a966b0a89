use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Scalar;

/// A point (or vector) in the plane. Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2<T: Scalar> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(T::zero(), T::zero())
    }

    /// Unit vector at angle `theta` (radians, CCW from +x).
    pub fn from_angle(theta: T) -> Self {
        Point2::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(self, o: Self) -> T {
        (self - o).norm()
    }

    pub fn distance_sq(self, o: Self) -> T {
        (self - o).norm_sq()
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        if n > T::zero() && n.is_finite() {
            Some(self * (T::one() / n))
        } else {
            None
        }
    }

    /// Rotation by +90 degrees.
    pub fn perp(self) -> Self {
        Point2::new(-self.y, self.x)
    }

    /// Angle in `[0, 2π)`.
    pub fn angle(self) -> T {
        T::wrap_angle(self.y.atan2(self.x))
    }

    pub fn midpoint(self, o: Self) -> Self {
        Point2::new((self.x + o.x) * T::half(), (self.y + o.y) * T::half())
    }

    pub fn lerp(self, o: Self, t: T) -> Self {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scale(self, s: T) -> Self {
        self * s
    }
}

impl<T: Scalar> Serialize for Point2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Point2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (x, y) = <(T, T)>::deserialize(d)?;
        Ok(Point2::new(x, y))
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> AddAssign for Point2<T> {
    fn add_assign(&mut self, o: Self) {
        self.x = self.x + o.x;
        self.y = self.y + o.y;
    }
}

impl<T: Scalar> Sub for Point2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for Point2<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Point2::new(self.x * s, self.y * s)
    }
}

impl<T: Scalar> Neg for Point2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point2::new(-self.x, -self.y)
    }
}

/// Orientation of the triple `(a, b, c)`: twice the signed area.
pub fn orient<T: Scalar>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> T {
    (b - a).cross(c - a)
}

/// Axis-aligned bounding box of a nonempty point set, as `(min, max)`.
pub fn bounding_box<T: Scalar>(points: &[Point2<T>]) -> Option<(Point2<T>, Point2<T>)> {
    let first = *points.first()?;
    Some(points.iter().fold((first, first), |(lo, hi), p| {
        (
            Point2::new(lo.x.min(p.x), lo.y.min(p.y)),
            Point2::new(hi.x.max(p.x), hi.y.max(p.y)),
        )
    }))
}

/// Closest point to `x` on the closed segment `[p, q]`.
pub fn closest_on_segment<T: Scalar>(x: Point2<T>, p: Point2<T>, q: Point2<T>) -> Point2<T> {
    let d = q - p;
    let len2 = d.norm_sq();
    if len2 <= T::zero() {
        return p;
    }
    let t = ((x - p).dot(d) / len2).max(T::zero()).min(T::one());
    p + d * t
}
