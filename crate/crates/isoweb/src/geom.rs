//! Basic geometric types: vectors, planes, 2D lines, the interpolated inner
//! product and the metric duality with respect to the unit isotropic sphere
//! `2z = x^2 + y^2`.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Point or vector in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

/// Point or vector in space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// Signed area of the parallelogram spanned by `self` and `o`.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        (n > 0.0).then(|| self / n)
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn lift(self, z: f64) -> Vec3 {
        Vec3::new(self.x, self.y, z)
    }
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };
    pub const EZ: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0).then(|| self / n)
    }

    /// Projection onto the plane z = 0.
    pub fn top_view(self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

macro_rules! impl_vec_ops {
    ($t:ty { $($f:ident),+ }) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t { <$t>::new($(self.$f + o.$f),+) }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t { <$t>::new($(self.$f - o.$f),+) }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { <$t>::new($(-self.$f),+) }
        }
        impl Mul<f64> for $t {
            type Output = $t;
            fn mul(self, s: f64) -> $t { <$t>::new($(self.$f * s),+) }
        }
        impl Div<f64> for $t {
            type Output = $t;
            fn div(self, s: f64) -> $t { <$t>::new($(self.$f / s),+) }
        }
    };
}

impl_vec_ops!(Vec2 { x, y });
impl_vec_ops!(Vec3 { x, y, z });

/// Interpolated inner product `p1 q1 + p2 q2 + eps * p3 q3`.
///
/// `eps = 0` is the isotropic (top view) product, `eps = 1` the Euclidean one.
pub fn iso_inner(p: Vec3, q: Vec3, eps: f64) -> f64 {
    p.x * q.x + p.y * q.y + eps * p.z * q.z
}

/// Norm induced by [`iso_inner`].
pub fn iso_norm(p: Vec3, eps: f64) -> f64 {
    iso_inner(p, p, eps).max(0.0).sqrt()
}

/// Non-isotropic plane `z = A x + B y + C`.
///
/// Planes parallel to the z-axis have no finite representation in this form;
/// they are carried separately as top-view lines (see [`Line2`]).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Plane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Plane {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Plane { a, b, c }
    }

    pub fn height(&self, x: f64, y: f64) -> f64 {
        self.a * x + self.b * y + self.c
    }

    /// Euclidean distance from a point to the plane.
    pub fn distance(&self, p: Vec3) -> f64 {
        (p.z - self.height(p.x, p.y)).abs() / (1.0 + self.a * self.a + self.b * self.b).sqrt()
    }

    /// A (non-unit) Euclidean normal of the plane.
    pub fn normal(&self) -> Vec3 {
        Vec3::new(-self.a, -self.b, 1.0)
    }
}

/// Polarity with respect to the unit isotropic sphere `2z = x^2 + y^2`:
/// the plane `z = A x + B y + C` maps to the point `(A, B, -C)`.
pub fn dual_of_plane(pl: &Plane) -> Vec3 {
    Vec3::new(pl.a, pl.b, -pl.c)
}

/// Inverse of [`dual_of_plane`]: the point `(x*, y*, z*)` maps to the plane
/// `z + z* = x x* + y y*`.
pub fn dual_of_point(p: Vec3) -> Plane {
    Plane::new(p.x, p.y, -p.z)
}

/// Straight line in the plane, either `y = k x + b` or the vertical `x = c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Line2 {
    Slope { k: f64, b: f64 },
    Vertical { c: f64 },
}

impl Line2 {
    pub fn slope(k: f64, b: f64) -> Self {
        Line2::Slope { k, b }
    }

    pub fn vertical(c: f64) -> Self {
        Line2::Vertical { c }
    }

    /// Coefficients `(a, b, c)` of the general form `a x + b y = c`,
    /// normalized so that `(a, b)` is a unit vector.
    pub fn general(&self) -> (f64, f64, f64) {
        match *self {
            Line2::Slope { k, b } => {
                let n = (1.0 + k * k).sqrt();
                (-k / n, 1.0 / n, b / n)
            }
            Line2::Vertical { c } => (1.0, 0.0, c),
        }
    }

    /// Signed distance from a point to the line.
    pub fn distance(&self, p: Vec2) -> f64 {
        let (a, b, c) = self.general();
        a * p.x + b * p.y - c
    }

    /// Unit direction vector of the line.
    pub fn direction(&self) -> Vec2 {
        let (a, b, _) = self.general();
        Vec2::new(-b, a)
    }

    /// Point on the line at parameter `t` (arc length from the foot of the
    /// origin perpendicular).
    pub fn point_at(&self, t: f64) -> Vec2 {
        let (a, b, c) = self.general();
        let base = Vec2::new(a * c, b * c);
        let dir = Vec2::new(-b, a);
        base + dir * t
    }

    /// Intersection with another line, if they are not parallel.
    pub fn intersect(&self, other: &Line2) -> Option<Vec2> {
        let (a1, b1, c1) = self.general();
        let (a2, b2, c2) = other.general();
        let det = a1 * b2 - a2 * b1;
        if det.abs() < 1e-14 {
            return None;
        }
        Some(Vec2::new((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det))
    }
}

/// Intersection of the two lines through `(p1, p2)` and `(q1, q2)`.
/// Returns `None` when the lines are parallel (relative to `scale`).
pub fn intersect_point_lines(p1: Vec2, p2: Vec2, q1: Vec2, q2: Vec2, scale: f64) -> Option<Vec2> {
    let dp = p2 - p1;
    let dq = q2 - q1;
    let det = dp.cross(dq);
    if det.abs() < 1e-12 * scale.max(1e-300) {
        return None;
    }
    let t = (q1 - p1).cross(dq) / det;
    Some(p1 + dp * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn top_view_projects_z_away() {
        assert_eq!(Vec3::new(1.0, 2.0, 3.0).top_view(), Vec2::new(1.0, 2.0));
        assert_eq!(Vec3::new(0.0, 0.0, 5.0).top_view(), Vec2::new(0.0, 0.0));
        assert_eq!(Vec3::new(-1.5, 2.0, 0.0).top_view(), Vec2::new(-1.5, 2.0));
    }

    #[test]
    fn iso_inner_interpolates_z_term() {
        let p = Vec3::new(1.0, 2.0, 3.0);
        let q = Vec3::new(4.0, 5.0, 6.0);
        assert_relative_eq!(iso_inner(p, q, 0.0), 14.0);
        assert_relative_eq!(iso_inner(p, q, 1.0), 32.0);
        assert_relative_eq!(iso_inner(p, q, 0.5), 23.0);
    }

    #[test]
    fn duality_examples() {
        // Polarity center: (0,0,0) <-> z = 0.
        let pl = dual_of_point(Vec3::ZERO);
        assert_eq!(pl, Plane::new(0.0, 0.0, 0.0));
        // Plane z = x corresponds to the point (1,0,0).
        assert_eq!(dual_of_plane(&Plane::new(1.0, 0.0, 0.0)), Vec3::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn duality_is_an_involution() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 20.0
        };
        for _ in 0..200 {
            let p = Vec3::new(next(), next(), next());
            let q = dual_of_plane(&dual_of_point(p));
            assert!((q - p).norm() <= 1e-12 * (1.0 + p.norm()));
        }
    }

    #[test]
    fn line_intersection() {
        let l1 = Line2::vertical(1.0);
        let l2 = Line2::slope(0.0, 1.0);
        let p = l1.intersect(&l2).unwrap();
        assert_relative_eq!(p.x, 1.0);
        assert_relative_eq!(p.y, 1.0);
        assert!(Line2::vertical(0.0).intersect(&Line2::vertical(1.0)).is_none());
    }

    #[test]
    fn line_point_at_lies_on_line() {
        for line in [Line2::slope(2.0, -1.0), Line2::vertical(3.0)] {
            for t in [-2.0, 0.0, 0.7, 5.0] {
                assert!(line.distance(line.point_at(t)).abs() < 1e-12);
            }
        }
    }
}
