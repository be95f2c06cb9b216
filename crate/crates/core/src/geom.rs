//! Points, canonical lines, and the handful of Euclidean operations every
//! fold is built from.
//!
//! Lines are stored as a unit normal and signed offset, `nx·x + ny·y = d`.
//! The sign of the triple is fixed so that two equal lines compare equal
//! componentwise: `nx > 1e-12`, or `|nx| <= 1e-12` and `ny > 0`.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Threshold on `nx` used by the canonical sign rule.
pub const CANONICAL_EPS: f64 = 1e-12;

/// Absolute tolerances for incidence tests and degeneracy checks.
///
/// All tolerances are absolute: constructions are expected to live on a
/// sheet of diameter around ten units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Incidence and equality tests.
    pub eps_geom: f64,
    /// Parallelism, zero length, normalization.
    pub eps_degenerate: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_geom: 1e-9,
            eps_degenerate: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_degenerate: f64) -> Result<Self> {
        let tol = Self {
            eps_geom,
            eps_degenerate,
        };
        tol.validate()?;
        Ok(tol)
    }

    /// Default degenerate threshold with a custom incidence tolerance.
    pub fn with_geom(eps_geom: f64) -> Result<Self> {
        Self::new(eps_geom, Self::default().eps_degenerate.min(eps_geom))
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.eps_degenerate > 0.0
            && self.eps_degenerate <= self.eps_geom
            && self.eps_geom <= 1e-3;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTolerance(format!(
                "need 0 < eps_degenerate ({}) <= eps_geom ({}) <= 1e-3",
                self.eps_degenerate, self.eps_geom
            )))
        }
    }
}

/// A marked point on the sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite point");
        Self { x, y }
    }

    /// Checked constructor for coordinates coming from outside the library.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) * 0.5, (self.y + other.y) * 0.5)
    }

    /// Mirror image across `line`.
    #[inline]
    pub fn reflect(self, line: &Line) -> Point {
        let n = line.normal();
        self - n * (2.0 * line.signed_distance(self))
    }

    /// Orthogonal projection onto `line`.
    #[inline]
    pub fn project(self, line: &Line) -> Point {
        self - line.normal() * line.signed_distance(self)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An infinite line `{ P : nx·P.x + ny·P.y = d }` in canonical form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    nx: f64,
    ny: f64,
    d: f64,
}

impl Line {
    /// Normalizes `(a, b, c)` for the line `a·x + b·y = c` and applies the
    /// canonical sign rule.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateLine);
        }
        let len = a.hypot(b);
        if len <= CANONICAL_EPS {
            return Err(Error::DegenerateLine);
        }
        Ok(Self::from_unit(a / len, b / len, c / len))
    }

    /// Builds a line from an already-unit normal, flipping the sign if needed.
    pub(crate) fn from_unit(nx: f64, ny: f64, d: f64) -> Self {
        let canonical = nx > CANONICAL_EPS || (nx.abs() <= CANONICAL_EPS && ny > 0.0);
        let line = if canonical {
            Self { nx, ny, d }
        } else {
            Self {
                nx: -nx,
                ny: -ny,
                d: -d,
            }
        };
        debug_assert!(line.is_canonical(), "line {line:?} failed canonical check");
        line
    }

    /// Line through two points. The result does not depend on argument order.
    pub fn through(p1: Point, p2: Point, tol: &Tolerance) -> Result<Self> {
        let dir = p2 - p1;
        let len = dir.norm();
        if len <= tol.eps_degenerate {
            return Err(Error::CoincidentPoints);
        }
        let n = dir.perp() * (1.0 / len);
        Ok(Self::from_unit(n.x, n.y, n.dot(p1.midpoint(p2))))
    }

    /// Line through `p` with unit direction `dir`.
    pub(crate) fn through_with_direction(p: Point, dir: Point) -> Self {
        let n = dir.perp();
        Self::from_unit(n.x, n.y, n.dot(p))
    }

    #[inline]
    pub fn nx(&self) -> f64 {
        self.nx
    }

    #[inline]
    pub fn ny(&self) -> f64 {
        self.ny
    }

    #[inline]
    pub fn d(&self) -> f64 {
        self.d
    }

    #[inline]
    pub fn normal(&self) -> Point {
        Point::new(self.nx, self.ny)
    }

    /// Unit direction, the normal turned clockwise.
    #[inline]
    pub fn direction(&self) -> Point {
        Point::new(self.ny, -self.nx)
    }

    /// The point of the line closest to the origin.
    #[inline]
    pub fn anchor(&self) -> Point {
        self.normal() * self.d
    }

    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.nx * p.x + self.ny * p.y - self.d
    }

    #[inline]
    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    pub fn contains(&self, p: Point, tol: &Tolerance) -> bool {
        self.distance(p) <= tol.eps_geom
    }

    pub fn is_canonical(&self) -> bool {
        let unit = ((self.nx * self.nx + self.ny * self.ny) - 1.0).abs() <= 1e-12;
        let sign = self.nx > CANONICAL_EPS || (self.nx.abs() <= CANONICAL_EPS && self.ny > 0.0);
        unit && sign && self.d.is_finite()
    }

    /// Mirror image of `self` across `mirror`.
    pub fn reflect(&self, mirror: &Line) -> Line {
        let k = 2.0 * (self.nx * mirror.nx + self.ny * mirror.ny);
        Line::from_unit(
            self.nx - k * mirror.nx,
            self.ny - k * mirror.ny,
            self.d - k * mirror.d,
        )
    }

    /// Intersection point. Symmetric in its arguments bit for bit.
    pub fn intersect(&self, other: &Line, tol: &Tolerance) -> Result<Point> {
        let det = self.nx * other.ny - self.ny * other.nx;
        if det.abs() <= tol.eps_degenerate {
            return Err(Error::ParallelLines);
        }
        let x = (self.d * other.ny - other.d * self.ny) / det;
        let y = (self.nx * other.d - other.nx * self.d) / det;
        Ok(Point::new(x, y))
    }

    /// Largest componentwise difference of the canonical triples.
    pub fn triple_distance(&self, other: &Line) -> f64 {
        (self.nx - other.nx)
            .abs()
            .max((self.ny - other.ny).abs())
            .max((self.d - other.d).abs())
    }

    /// Normal angle folded into `[0, π)`; the primary fold-ordering key.
    pub fn normal_angle(&self) -> f64 {
        let a = self.ny.atan2(self.nx).rem_euclid(std::f64::consts::PI);
        if a >= std::f64::consts::PI {
            0.0
        } else {
            a
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y = {}", self.nx, self.ny, self.d)
    }
}

/// Direction of the ray `origin → through` in radians, in `[0, 2π)`.
pub fn angle_of_ray(origin: Point, through: Point, tol: &Tolerance) -> Result<f64> {
    let v = through - origin;
    if v.norm() <= tol.eps_degenerate {
        return Err(Error::CoincidentPoints);
    }
    let a = v.y.atan2(v.x).rem_euclid(TAU);
    Ok(if a >= TAU { 0.0 } else { a })
}

/// Unsigned angle `∠(p1, vertex, p2)` in `[0, π]`.
pub fn angle_at(vertex: Point, p1: Point, p2: Point) -> f64 {
    let u = p1 - vertex;
    let v = p2 - vertex;
    u.cross(v).abs().atan2(u.dot(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn deg(a: f64) -> f64 {
        a.to_radians()
    }

    #[test]
    fn line_through_axes() {
        let x_axis = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 0.0), &tol()).unwrap();
        assert_eq!((x_axis.nx(), x_axis.ny(), x_axis.d()), (0.0, 1.0, 0.0));
        let y_axis = Line::through(Point::new(0.0, 0.0), Point::new(0.0, 1.0), &tol()).unwrap();
        assert_eq!((y_axis.nx(), y_axis.ny(), y_axis.d()), (1.0, 0.0, 0.0));
    }

    #[test]
    fn line_through_diagonal_is_canonical() {
        let p1 = Point::new(0.0, 0.0);
        let p2 = Point::new(1.0, 1.0);
        let l = Line::through(p1, p2, &tol()).unwrap();
        assert!((l.nx() - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((l.ny() + FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(l.is_canonical());
        assert!(l.distance(p1) < 1e-12 && l.distance(p2) < 1e-12);
    }

    #[test]
    fn line_through_coincident_points() {
        let p = Point::new(0.3, -2.0);
        assert_eq!(Line::through(p, p, &tol()), Err(Error::CoincidentPoints));
    }

    #[test]
    fn canonical_sign_flips() {
        let l = Line::new(-2.0, 0.0, 4.0).unwrap();
        assert_eq!((l.nx(), l.ny(), l.d()), (1.0, 0.0, -2.0));
        let l = Line::new(0.0, -1.0, 1.0).unwrap();
        assert_eq!((l.nx(), l.ny(), l.d()), (0.0, 1.0, -1.0));
        assert_eq!(Line::new(0.0, 0.0, 1.0), Err(Error::DegenerateLine));
    }

    #[test]
    fn reflect_point_examples() {
        let x_axis = Line::new(0.0, 1.0, 0.0).unwrap();
        assert_eq!(Point::new(0.0, 1.0).reflect(&x_axis), Point::new(0.0, -1.0));
        let on = Point::new(3.5, 0.0);
        assert!(on.reflect(&x_axis).distance(on) < 1e-12);

        // Oracle: P - 2(n·P - d) n evaluated by hand with n = (cos 20°, sin 20°).
        let (s, c) = deg(20.0).sin_cos();
        let crease = Line::new(c, s, 0.7310).unwrap();
        let img = Point::new(0.0, 1.0).reflect(&crease);
        let k = 2.0 * (s - 0.7310);
        let expected = Point::new(-k * c, 1.0 - k * s);
        assert!(img.distance(expected) < 1e-15);
        assert!((img.x - 0.7311).abs() < 1e-4 && (img.y - 1.2661).abs() < 1e-4);
    }

    #[test]
    fn reflect_line_examples() {
        let x_axis = Line::new(0.0, 1.0, 0.0).unwrap();
        let y_axis = Line::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(y_axis.reflect(&x_axis), y_axis);

        let y1 = Line::new(0.0, 1.0, 1.0).unwrap();
        let r = y1.reflect(&x_axis);
        assert!(r.triple_distance(&Line::new(0.0, 1.0, -1.0).unwrap()) < 1e-15);

        // Reflect two sample points of the x-axis over y = x, rebuild the line.
        let diag = Line::through(Point::ORIGIN, Point::new(1.0, 1.0), &tol()).unwrap();
        let a = Point::new(-3.0, 0.0).reflect(&diag);
        let b = Point::new(2.0, 0.0).reflect(&diag);
        let rebuilt = Line::through(a, b, &tol()).unwrap();
        let r = x_axis.reflect(&diag);
        assert!(r.triple_distance(&rebuilt) < 1e-12);
        assert!(r.triple_distance(&y_axis) < 1e-12);
    }

    #[test]
    fn intersect_examples() {
        let x_axis = Line::new(0.0, 1.0, 0.0).unwrap();
        let y_axis = Line::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(x_axis.intersect(&y_axis, &tol()).unwrap(), Point::ORIGIN);

        let y1 = Line::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!(x_axis.intersect(&y1, &tol()), Err(Error::ParallelLines));
        assert_eq!(x_axis.intersect(&x_axis, &tol()), Err(Error::ParallelLines));

        // cos20·x + sin20·y = 0.7310 meets y = 0.5 at x = (0.7310 - 0.5·sin20)/cos20.
        let (s, c) = deg(20.0).sin_cos();
        let crease = Line::new(c, s, 0.7310).unwrap();
        let half = Line::new(0.0, 1.0, 0.5).unwrap();
        let p = crease.intersect(&half, &tol()).unwrap();
        let x = (0.7310 - 0.5 * s) / c;
        assert!((p.x - x).abs() < 1e-12 && (p.y - 0.5).abs() < 1e-12);
        assert!((p.x - 0.5959).abs() < 1e-4);
    }

    #[test]
    fn plumbing_examples() {
        let x_axis = Line::new(0.0, 1.0, 0.0).unwrap();
        assert_eq!(x_axis.distance(Point::new(0.0, 1.0)), 1.0);
        assert_eq!(Point::ORIGIN.midpoint(Point::new(2.0, 0.0)), Point::new(1.0, 0.0));
        let a = angle_of_ray(Point::ORIGIN, Point::new(1.0, 1.0), &tol()).unwrap();
        assert!((a - FRAC_PI_4).abs() < 1e-15);
        let a = angle_of_ray(Point::ORIGIN, Point::new(1.0, -1e-300), &tol()).unwrap();
        assert!((0.0..TAU).contains(&a));
        assert_eq!(
            angle_of_ray(Point::ORIGIN, Point::ORIGIN, &tol()),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::default().validate().is_ok());
        assert!(Tolerance::new(1e-9, 1e-8).is_err());
        assert!(Tolerance::new(1e-2, 1e-12).is_err());
        assert!(Tolerance::new(1e-9, 0.0).is_err());
        assert_eq!(Tolerance::with_geom(1e-6).unwrap().eps_degenerate, 1e-12);
    }
}
