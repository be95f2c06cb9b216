//! Solvers for the seven single-fold rules.
//!
//! Each solver returns every crease satisfying its rule as a
//! [`FoldSolution`]: canonical lines, pairwise distinct, sorted by normal
//! angle in `[0, π)` and then by offset. An empty solution is a valid
//! answer for the rules whose fold may not exist (5 and 7); malformed input
//! is an error.

mod beloch;

use std::cmp::Ordering;
use std::fmt;

pub use beloch::{axiom6, beloch_instance_for_cubic, crease_slope, solve_cubic_by_fold, BelochInstance};

use crate::error::{Error, Result};
use crate::geom::{Line, Point, Tolerance};

/// The seven fold rules, `O1` through `O7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Crease through two points.
    O1,
    /// Point onto point.
    O2,
    /// Line onto line.
    O3,
    /// Crease through a point, perpendicular to a line.
    O4,
    /// Crease through one point, placing another onto a line.
    O5,
    /// Two points onto two lines.
    O6,
    /// Point onto a line, crease perpendicular to another line.
    O7,
}

/// Argument kinds, in order, for each axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgKind {
    Point,
    Line,
}

impl ArgKind {
    pub fn name(self) -> &'static str {
        match self {
            ArgKind::Point => "point",
            ArgKind::Line => "line",
        }
    }
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::O1,
        Axiom::O2,
        Axiom::O3,
        Axiom::O4,
        Axiom::O5,
        Axiom::O6,
        Axiom::O7,
    ];

    pub fn id(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_id(id: u8) -> Option<Self> {
        Self::ALL.get(usize::from(id).checked_sub(1)?).copied()
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let id = name.strip_prefix('O')?.parse().ok()?;
        Self::from_id(id)
    }

    pub fn signature(self) -> &'static [ArgKind] {
        use ArgKind::{Line as L, Point as P};
        match self {
            Axiom::O1 | Axiom::O2 => &[P, P],
            Axiom::O3 => &[L, L],
            Axiom::O4 => &[P, L],
            Axiom::O5 => &[P, P, L],
            Axiom::O6 => &[P, L, P, L],
            Axiom::O7 => &[P, L, L],
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.id())
    }
}

/// Concrete inputs of one fold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FoldInput {
    O1 { p1: Point, p2: Point },
    O2 { p1: Point, p2: Point },
    O3 { l1: Line, l2: Line },
    O4 { p: Point, l: Line },
    O5 { a: Point, b: Point, p: Line },
    O6 { a: Point, p: Line, b: Point, q: Line },
    O7 { a: Point, p: Line, q: Line },
}

impl FoldInput {
    pub fn axiom(&self) -> Axiom {
        match self {
            FoldInput::O1 { .. } => Axiom::O1,
            FoldInput::O2 { .. } => Axiom::O2,
            FoldInput::O3 { .. } => Axiom::O3,
            FoldInput::O4 { .. } => Axiom::O4,
            FoldInput::O5 { .. } => Axiom::O5,
            FoldInput::O6 { .. } => Axiom::O6,
            FoldInput::O7 { .. } => Axiom::O7,
        }
    }

    pub fn solve(&self, tol: &Tolerance) -> Result<FoldSolution> {
        match *self {
            FoldInput::O1 { p1, p2 } => axiom1(p1, p2, tol),
            FoldInput::O2 { p1, p2 } => axiom2(p1, p2, tol),
            FoldInput::O3 { l1, l2 } => axiom3(&l1, &l2, tol),
            FoldInput::O4 { p, l } => Ok(axiom4(p, &l, tol)),
            FoldInput::O5 { a, b, p } => axiom5(a, b, &p, tol),
            FoldInput::O6 { a, p, b, q } => axiom6(&BelochInstance::new(a, p, b, q, tol)?, tol),
            FoldInput::O7 { a, p, q } => axiom7(a, &p, &q, tol),
        }
    }
}

/// The creases produced by one fold rule.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldSolution {
    axiom: Axiom,
    creases: Vec<Line>,
}

impl FoldSolution {
    /// Sorts and deduplicates `creases`.
    pub fn new(axiom: Axiom, mut creases: Vec<Line>, tol: &Tolerance) -> Self {
        creases.sort_by(|a, b| crease_order(a, b, tol));
        let mut kept: Vec<Line> = Vec::with_capacity(creases.len());
        for c in creases {
            let dup = kept.iter().any(|k| {
                let scale = 1f64.max(k.d().abs()).max(c.d().abs());
                k.triple_distance(&c) <= tol.eps_degenerate * scale
            });
            if !dup {
                kept.push(c);
            }
        }
        Self { axiom, creases: kept }
    }

    pub fn axiom(&self) -> Axiom {
        self.axiom
    }

    pub fn axiom_id(&self) -> u8 {
        self.axiom.id()
    }

    pub fn creases(&self) -> &[Line] {
        &self.creases
    }

    pub fn len(&self) -> usize {
        self.creases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.creases.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Line> {
        self.creases.get(index)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Line> {
        self.creases.iter()
    }

    /// Index of the crease closest to `p`; the lowest index wins ties.
    pub fn nearest(&self, p: Point) -> Option<usize> {
        self.creases
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.distance(p).total_cmp(&b.distance(p)))
            .map(|(i, _)| i)
    }

    /// Index of the first crease satisfying `pred`.
    pub fn position(&self, pred: impl FnMut(&Line) -> bool) -> Option<usize> {
        self.creases.iter().position(pred)
    }
}

impl<'a> IntoIterator for &'a FoldSolution {
    type Item = &'a Line;
    type IntoIter = std::slice::Iter<'a, Line>;
    fn into_iter(self) -> Self::IntoIter {
        self.creases.iter()
    }
}

fn crease_order(a: &Line, b: &Line, tol: &Tolerance) -> Ordering {
    let (ta, tb) = (a.normal_angle(), b.normal_angle());
    if (ta - tb).abs() > tol.eps_degenerate {
        ta.total_cmp(&tb)
    } else {
        a.d().total_cmp(&b.d())
    }
}

/// Rule 1: the crease through two points.
pub fn axiom1(p1: Point, p2: Point, tol: &Tolerance) -> Result<FoldSolution> {
    let line = Line::through(p1, p2, tol)?;
    Ok(FoldSolution::new(Axiom::O1, vec![line], tol))
}

/// Rule 2: the crease taking `p1` onto `p2`, their perpendicular bisector.
pub fn axiom2(p1: Point, p2: Point, tol: &Tolerance) -> Result<FoldSolution> {
    Ok(FoldSolution::new(
        Axiom::O2,
        vec![perpendicular_bisector(p1, p2, tol)?],
        tol,
    ))
}

pub(crate) fn perpendicular_bisector(p1: Point, p2: Point, tol: &Tolerance) -> Result<Line> {
    let v = p2 - p1;
    let len = v.norm();
    if len <= tol.eps_degenerate {
        return Err(Error::CoincidentPoints);
    }
    let n = v * (1.0 / len);
    Ok(Line::from_unit(n.x, n.y, n.dot(p1.midpoint(p2))))
}

/// Rule 3: creases taking `l1` onto `l2`. Two angle bisectors when the
/// lines cross, the midline when they are parallel.
pub fn axiom3(l1: &Line, l2: &Line, tol: &Tolerance) -> Result<FoldSolution> {
    let (n1, n2) = (l1.normal(), l2.normal());
    let creases = if n1.cross(n2).abs() <= tol.eps_degenerate {
        let sign = if n1.dot(n2) >= 0.0 { 1.0 } else { -1.0 };
        let d2 = sign * l2.d();
        if (l1.d() - d2).abs() <= tol.eps_geom {
            return Err(Error::IdenticalLines);
        }
        vec![Line::from_unit(n1.x, n1.y, 0.5 * (l1.d() + d2))]
    } else {
        [(n1 - n2, l1.d() - l2.d()), (n1 + n2, l1.d() + l2.d())]
            .into_iter()
            .map(|(n, d)| {
                let len = n.norm();
                Line::from_unit(n.x / len, n.y / len, d / len)
            })
            .collect()
    };
    Ok(FoldSolution::new(Axiom::O3, creases, tol))
}

/// Rule 4: the crease through `p` perpendicular to `l`.
pub fn axiom4(p: Point, l: &Line, tol: &Tolerance) -> FoldSolution {
    let n = l.direction();
    FoldSolution::new(Axiom::O4, vec![Line::from_unit(n.x, n.y, n.dot(p))], tol)
}

/// Rule 5: creases through `a` that place `b` onto `p`.
///
/// With `r = |ab|` and `h` the distance from `a` to `p` there are two
/// creases when `r > h`, one at tangency, none when `r < h`, each decision
/// taken with `eps_geom` slack.
pub fn axiom5(a: Point, b: Point, p: &Line, tol: &Tolerance) -> Result<FoldSolution> {
    let r = a.distance(b);
    if r <= tol.eps_degenerate {
        return Err(Error::CoincidentPoints);
    }
    let images = circle_line_points(a, r, p, tol);
    let creases = images
        .into_iter()
        .map(|img| crease_through_swapping(a, b, img))
        .collect();
    Ok(FoldSolution::new(Axiom::O5, creases, tol))
}

/// Points of `p` at distance `r` from `center`, classified with `eps_geom`.
pub(crate) fn circle_line_points(center: Point, r: f64, p: &Line, tol: &Tolerance) -> Vec<Point> {
    let h = p.distance(center);
    let foot = center.project(p);
    if r > h + tol.eps_geom {
        let w = ((r - h) * (r + h)).sqrt();
        let dir = p.direction();
        vec![foot + dir * w, foot - dir * w]
    } else if (r - h).abs() <= tol.eps_geom {
        vec![foot]
    } else {
        Vec::new()
    }
}

/// The crease through `pivot` that reflects `from` onto `to`, assuming
/// `|pivot from| = |pivot to|`. Picks whichever construction is better
/// conditioned; both pass through `pivot` exactly.
fn crease_through_swapping(pivot: Point, from: Point, to: Point) -> Line {
    let mid = from.midpoint(to) - pivot;
    let chord = to - from;
    if mid.norm() >= chord.norm() {
        Line::through_with_direction(pivot, mid * (1.0 / mid.norm()))
    } else {
        let n = chord * (1.0 / chord.norm());
        Line::from_unit(n.x, n.y, n.dot(pivot))
    }
}

/// Rule 7: the crease perpendicular to `q` that places `a` onto `p`.
///
/// Such a fold slides `a` along the line through it parallel to `q`; if
/// that line is parallel to `p` there is no crease, or infinitely many when
/// it coincides with `p`.
pub fn axiom7(a: Point, p: &Line, q: &Line, tol: &Tolerance) -> Result<FoldSolution> {
    let u = q.direction();
    let along = p.normal().dot(u);
    if along.abs() <= tol.eps_degenerate {
        if p.contains(a, tol) {
            return Err(Error::AmbiguousFold);
        }
        return Ok(FoldSolution::new(Axiom::O7, Vec::new(), tol));
    }
    let s = -p.signed_distance(a) / along;
    let crease = Line::from_unit(u.x, u.y, u.dot(a) + 0.5 * s);
    Ok(FoldSolution::new(Axiom::O7, vec![crease], tol))
}

/// Numeric violation of a fold rule's defining conditions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Residuals {
    /// Largest point-on-line or point-onto-point violation.
    pub incidence: f64,
    /// `|cos|` of the angle between crease and the line it must be
    /// perpendicular to (rules 4 and 7), zero otherwise.
    pub perpendicularity: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.incidence.max(self.perpendicularity)
    }

    pub fn accepted(&self, tol: &Tolerance) -> bool {
        self.max() < tol.eps_geom
    }
}

/// Evaluates the defining conditions of `input`'s rule on `crease`.
pub fn verify_fold(input: &FoldInput, crease: &Line) -> Residuals {
    let perp = |l: &Line| crease.normal().dot(l.normal()).abs();
    match *input {
        FoldInput::O1 { p1, p2 } => Residuals {
            incidence: crease.distance(p1).max(crease.distance(p2)),
            perpendicularity: 0.0,
        },
        FoldInput::O2 { p1, p2 } => Residuals {
            incidence: p1.reflect(crease).distance(p2),
            perpendicularity: 0.0,
        },
        FoldInput::O3 { l1, l2 } => {
            let s1 = l1.anchor();
            let s2 = s1 + l1.direction();
            Residuals {
                incidence: l2
                    .distance(s1.reflect(crease))
                    .max(l2.distance(s2.reflect(crease))),
                perpendicularity: 0.0,
            }
        }
        FoldInput::O4 { p, l } => Residuals {
            incidence: crease.distance(p),
            perpendicularity: perp(&l),
        },
        FoldInput::O5 { a, b, p } => Residuals {
            incidence: crease.distance(a).max(p.distance(b.reflect(crease))),
            perpendicularity: 0.0,
        },
        FoldInput::O6 { a, p, b, q } => Residuals {
            incidence: p
                .distance(a.reflect(crease))
                .max(q.distance(b.reflect(crease))),
            perpendicularity: 0.0,
        },
        FoldInput::O7 { a, p, q } => Residuals {
            incidence: p.distance(a.reflect(crease)),
            perpendicularity: perp(&q),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn line(a: f64, b: f64, c: f64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    fn assert_verified(input: FoldInput, sol: &FoldSolution) {
        for c in sol {
            let r = verify_fold(&input, c);
            assert!(r.accepted(&tol()), "{input:?} crease {c} residuals {r:?}");
        }
    }

    #[test]
    fn axiom_names_round_trip() {
        for ax in Axiom::ALL {
            assert_eq!(Axiom::from_name(&ax.to_string()), Some(ax));
            assert_eq!(Axiom::from_id(ax.id()), Some(ax));
        }
        assert_eq!(Axiom::from_name("O8"), None);
        assert_eq!(Axiom::from_name("O0"), None);
        assert_eq!(Axiom::from_id(0), None);
    }

    #[test]
    fn axiom1_examples() {
        let sol = axiom1(pt(0.0, 0.0), pt(1.0, 0.0), &tol()).unwrap();
        assert_eq!(sol.creases(), &[line(0.0, 1.0, 0.0)]);
        assert_eq!(axiom1(pt(0.0, 0.0), pt(0.0, 0.0), &tol()), Err(Error::CoincidentPoints));
        let input = FoldInput::O1 { p1: pt(0.0, 0.0), p2: pt(3.0, 4.0) };
        let sol = input.solve(&tol()).unwrap();
        assert_eq!(sol.len(), 1);
        assert_verified(input, &sol);
    }

    #[test]
    fn axiom2_examples() {
        let sol = axiom2(pt(0.0, 0.0), pt(2.0, 0.0), &tol()).unwrap();
        assert_eq!(sol.creases(), &[line(1.0, 0.0, 1.0)]);
        let sol = axiom2(pt(0.0, -1.0), pt(0.0, 1.0), &tol()).unwrap();
        assert_eq!(sol.creases(), &[line(0.0, 1.0, 0.0)]);

        let (p1, p2) = (pt(1.0, 2.0), pt(4.0, 6.0));
        let sol = axiom2(p1, p2, &tol()).unwrap();
        let c = sol.creases()[0];
        assert!(c.distance(pt(2.5, 4.0)) < 1e-12);
        assert!((c.nx() - 0.6).abs() < 1e-15 && (c.ny() - 0.8).abs() < 1e-15);
        assert!(p1.reflect(&c).distance(p2) < 1e-12);
    }

    #[test]
    fn axiom3_examples() {
        let x_axis = line(0.0, 1.0, 0.0);
        let y_axis = line(1.0, 0.0, 0.0);
        let sol = axiom3(&x_axis, &y_axis, &tol()).unwrap();
        assert_eq!(sol.len(), 2);
        let diag = Line::through(pt(0.0, 0.0), pt(1.0, 1.0), &tol()).unwrap();
        let anti = Line::through(pt(0.0, 0.0), pt(-1.0, 1.0), &tol()).unwrap();
        assert!(sol.iter().any(|c| c.triple_distance(&diag) < 1e-15));
        assert!(sol.iter().any(|c| c.triple_distance(&anti) < 1e-15));

        let sol = axiom3(&line(0.0, 1.0, 0.0), &line(0.0, 1.0, 2.0), &tol()).unwrap();
        assert_eq!(sol.creases(), &[line(0.0, 1.0, 1.0)]);
        // Parallel with opposite stored normals near the canonical boundary.
        let a = Line::new(1e-13, 1.0, 0.0).unwrap();
        let b = Line::new(-1e-13, 1.0, 2.0).unwrap();
        assert_eq!(axiom3(&a, &b, &tol()).unwrap().len(), 1);

        assert_eq!(axiom3(&x_axis, &x_axis, &tol()), Err(Error::IdenticalLines));

        // y = 0 and the 60° line: bisectors in the 30° and 120° directions.
        let (s, c) = 60f64.to_radians().sin_cos();
        let l60 = Line::through(pt(0.0, 0.0), pt(c, s), &tol()).unwrap();
        let input = FoldInput::O3 { l1: x_axis, l2: l60 };
        let sol = input.solve(&tol()).unwrap();
        assert_verified(input, &sol);
        let mut dirs: Vec<f64> = sol
            .iter()
            .map(|l| l.direction().y.atan2(l.direction().x).rem_euclid(std::f64::consts::PI).to_degrees())
            .collect();
        dirs.sort_by(f64::total_cmp);
        assert!((dirs[0] - 30.0).abs() < 1e-12 && (dirs[1] - 120.0).abs() < 1e-12);
        assert!(sol.creases()[0].normal().dot(sol.creases()[1].normal()).abs() < 1e-15);
    }

    #[test]
    fn axiom4_examples() {
        let sol = axiom4(pt(3.0, 5.0), &line(0.0, 1.0, 0.0), &tol());
        assert_eq!(sol.creases(), &[line(1.0, 0.0, 3.0)]);
        let on = axiom4(pt(3.0, 0.0), &line(0.0, 1.0, 0.0), &tol());
        assert_eq!(on.creases(), &[line(1.0, 0.0, 3.0)]);

        let (s, c) = 20f64.to_radians().sin_cos();
        let l = line(c, s, 0.4);
        let input = FoldInput::O4 { p: Point::ORIGIN, l };
        let sol = input.solve(&tol()).unwrap();
        let crease = sol.creases()[0];
        assert!(crease.normal().dot(l.normal()).abs() < 1e-15);
        assert!(crease.d().abs() < 1e-15);
        assert_verified(input, &sol);
    }

    #[test]
    fn axiom5_examples() {
        let (a, b) = (pt(0.0, 0.0), pt(1.0, 0.0));
        let p = line(1.0, 0.0, 0.5);
        let sol = axiom5(a, b, &p, &tol()).unwrap();
        assert_eq!(sol.len(), 2);
        // Circle x² + y² = 1 meets x = 0.5 at y = ±√0.75.
        let mut images: Vec<Point> = sol.iter().map(|c| b.reflect(c)).collect();
        images.sort_by(|u, v| u.y.total_cmp(&v.y));
        assert!(images[0].distance(pt(0.5, -0.75f64.sqrt())) < 1e-12);
        assert!(images[1].distance(pt(0.5, 0.75f64.sqrt())) < 1e-12);
        assert_verified(FoldInput::O5 { a, b, p }, &sol);

        let tangent = axiom5(a, b, &line(1.0, 0.0, 1.0), &tol()).unwrap();
        assert_eq!(tangent.len(), 1);
        assert!(b.reflect(&tangent.creases()[0]).distance(b) < 1e-12);

        assert!(axiom5(a, b, &line(1.0, 0.0, 2.0), &tol()).unwrap().is_empty());
        assert_eq!(axiom5(a, a, &p, &tol()), Err(Error::CoincidentPoints));
    }

    #[test]
    fn axiom5_counts_at_tangency() {
        let t = tol();
        let (a, b) = (pt(0.3, -0.2), pt(1.8, 1.1));
        let r = a.distance(b);
        for (offset, expected) in [(-10.0, 0usize), (0.0, 1), (10.0, 2)] {
            // Line at distance r - offset·eps from a.
            let h = r - offset * t.eps_geom;
            let p = line(0.6, 0.8, 0.6 * a.x + 0.8 * a.y + h);
            let sol = axiom5(a, b, &p, &t).unwrap();
            assert_eq!(sol.len(), expected, "offset {offset}");
            assert_verified(FoldInput::O5 { a, b, p }, &sol);
        }
    }

    #[test]
    fn axiom5_point_already_on_line() {
        let (a, b) = (pt(0.0, 1.0), pt(2.0, 0.0));
        let p = line(0.0, 1.0, 0.0);
        let sol = axiom5(a, b, &p, &tol()).unwrap();
        assert_eq!(sol.len(), 2);
        assert_verified(FoldInput::O5 { a, b, p }, &sol);
    }

    #[test]
    fn axiom7_examples() {
        let a = pt(0.0, 1.0);
        let sol = axiom7(a, &line(0.0, 1.0, 0.0), &line(1.0, 0.0, 0.0), &tol()).unwrap();
        assert_eq!(sol.creases(), &[line(0.0, 1.0, 0.5)]);

        let sol = axiom7(a, &line(0.0, 1.0, 3.0), &line(0.0, 1.0, 0.0), &tol()).unwrap();
        assert!(sol.is_empty());

        assert_eq!(
            axiom7(pt(4.0, 3.0), &line(0.0, 1.0, 3.0), &line(0.0, 1.0, 0.0), &tol()),
            Err(Error::AmbiguousFold)
        );

        // A = (2,1), p: y = x, q: x-axis. The crease x = c sends A to (2c-2, 1),
        // which lies on y = x when c = 1.5.
        let input = FoldInput::O7 {
            a: pt(2.0, 1.0),
            p: Line::through(pt(0.0, 0.0), pt(1.0, 1.0), &tol()).unwrap(),
            q: line(0.0, 1.0, 0.0),
        };
        let sol = input.solve(&tol()).unwrap();
        assert_eq!(sol.len(), 1);
        assert!(sol.creases()[0].triple_distance(&line(1.0, 0.0, 1.5)) < 1e-15);
        assert_verified(input, &sol);
    }

    #[test]
    fn axiom7_counts_at_parallel_boundary() {
        let t = tol();
        let p = line(0.0, 1.0, 3.0);
        let q = line(0.0, 1.0, -1.0);
        for (dy, expect_ambiguous) in [(-10.0, false), (0.0, true), (10.0, false)] {
            let a = pt(0.7, 3.0 + dy * t.eps_geom);
            match axiom7(a, &p, &q, &t) {
                Err(Error::AmbiguousFold) => assert!(expect_ambiguous),
                Ok(sol) => {
                    assert!(!expect_ambiguous);
                    assert!(sol.is_empty());
                }
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn verify_fold_examples() {
        let r = verify_fold(
            &FoldInput::O2 { p1: pt(0.0, 0.0), p2: pt(2.0, 0.0) },
            &line(1.0, 0.0, 1.0),
        );
        assert_eq!(r.max(), 0.0);
        let r = verify_fold(
            &FoldInput::O4 { p: pt(3.0, 5.0), l: line(0.0, 1.0, 0.0) },
            &line(1.0, 0.0, 3.0),
        );
        assert_eq!(r.max(), 0.0);
        let bad = verify_fold(
            &FoldInput::O4 { p: pt(3.0, 5.0), l: line(0.0, 1.0, 0.0) },
            &line(0.0, 1.0, 5.0),
        );
        assert!(!bad.accepted(&tol()));
    }

    #[test]
    fn ordering_is_by_normal_angle_then_offset() {
        let creases = vec![
            line(0.0, 1.0, 2.0),
            line(1.0, 0.0, 5.0),
            line(0.0, 1.0, -1.0),
            line(1.0, -1.0, 0.0),
            line(1.0, 0.0, 5.0),
        ];
        let sol = FoldSolution::new(Axiom::O3, creases, &tol());
        let triples: Vec<(f64, f64, f64)> = sol.iter().map(|l| (l.nx(), l.ny(), l.d())).collect();
        assert_eq!(sol.len(), 4);
        assert_eq!(triples[0], (1.0, 0.0, 5.0));
        assert_eq!(triples[1], (0.0, 1.0, -1.0));
        assert_eq!(triples[2], (0.0, 1.0, 2.0));
        let again = FoldSolution::new(Axiom::O3, sol.creases().iter().rev().copied().collect(), &tol());
        assert_eq!(again, sol);
    }
}
