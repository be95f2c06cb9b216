//! Rule 6: place `a` onto `p` and `b` onto `q` with one crease.
//!
//! A crease reflects a point onto a line exactly when it is tangent to the
//! parabola with that point as focus and that line as directrix, so rule-6
//! creases are the common tangents of two parabolas.
//!
//! We work in a similarity frame where `a = (0, 1)` and `p = {y = -1}`.
//! The tangents of `x² = 4y` are `y = m·x - m²`; requiring the reflection
//! of `b = (b1, b2)` to land on `q = {n·P = e}` and clearing the
//! denominator `1 + m²` gives
//!
//! ```text
//! 2·n1·m³ + (k - 2·n1·b1 - 2·n2)·m² + 2·(n2·b1 + n1·b2)·m + (k - 2·n2·b2) = 0
//! ```
//!
//! with `k = n·b - e`. Vertical lines in this frame never reflect `a` onto
//! `p`, so the finite roots are all the creases. Each root is Newton-polished
//! against the world-space residual of `b` before being accepted.

use crate::cubic::{solve_cubic_real, Cubic};
use crate::error::{Error, Result};
use crate::geom::{Line, Point, Tolerance};

use super::{verify_fold, Axiom, FoldInput, FoldSolution};

/// Two foci with their directrices. Neither focus may lie on its own line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BelochInstance {
    a: Point,
    p: Line,
    b: Point,
    q: Line,
}

impl BelochInstance {
    pub fn new(a: Point, p: Line, b: Point, q: Line, tol: &Tolerance) -> Result<Self> {
        if p.contains(a, tol) || q.contains(b, tol) {
            return Err(Error::DegenerateFocus);
        }
        Ok(Self { a, p, b, q })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn p(&self) -> Line {
        self.p
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn q(&self) -> Line {
        self.q
    }

    pub fn input(&self) -> FoldInput {
        FoldInput::O6 {
            a: self.a,
            p: self.p,
            b: self.b,
            q: self.q,
        }
    }

    /// The rule-6 polynomial in the tangent slope `m` of the local frame.
    fn slope_cubic(&self, frame: &Frame) -> Cubic {
        let b = frame.to_local(self.b);
        let (n, e) = frame.local_line(&self.q);
        let k = n.dot(b) - e;
        Cubic::new(
            2.0 * n.x,
            k - 2.0 * n.x * b.x - 2.0 * n.y,
            2.0 * (n.y * b.x + n.x * b.y),
            k - 2.0 * n.y * b.y,
        )
    }
}

/// Similarity taking `focus` to `(0, 1)` and `directrix` to `y = -1`.
struct Frame {
    origin: Point,
    e1: Point,
    e2: Point,
    scale: f64,
}

impl Frame {
    fn new(focus: Point, directrix: &Line) -> Self {
        let h = directrix.signed_distance(focus);
        let e2 = directrix.normal() * h.signum();
        let scale = 0.5 * h.abs();
        Self {
            origin: focus - e2 * scale,
            e1: Point::new(e2.y, -e2.x),
            e2,
            scale,
        }
    }

    fn to_local(&self, p: Point) -> Point {
        let v = p - self.origin;
        Point::new(v.dot(self.e1) / self.scale, v.dot(self.e2) / self.scale)
    }

    /// Unit normal and offset of `l` in local coordinates.
    fn local_line(&self, l: &Line) -> (Point, f64) {
        let n = l.normal();
        (
            Point::new(n.dot(self.e1), n.dot(self.e2)),
            (l.d() - n.dot(self.origin)) / self.scale,
        )
    }

    /// World line of the local tangent `y = m·x - m²`.
    fn tangent(&self, m: f64) -> Line {
        let len = m.hypot(1.0);
        let (nx, ny) = (m / len, -1.0 / len);
        let n = self.e1 * nx + self.e2 * ny;
        let offset = m * m / len;
        Line::from_unit(n.x, n.y, n.dot(self.origin) + self.scale * offset)
    }
}

/// Rule 6. Returns between one and three creases.
///
/// Errors with [`Error::NoSolution`] when no real crease survives, and with
/// [`Error::AmbiguousFold`] when both conditions coincide (same focus, same
/// directrix).
pub fn axiom6(inst: &BelochInstance, tol: &Tolerance) -> Result<FoldSolution> {
    let frame = Frame::new(inst.a, &inst.p);
    let cubic = inst.slope_cubic(&frame);
    let roots = match solve_cubic_real(&cubic) {
        Ok(roots) => roots,
        Err(Error::ZeroPolynomial) => return Err(Error::AmbiguousFold),
        Err(e) => return Err(e),
    };
    let input = inst.input();
    let creases: Vec<Line> = roots
        .iter()
        .map(|r| frame.tangent(polish_slope(inst, &frame, r.value)))
        .filter(|c| verify_fold(&input, c).accepted(tol))
        .collect();
    if creases.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(FoldSolution::new(Axiom::O6, creases, tol))
}

/// Newton on the signed distance of `b`'s image from `q`, keeping only steps
/// that reduce it.
fn polish_slope(inst: &BelochInstance, frame: &Frame, mut m: f64) -> f64 {
    let residual = |m: f64| inst.q.signed_distance(inst.b.reflect(&frame.tangent(m)));
    let mut r = residual(m);
    for _ in 0..16 {
        if r == 0.0 {
            break;
        }
        let h = 1e-6 * m.abs().max(1.0);
        let dr = (residual(m + h) - residual(m - h)) / (2.0 * h);
        if dr == 0.0 || !dr.is_finite() {
            break;
        }
        let next = m - r / dr;
        let r_next = residual(next);
        if !(r_next.abs() < r.abs()) {
            break;
        }
        m = next;
        r = r_next;
    }
    m
}

/// A rule-6 instance whose crease slopes are the real roots of
/// `t³ + a·t² + b·t + c`.
///
/// With `a = (0, 1)` and `p = {y = -1}` the frame is the identity, and
/// choosing `b = (c - a, b)`, `q = {x = -(a + c)}` turns the rule-6
/// polynomial into twice the target cubic. Degenerate when `c = 0`.
pub fn beloch_instance_for_cubic(a: f64, b: f64, c: f64, tol: &Tolerance) -> Result<BelochInstance> {
    let focus_b = Point::try_new(c - a, b)?;
    let q = Line::new(1.0, 0.0, -(a + c))?;
    BelochInstance::new(
        Point::new(0.0, 1.0),
        Line::new(0.0, 1.0, -1.0)?,
        focus_b,
        q,
        tol,
    )
}

/// Slope `dy/dx` of a non-vertical crease.
pub fn crease_slope(crease: &Line) -> f64 {
    -crease.nx() / crease.ny()
}

/// Real roots of `t³ + a·t² + b·t + c`, read off as the slopes of the
/// rule-6 creases of [`beloch_instance_for_cubic`].
///
/// When `c` vanishes the second focus would sit on its directrix; the
/// variable is then shifted (`t → t + 1`, then `t - 1`, `t + 2`, …) until
/// the shifted constant term is nonzero, and the roots are shifted back.
pub fn solve_cubic_by_fold(a: f64, b: f64, c: f64, tol: &Tolerance) -> Result<Vec<f64>> {
    let target = Cubic::monic(a, b, c);
    for shift in [0.0, 1.0, -1.0, 2.0, -2.0, 3.0] {
        let poly = if shift == 0.0 { target } else { target.shifted(shift) };
        let inst = match beloch_instance_for_cubic(poly.c2, poly.c1, poly.c0, tol) {
            Err(Error::DegenerateFocus) => continue,
            other => other?,
        };
        let sol = axiom6(&inst, tol)?;
        // Shifting back costs absolute precision near zero; one Newton pass
        // on the original cubic restores it.
        let mut roots: Vec<f64> = sol
            .iter()
            .map(|l| crease_slope(l) + shift)
            .map(|t| if shift == 0.0 { t } else { crate::cubic::polish(&target, t) })
            .collect();
        roots.sort_by(f64::total_cmp);
        return Ok(roots);
    }
    // A cubic has at most three roots, so at most three of the shifts above
    // can be degenerate.
    unreachable!("every shift left the second focus on its directrix")
}
