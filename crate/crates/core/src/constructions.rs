//! Multi-step fold constructions.
//!
//! Every construction records its steps as script statements in a
//! [`ConstructionState`], so the trace can be printed, re-parsed and
//! replayed. Branches of multi-crease folds are chosen geometrically and
//! written into the trace as `pick` indices.

use crate::axioms::{crease_slope, solve_cubic_by_fold, Axiom, FoldSolution};
use crate::error::{Error, Result};
use crate::geom::{angle_of_ray, Line, Point, Tolerance};
use crate::script::{ConstructionState, Ident, Picker, Stmt};

/// A value together with the state whose trace produced it.
#[derive(Debug, Clone)]
pub struct Construction<T> {
    pub value: T,
    pub state: ConstructionState,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point, tol: &Tolerance) -> Result<Self> {
        let t = Self { a, b, c };
        t.validate(tol)?;
        Ok(t)
    }

    fn validate(&self, tol: &Tolerance) -> Result<()> {
        let eps = tol.eps_degenerate;
        let area = 0.5 * (self.b - self.a).cross(self.c - self.a).abs();
        if self.a.distance(self.b) <= eps
            || self.b.distance(self.c) <= eps
            || self.c.distance(self.a) <= eps
            || area <= eps
        {
            return Err(Error::InvalidTriangle);
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Self {
        Self {
            a: f(self.a),
            b: f(self.b),
            c: f(self.c),
        }
    }
}

/// Appends statements to a state, wrapping failures with the step.
struct Builder {
    st: ConstructionState,
}

impl Builder {
    fn new(tol: &Tolerance) -> Result<Self> {
        tol.validate()?;
        Ok(Self {
            st: ConstructionState::new(*tol),
        })
    }

    fn tol(&self) -> Tolerance {
        *self.st.tolerance()
    }

    fn run(&mut self, stmt: Stmt) -> Result<()> {
        let index = self.st.trace().len();
        self.st.apply(&stmt).map(|_| ()).map_err(|e| Error::Step {
            index,
            statement: stmt.to_string(),
            source: Box::new(e),
        })
    }

    fn point(&mut self, name: &str, p: Point) -> Result<Point> {
        if !self.st.contains(name) {
            self.run(Stmt::Point {
                name: name.into(),
                x: p.x,
                y: p.y,
            })?;
        }
        self.st.point(name)
    }

    fn line(&mut self, name: &str, a: &str, b: &str) -> Result<Line> {
        if !self.st.contains(name) {
            self.run(Stmt::LineThrough {
                name: name.into(),
                a: a.into(),
                b: b.into(),
            })?;
        }
        self.st.line(name)
    }

    fn solve(&self, axiom: Axiom, args: &[&str]) -> Result<FoldSolution> {
        self.st.solve(axiom, args)
    }

    fn fold(&mut self, name: &str, axiom: Axiom, args: &[&str], pick: Option<usize>) -> Result<Line> {
        if !self.st.contains(name) {
            self.run(Stmt::Fold {
                name: name.into(),
                axiom,
                args: args.iter().map(|a| Ident::new(*a)).collect(),
                pick: pick.map(Picker::Index),
            })?;
        }
        self.st.line(name)
    }

    fn intersect(&mut self, name: &str, l1: &str, l2: &str) -> Result<Point> {
        if !self.st.contains(name) {
            self.run(Stmt::Intersect {
                name: name.into(),
                l1: l1.into(),
                l2: l2.into(),
            })?;
        }
        self.st.point(name)
    }

    fn reflect(&mut self, name: &str, src: &str, mirror: &str) -> Result<Point> {
        if !self.st.contains(name) {
            self.run(Stmt::ReflectPoint {
                name: name.into(),
                src: src.into(),
                mirror: mirror.into(),
            })?;
        }
        self.st.point(name)
    }

    fn finish<T>(self, value: T) -> Construction<T> {
        Construction {
            value,
            state: self.st,
        }
    }
}

/// The crease placing `a` onto `b` and where it crosses segment `ab`.
pub fn perpendicular_bisector(a: Point, b: Point, tol: &Tolerance) -> Result<Construction<(Line, Point)>> {
    let mut k = Builder::new(tol)?;
    k.point("A", a)?;
    k.point("B", b)?;
    let f = k.fold("f", Axiom::O2, &["A", "B"], None)?;
    k.line("AB", "A", "B")?;
    let m = k.intersect("M", "f", "AB")?;
    Ok(k.finish((f, m)))
}

fn triangle_builder(t: &Triangle, tol: &Tolerance) -> Result<Builder> {
    t.validate(tol)?;
    let mut k = Builder::new(tol)?;
    k.point("A", t.a)?;
    k.point("B", t.b)?;
    k.point("C", t.c)?;
    Ok(k)
}

/// Side lines named after the opposite vertex.
const SIDES: [(&str, &str, &str, &str); 3] = [("a", "B", "C", "A"), ("b", "C", "A", "B"), ("c", "A", "B", "C")];

fn sides(k: &mut Builder) -> Result<()> {
    for (side, p, q, _) in SIDES {
        k.line(side, p, q)?;
    }
    Ok(())
}

/// Intersection of the interior angle bisectors, each folded by laying one
/// side onto the other.
pub fn incenter(t: &Triangle, tol: &Tolerance) -> Result<Construction<Point>> {
    let mut k = triangle_builder(t, tol)?;
    sides(&mut k)?;
    let tolv = k.tol();
    // Bisector at a vertex folds its two adjacent sides onto each other.
    for (name, s1, s2, opposite) in [
        ("bisA", "b", "c", "a"),
        ("bisB", "c", "a", "b"),
        ("bisC", "a", "b", "c"),
    ] {
        let sol = k.solve(Axiom::O3, &[s1, s2])?;
        let (_, p, q, _) = SIDES.iter().find(|s| s.0 == opposite).expect("side exists");
        let (p, q) = (k.st.point(p)?, k.st.point(q)?);
        let opp = k.st.line(opposite)?;
        let interior = sol.position(|crease| match crease.intersect(&opp, &tolv) {
            Ok(x) => {
                let s = (x - p).dot(q - p) / (q - p).dot(q - p);
                s > 0.0 && s < 1.0
            }
            Err(_) => false,
        });
        let i = interior.ok_or(Error::InvalidTriangle)?;
        k.fold(name, Axiom::O3, &[s1, s2], Some(i))?;
    }
    let i = k.intersect("I", "bisA", "bisB")?;
    Ok(k.finish(i))
}

fn add_circumcenter(k: &mut Builder) -> Result<Point> {
    k.fold("perpAB", Axiom::O2, &["A", "B"], None)?;
    k.fold("perpBC", Axiom::O2, &["B", "C"], None)?;
    k.fold("perpCA", Axiom::O2, &["C", "A"], None)?;
    k.intersect("O", "perpAB", "perpBC")
}

fn add_centroid(k: &mut Builder) -> Result<Point> {
    k.line("a", "B", "C")?;
    k.line("b", "C", "A")?;
    k.fold("perpBC", Axiom::O2, &["B", "C"], None)?;
    k.fold("perpCA", Axiom::O2, &["C", "A"], None)?;
    k.intersect("Ma", "perpBC", "a")?;
    k.intersect("Mb", "perpCA", "b")?;
    k.fold("medA", Axiom::O1, &["A", "Ma"], None)?;
    k.fold("medB", Axiom::O1, &["B", "Mb"], None)?;
    k.intersect("G", "medA", "medB")
}

fn add_orthocenter(k: &mut Builder) -> Result<Point> {
    k.line("a", "B", "C")?;
    k.line("b", "C", "A")?;
    k.fold("altA", Axiom::O4, &["A", "a"], None)?;
    k.fold("altB", Axiom::O4, &["B", "b"], None)?;
    k.intersect("H", "altA", "altB")
}

/// Meeting point of the perpendicular bisectors of the sides.
pub fn circumcenter(t: &Triangle, tol: &Tolerance) -> Result<Construction<Point>> {
    let mut k = triangle_builder(t, tol)?;
    let o = add_circumcenter(&mut k)?;
    Ok(k.finish(o))
}

/// Meeting point of the medians.
pub fn centroid(t: &Triangle, tol: &Tolerance) -> Result<Construction<Point>> {
    let mut k = triangle_builder(t, tol)?;
    let g = add_centroid(&mut k)?;
    Ok(k.finish(g))
}

/// Meeting point of the altitudes.
pub fn orthocenter(t: &Triangle, tol: &Tolerance) -> Result<Construction<Point>> {
    let mut k = triangle_builder(t, tol)?;
    let h = add_orthocenter(&mut k)?;
    Ok(k.finish(h))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerCheck {
    pub circumcenter: Point,
    pub centroid: Point,
    pub orthocenter: Point,
    pub line: Line,
    /// Distance of the centroid from the line through O and H.
    pub residual: f64,
    /// `|GH| / |OG|`.
    pub ratio: f64,
}

/// Builds O, G and H in one state and folds the line through O and H.
pub fn euler_check(t: &Triangle, tol: &Tolerance) -> Result<Construction<EulerCheck>> {
    let mut k = triangle_builder(t, tol)?;
    let o = add_circumcenter(&mut k)?;
    let g = add_centroid(&mut k)?;
    let h = add_orthocenter(&mut k)?;
    if o.distance(h) <= tol.eps_geom {
        return Err(Error::EquilateralDegenerate);
    }
    let e = k.fold("euler", Axiom::O1, &["O", "H"], None)?;
    let value = EulerCheck {
        circumcenter: o,
        centroid: g,
        orthocenter: h,
        line: e,
        residual: e.distance(g),
        ratio: g.distance(h) / o.distance(g),
    };
    Ok(k.finish(value))
}

/// Below this sine between the second crease and `p`, the image is marked
/// by reflection instead of by intersection.
const GRAZING_SINE: f64 = 1e-4;

/// Points of `p` on the circle centred at `a` through `b`.
///
/// Each crease through `a` that lands `b` on `p` is followed by the
/// perpendicular to it through `b`, which meets `p` at the image of `b`.
pub fn circle_line_intersection(a: Point, b: Point, p: &Line, tol: &Tolerance) -> Result<Construction<Vec<Point>>> {
    if a.distance(b) <= tol.eps_degenerate {
        return Err(Error::CoincidentPoints);
    }
    let mut k = Builder::new(tol)?;
    k.point("A", a)?;
    k.point("B", b)?;
    k.point("P1", p.anchor())?;
    k.point("P2", p.anchor() + p.direction())?;
    let p = k.line("p", "P1", "P2")?;
    let sol = k.solve(Axiom::O5, &["A", "B", "p"])?;
    let pick = |i| if sol.len() > 1 { Some(i) } else { None };
    let mut out = Vec::with_capacity(sol.len());
    for (i, crease) in sol.iter().enumerate() {
        let (kn, mn, xn) = (format!("k{i}"), format!("m{i}"), format!("X{i}"));
        k.fold(&kn, Axiom::O5, &["A", "B", "p"], pick(i))?;
        let x = if crease.normal().cross(p.direction()).abs() < GRAZING_SINE {
            // The perpendicular through b runs along p; b is its own image
            // or p contains b.
            k.reflect(&xn, "B", &kn)?
        } else {
            k.fold(&mn, Axiom::O4, &["B", &kn], None)?;
            k.intersect(&xn, &mn, "p")?
        };
        out.push(x);
    }
    Ok(k.finish(out))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrisectionResult {
    /// The main fold.
    pub crease: Line,
    /// Image of the vertex's companion point under the main fold.
    pub a_prime: Point,
    /// Crossing of the main fold with the midline.
    pub c: Point,
    /// Ray angle of side `q`, in `[0, 2π)`.
    pub side_q: f64,
    /// Ray angle of side `p`, in `[0, 2π)`.
    pub side_p: f64,
    /// Ray angle of the trisector nearer `q`.
    pub trisector1: f64,
    /// Ray angle of the trisector nearer `p`.
    pub trisector2: f64,
    /// Angle between the sides.
    pub theta: f64,
}

/// Trisects the angle at `a` between `q` and `p`.
///
/// `B` is marked on the perpendicular to `q` through `a` at distance
/// `b_dist`, on the side of `p`. When the sides are perpendicular `B` lies
/// on `p`, and the main fold becomes the crease through `B` placing `a` on
/// the midline.
pub fn trisect_angle(q: &Line, p: &Line, a: Point, b_dist: f64, tol: &Tolerance) -> Result<Construction<TrisectionResult>> {
    if !(b_dist.is_finite() && b_dist > tol.eps_geom) {
        return Err(Error::CoincidentPoints);
    }
    if !q.contains(a, tol) || !p.contains(a, tol) {
        return Err(Error::VertexOffSides);
    }
    let u = q.direction();
    let mut v = p.direction();
    let along = u.dot(v);
    if along < 0.0 || (along == 0.0 && u.cross(v) < 0.0) {
        v = -v;
    }
    let orient = u.cross(v);
    if orient.abs() <= tol.eps_degenerate {
        return Err(Error::ParallelLines);
    }
    let w = if orient > 0.0 { u.perp() } else { -u.perp() };
    let inside = |x: Point| {
        let r = x - a;
        orient.signum() * u.cross(r) > 0.0 && orient.signum() * r.cross(v) > 0.0
    };

    let mut k = Builder::new(tol)?;
    k.point("A", a)?;
    k.point("Q", a + u)?;
    k.point("P", a + v)?;
    k.line("q", "A", "Q")?;
    let p = k.line("p", "A", "P")?;
    k.fold("l", Axiom::O4, &["A", "q"], None)?;
    k.point("B", a + w * b_dist)?;
    k.fold("q'", Axiom::O2, &["A", "B"], None)?;

    let b = k.st.point("B")?;
    let (axiom, args): (Axiom, &[&str]) = if p.contains(b, tol) {
        (Axiom::O5, &["B", "A", "q'"])
    } else {
        (Axiom::O6, &["A", "q'", "B", "p"])
    };
    let sol = k.solve(axiom, args)?;
    let a0 = k.st.point("A")?;
    let i = sol
        .position(|f| inside(a0.reflect(f)))
        .ok_or(Error::NoInteriorBranch)?;
    let pick = if sol.len() > 1 { Some(i) } else { None };
    let crease = k.fold("f", axiom, args, pick)?;
    let a_prime = k.reflect("A'", "A", "f")?;
    let c = k.intersect("C", "f", "q'")?;

    let tolv = k.tol();
    let value = TrisectionResult {
        crease,
        a_prime,
        c,
        side_q: angle_of_ray(a0, a0 + u, &tolv)?,
        side_p: angle_of_ray(a0, a0 + v, &tolv)?,
        trisector1: angle_of_ray(a0, a_prime, &tolv)?,
        trisector2: angle_of_ray(a0, c, &tolv)?,
        theta: crate::geom::angle_at(a0, a0 + u, a0 + v),
    };
    Ok(k.finish(value))
}

/// Signed angle from `from` to `to`, in `(-π, π]`.
pub fn ray_difference(from: f64, to: f64) -> f64 {
    let d = (to - from).rem_euclid(std::f64::consts::TAU);
    if d > std::f64::consts::PI {
        d - std::f64::consts::TAU
    } else {
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thirds {
    /// Crease `y = 1/3`.
    pub lower: Line,
    /// Crease `y = 2/3`.
    pub upper: Line,
    /// Crease `x = 2/3`.
    pub vertical: Line,
    /// Crossing of the diagonal with the line from the top-left corner to
    /// the middle of the right edge, `(2/3, 2/3)`.
    pub mark: Point,
}

fn add_thirds(k: &mut Builder) -> Result<Thirds> {
    k.point("O", Point::new(0.0, 0.0))?;
    k.point("R", Point::new(1.0, 0.0))?;
    k.point("T", Point::new(1.0, 1.0))?;
    k.point("L", Point::new(0.0, 1.0))?;
    k.line("bottom", "O", "R")?;
    k.line("right", "R", "T")?;
    k.line("top", "T", "L")?;
    k.line("left", "L", "O")?;
    k.fold("diag", Axiom::O1, &["O", "T"], None)?;
    k.fold("half", Axiom::O2, &["R", "T"], None)?;
    k.intersect("M", "half", "right")?;
    k.fold("g", Axiom::O1, &["L", "M"], None)?;
    let mark = k.intersect("K", "diag", "g")?;
    let vertical = k.fold("x23", Axiom::O4, &["K", "bottom"], None)?;
    let upper = k.fold("y23", Axiom::O4, &["K", "left"], None)?;
    k.intersect("Y", "y23", "left")?;
    let lower = k.fold("y13", Axiom::O2, &["Y", "O"], None)?;
    Ok(Thirds {
        lower,
        upper,
        vertical,
        mark,
    })
}

/// Divides the unit square into horizontal thirds.
pub fn divide_square_thirds(tol: &Tolerance) -> Result<Construction<Thirds>> {
    let mut k = Builder::new(tol)?;
    let t = add_thirds(&mut k)?;
    Ok(k.finish(t))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoublingResult {
    pub crease: Line,
    /// Image of the bottom-right corner, on the left edge.
    pub a_prime: Point,
    /// Image of the lower-third mark on the right edge, on `y = 2/3`.
    pub x_prime: Point,
    /// Height of `a_prime`.
    pub t: f64,
    /// `(1 - t) / t`, the cube root of two.
    pub ratio: f64,
}

/// Folds the bottom-right corner onto the left edge while the lower-third
/// mark of the right edge lands on the upper third line.
pub fn double_cube(tol: &Tolerance) -> Result<Construction<DoublingResult>> {
    let mut k = Builder::new(tol)?;
    add_thirds(&mut k)?;
    k.intersect("X", "y13", "right")?;
    let a = k.st.point("R")?;
    let left = k.st.line("left")?;
    let args = ["R", "left", "X", "y23"];
    let sol = k.solve(Axiom::O6, &args)?;
    let tolv = k.tol();
    let i = sol
        .position(|f| {
            let img = a.reflect(f);
            left.contains(img, &tolv) && img.y > 0.0 && img.y < 1.0
        })
        .ok_or(Error::NoInteriorBranch)?;
    let pick = if sol.len() > 1 { Some(i) } else { None };
    let crease = k.fold("f", Axiom::O6, &args, pick)?;
    let a_prime = k.reflect("A'", "R", "f")?;
    let x_prime = k.reflect("X'", "X", "f")?;
    let t = a_prime.y;
    let value = DoublingResult {
        crease,
        a_prime,
        x_prime,
        t,
        ratio: (1.0 - t) / t,
    };
    Ok(k.finish(value))
}

/// `cos(2π/7)`, half the largest root of `t³ + t² − 2t − 1`.
pub fn heptagon_cos(tol: &Tolerance) -> Result<f64> {
    let roots = solve_cubic_by_fold(1.0, -2.0, -1.0, tol)?;
    roots
        .into_iter()
        .reduce(f64::max)
        .map(|m| m / 2.0)
        .ok_or(Error::NoSolution)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeptagonResult {
    /// Crease slopes, `2cos(2πk/7)` for `k = 1, 2, 3`, ascending.
    pub slopes: Vec<f64>,
    pub cos: f64,
}

/// The three folds solving `t³ + t² − 2t − 1 = 0`, with their traces.
///
/// A crease placing `(0, 1)` on `y = −1` and `(−2, −2)` on `x = 0` has a
/// slope that is a root of the cubic.
pub fn heptagon(tol: &Tolerance) -> Result<Construction<HeptagonResult>> {
    let mut k = Builder::new(tol)?;
    k.point("A", Point::new(0.0, 1.0))?;
    k.point("P1", Point::new(0.0, -1.0))?;
    k.point("P2", Point::new(1.0, -1.0))?;
    k.line("p", "P1", "P2")?;
    k.point("B", Point::new(-2.0, -2.0))?;
    k.point("Q1", Point::new(0.0, 0.0))?;
    k.point("Q2", Point::new(0.0, 1.0))?;
    k.line("q", "Q1", "Q2")?;
    let args = ["A", "p", "B", "q"];
    let n = k.solve(Axiom::O6, &args)?.len();
    let mut slopes = Vec::with_capacity(n);
    for i in 0..n {
        let f = k.fold(&format!("f{i}"), Axiom::O6, &args, Some(i))?;
        slopes.push(crease_slope(&f));
    }
    slopes.sort_by(f64::total_cmp);
    let cos = slopes.last().copied().ok_or(Error::NoSolution)? / 2.0;
    Ok(k.finish(HeptagonResult { slopes, cos }))
}
