use std::collections::BTreeMap;

use super::{Ident, Picker, Predicate, RuntimeError, Script, Stmt};
use crate::axioms::{ArgKind, Axiom, FoldInput, FoldSolution};
use crate::error::{Error, Result};
use crate::geom::{angle_at, Line, Point, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Object {
    Point(Point),
    Line(Line),
}

impl Object {
    pub fn kind(&self) -> ArgKind {
        match self {
            Object::Point(_) => ArgKind::Point,
            Object::Line(_) => ArgKind::Line,
        }
    }
}

/// What one executed statement contributed.
#[derive(Debug, Clone, PartialEq)]
pub enum Produced {
    Point { name: String, point: Point },
    Line { name: String, line: Line },
    Check { residual: f64, tol: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub index: usize,
    pub statement: String,
    pub produced: Produced,
}

/// Named points and lines plus the trace of statements that made them.
#[derive(Debug, Clone)]
pub struct ConstructionState {
    tol: Tolerance,
    objects: BTreeMap<String, Object>,
    trace: Vec<Step>,
}

impl ConstructionState {
    pub fn new(tol: Tolerance) -> Self {
        Self {
            tol,
            objects: BTreeMap::new(),
            trace: Vec::new(),
        }
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    pub fn get(&self, name: &str) -> Option<Object> {
        self.objects.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.objects.contains_key(name)
    }

    pub fn point(&self, name: &str) -> Result<Point> {
        match self.objects.get(name) {
            Some(Object::Point(p)) => Ok(*p),
            Some(o) => Err(mismatch(name, ArgKind::Point, o.kind())),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn line(&self, name: &str) -> Result<Line> {
        match self.objects.get(name) {
            Some(Object::Line(l)) => Ok(*l),
            Some(o) => Err(mismatch(name, ArgKind::Line, o.kind())),
            None => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Canonical script text reproducing this state.
    pub fn to_script(&self) -> String {
        self.trace
            .iter()
            .map(|s| format!("{}\n", s.statement))
            .collect()
    }

    /// Solves a fold on named arguments without recording anything.
    pub fn solve(&self, axiom: Axiom, args: &[&str]) -> Result<FoldSolution> {
        let input = self.fold_input(axiom, args)?;
        match input.solve(&self.tol) {
            Err(Error::NoSolution) => Ok(FoldSolution::new(axiom, Vec::new(), &self.tol)),
            other => other,
        }
    }

    fn fold_input(&self, axiom: Axiom, args: &[&str]) -> Result<FoldInput> {
        let sig = axiom.signature();
        if args.len() != sig.len() {
            return Err(Error::Arity {
                axiom: axiom.to_string(),
                expected: sig.len(),
                found: args.len(),
            });
        }
        let p = |i: usize| self.point(args[i]);
        let l = |i: usize| self.line(args[i]);
        Ok(match axiom {
            Axiom::O1 => FoldInput::O1 { p1: p(0)?, p2: p(1)? },
            Axiom::O2 => FoldInput::O2 { p1: p(0)?, p2: p(1)? },
            Axiom::O3 => FoldInput::O3 { l1: l(0)?, l2: l(1)? },
            Axiom::O4 => FoldInput::O4 { p: p(0)?, l: l(1)? },
            Axiom::O5 => FoldInput::O5 {
                a: p(0)?,
                b: p(1)?,
                p: l(2)?,
            },
            Axiom::O6 => FoldInput::O6 {
                a: p(0)?,
                p: l(1)?,
                b: p(2)?,
                q: l(3)?,
            },
            Axiom::O7 => FoldInput::O7 {
                a: p(0)?,
                p: l(1)?,
                q: l(2)?,
            },
        })
    }

    /// Executes one statement and appends it to the trace.
    pub fn apply(&mut self, stmt: &Stmt) -> Result<&Step> {
        let produced = self.evaluate(stmt)?;
        match &produced {
            Produced::Point { name, point } => {
                self.objects.insert(name.clone(), Object::Point(*point));
            }
            Produced::Line { name, line } => {
                self.objects.insert(name.clone(), Object::Line(*line));
            }
            Produced::Check { .. } => {}
        }
        self.trace.push(Step {
            index: self.trace.len(),
            statement: stmt.to_string(),
            produced,
        });
        Ok(self.trace.last().expect("just pushed"))
    }

    fn define(&self, name: &Ident) -> Result<String> {
        if self.contains(name.as_str()) {
            return Err(Error::DuplicateName(name.text.clone()));
        }
        Ok(name.text.clone())
    }

    fn evaluate(&self, stmt: &Stmt) -> Result<Produced> {
        let tol = &self.tol;
        Ok(match stmt {
            Stmt::Point { name, x, y } => Produced::Point {
                name: self.define(name)?,
                point: Point::try_new(*x, *y)?,
            },
            Stmt::LineThrough { name, a, b } => Produced::Line {
                name: self.define(name)?,
                line: Line::through(self.point(a.as_str())?, self.point(b.as_str())?, tol)?,
            },
            Stmt::Fold {
                name,
                axiom,
                args,
                pick,
            } => {
                let name = self.define(name)?;
                let args: Vec<&str> = args.iter().map(Ident::as_str).collect();
                let sol = self.solve(*axiom, &args)?;
                let index = match pick {
                    _ if sol.is_empty() => return Err(Error::EmptyFold),
                    None if sol.len() == 1 => 0,
                    None => return Err(Error::AmbiguousPick { count: sol.len() }),
                    Some(Picker::Index(i)) if *i < sol.len() => *i,
                    Some(Picker::Index(i)) => {
                        return Err(Error::IndexOutOfRange {
                            index: *i,
                            len: sol.len(),
                        })
                    }
                    Some(Picker::Nearest(p)) => sol
                        .nearest(self.point(p.as_str())?)
                        .expect("solution is non-empty"),
                };
                Produced::Line {
                    name,
                    line: sol.creases()[index],
                }
            }
            Stmt::Intersect { name, l1, l2 } => Produced::Point {
                name: self.define(name)?,
                point: self.line(l1.as_str())?.intersect(&self.line(l2.as_str())?, tol)?,
            },
            Stmt::ReflectPoint { name, src, mirror } => Produced::Point {
                name: self.define(name)?,
                point: self.point(src.as_str())?.reflect(&self.line(mirror.as_str())?),
            },
            Stmt::ReflectLine { name, src, mirror } => Produced::Line {
                name: self.define(name)?,
                line: self.line(src.as_str())?.reflect(&self.line(mirror.as_str())?),
            },
            Stmt::Assert { pred, tol: t } => {
                let limit = t.unwrap_or(tol.eps_geom);
                let residual = self.residual(pred)?;
                if !(residual <= limit) {
                    return Err(Error::AssertFailed {
                        residual,
                        tol: limit,
                    });
                }
                Produced::Check {
                    residual,
                    tol: limit,
                }
            }
        })
    }

    fn residual(&self, pred: &Predicate) -> Result<f64> {
        let eps = self.tol.eps_degenerate;
        let pt = |id: &Ident| self.point(id.as_str());
        match pred {
            Predicate::On { point, line } => Ok(self.line(line.as_str())?.distance(pt(point)?)),
            Predicate::Collinear(a, b, c) => {
                let pts = [pt(a)?, pt(b)?, pt(c)?];
                // Line through the farthest pair; distance of the third.
                let pairs = [(0, 1, 2), (1, 2, 0), (0, 2, 1)];
                let (i, j, k) = pairs
                    .into_iter()
                    .max_by(|x, y| {
                        let dx = pts[x.0].distance(pts[x.1]);
                        let dy = pts[y.0].distance(pts[y.1]);
                        dx.total_cmp(&dy)
                    })
                    .expect("three pairs");
                if pts[i].distance(pts[j]) <= eps {
                    return Ok(0.0);
                }
                Ok(Line::through(pts[i], pts[j], &self.tol)?.distance(pts[k]))
            }
            Predicate::DistRatio { points, ratio } => {
                let den = pt(&points[2])?.distance(pt(&points[3])?);
                if den <= eps {
                    return Err(Error::DegenerateAssert("denominator distance is zero".into()));
                }
                let num = pt(&points[0])?.distance(pt(&points[1])?);
                Ok((num / den - ratio).abs())
            }
            Predicate::AngleRatio {
                p1,
                vertex,
                p2,
                p3,
                p4,
                ratio,
            } => {
                let v = pt(vertex)?;
                let arms = [pt(p1)?, pt(p2)?, pt(p3)?, pt(p4)?];
                if arms.iter().any(|a| a.distance(v) <= eps) {
                    return Err(Error::DegenerateAssert("angle arm has zero length".into()));
                }
                let den = angle_at(v, arms[2], arms[3]);
                if den <= eps {
                    return Err(Error::DegenerateAssert("denominator angle is zero".into()));
                }
                Ok((angle_at(v, arms[0], arms[1]) / den - ratio).abs())
            }
        }
    }
}

fn mismatch(name: &str, expected: ArgKind, found: ArgKind) -> Error {
    Error::KindMismatch {
        name: name.to_string(),
        expected: expected.name(),
        found: found.name(),
    }
}

/// Runs a parsed script from an empty state.
pub fn execute(script: &Script, tol: &Tolerance) -> Result<ConstructionState, RuntimeError> {
    tol.validate().map_err(|source| RuntimeError {
        pos: Default::default(),
        statement: String::new(),
        source,
    })?;
    let mut state = ConstructionState::new(*tol);
    for s in &script.statements {
        state.apply(&s.stmt).map_err(|source| RuntimeError {
            pos: s.pos,
            statement: s.stmt.to_string(),
            source,
        })?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse;

    fn run(src: &str) -> Result<ConstructionState, RuntimeError> {
        execute(&parse(src).unwrap(), &Tolerance::default())
    }

    #[test]
    fn bisector_script() {
        let st = run("point A 1 2\npoint B 4 6\nfold f = O2 A B\nline AB through A B\npoint M = intersect f AB\nassert dist_ratio A M M B 1\n").unwrap();
        let m = st.point("M").unwrap();
        assert!((m.x - 2.5).abs() < 1e-12 && (m.y - 4.0).abs() < 1e-12);
        assert_eq!(st.trace().len(), 6);
    }

    #[test]
    fn pick_errors() {
        let base = "point A 0 0\npoint B 1 0\npoint P 0 5\nline p through P B\n";
        let e = run(&format!("{base}fold k = O5 A B p\n")).unwrap_err();
        assert_eq!(e.code(), "AmbiguousPick");
        let e = run(&format!("{base}fold k = O5 A B p pick 2\n")).unwrap_err();
        assert_eq!(e.code(), "IndexOutOfRange");
        assert!(e.to_string().contains("0..1"), "{e}");
        assert_eq!(e.pos.line, 5);
        let far = "point A 0 0\npoint B 1 0\npoint P 5 0\npoint Q 5 1\nline p through P Q\nfold k = O5 A B p pick 0\n";
        assert_eq!(run(far).unwrap_err().code(), "EmptyFold");
    }

    #[test]
    fn nearest_picker() {
        let src = "point A 0 0\npoint B 1 0\npoint P 0 0.5\npoint Q 1 0.5\nline p through P Q\npoint Z 0 -3\nfold k = O5 A B p pick nearest Z\n";
        let st = run(src).unwrap();
        let k = st.line("k").unwrap();
        let all = st.solve(Axiom::O5, &["A", "B", "p"]).unwrap();
        let idx = all.nearest(Point::new(0.0, -3.0)).unwrap();
        assert_eq!(k, all.creases()[idx]);
    }

    #[test]
    fn asserts() {
        let base = "point A 0 0\npoint B 2 0\npoint C 1 0\npoint D 1 1\n";
        run(&format!("{base}assert collinear A B C\nassert dist_ratio A C C B 1\n")).unwrap();
        let e = run(&format!("{base}assert collinear A B D\n")).unwrap_err();
        assert_eq!(e.code(), "AssertFailed");
        run(&format!("{base}assert collinear A B D tol 1.5\n")).unwrap();
        let e = run(&format!("{base}assert dist_ratio A B C C 1\n")).unwrap_err();
        assert_eq!(e.code(), "DegenerateAssert");
        run(&format!("{base}assert angle_ratio B A D B D 1\n")).unwrap();
        let e = run(&format!("{base}assert angle_ratio B A D B C 1\n")).unwrap_err();
        assert_eq!(e.code(), "DegenerateAssert");
        run(&format!("{base}assert collinear A A A\n")).unwrap();
    }

    #[test]
    fn replay_is_bit_identical() {
        let src = "point A 0.1 0.2\npoint B 3.3 -1.7\nfold f = O2 A B\npoint P 0 1\npoint Q 1 1.5\nline p through P Q\nfold k = O5 A B p pick 1\npoint A' = reflect A over k\nline p' = reflect p over f\n";
        let a = run(src).unwrap();
        let b = execute(&parse(&a.to_script()).unwrap(), &Tolerance::default()).unwrap();
        assert_eq!(a.trace(), b.trace());
        assert_eq!(a.to_script(), b.to_script());
    }

    #[test]
    fn duplicate_at_runtime() {
        let mut st = ConstructionState::new(Tolerance::default());
        let s = Stmt::Point {
            name: "A".into(),
            x: 0.0,
            y: 0.0,
        };
        st.apply(&s).unwrap();
        assert_eq!(st.apply(&s).unwrap_err(), Error::DuplicateName("A".into()));
        assert_eq!(st.trace().len(), 1);
    }
}
