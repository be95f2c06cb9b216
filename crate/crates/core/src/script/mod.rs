//! The `.fold` construction language.
//!
//! One statement per line; `#` starts a comment. Numbers are decimal
//! literals, names match `[A-Za-z][A-Za-z0-9_']*`.
//!
//! ```text
//! point A 0 0
//! point B 1 0
//! line AB through A B
//! fold f = O2 A B
//! fold g = O5 A B AB pick 1
//! fold h = O5 A B AB pick nearest A
//! point M = intersect f AB
//! point B' = reflect B over f
//! line m = reflect AB over f
//! assert on M AB tol 1e-12
//! assert collinear A M B
//! assert dist_ratio A M M B 1
//! assert angle_ratio B A M B B' 2
//! ```
//!
//! `angle_ratio P1 V P2 P3 P4 r` checks `∠(P1,V,P2) / ∠(P3,V,P4) = r`.

mod lexer;
mod parser;
mod state;

use std::fmt;

use crate::axioms::Axiom;
use crate::error::Error;

pub use parser::parse;
pub use state::{execute, ConstructionState, Object, Produced, Step};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A name with the position it was written at. Equality ignores position.
#[derive(Debug, Clone, Eq)]
pub struct Ident {
    pub text: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(text: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            pos: Pos::default(),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl From<&str> for Ident {
    fn from(s: &str) -> Self {
        Ident::new(s)
    }
}

/// Whether `s` is a legal name.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, PartialEq)]
pub enum Picker {
    Index(usize),
    Nearest(Ident),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Predicate {
    On { point: Ident, line: Ident },
    Collinear(Ident, Ident, Ident),
    /// `|p1 p2| / |p3 p4|`.
    DistRatio {
        points: [Ident; 4],
        ratio: f64,
    },
    /// `∠(p1, vertex, p2) / ∠(p3, vertex, p4)`.
    AngleRatio {
        p1: Ident,
        vertex: Ident,
        p2: Ident,
        p3: Ident,
        p4: Ident,
        ratio: f64,
    },
}

impl Predicate {
    pub fn keyword(&self) -> &'static str {
        match self {
            Predicate::On { .. } => "on",
            Predicate::Collinear(..) => "collinear",
            Predicate::DistRatio { .. } => "dist_ratio",
            Predicate::AngleRatio { .. } => "angle_ratio",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Point {
        name: Ident,
        x: f64,
        y: f64,
    },
    LineThrough {
        name: Ident,
        a: Ident,
        b: Ident,
    },
    Fold {
        name: Ident,
        axiom: Axiom,
        args: Vec<Ident>,
        pick: Option<Picker>,
    },
    Intersect {
        name: Ident,
        l1: Ident,
        l2: Ident,
    },
    ReflectPoint {
        name: Ident,
        src: Ident,
        mirror: Ident,
    },
    ReflectLine {
        name: Ident,
        src: Ident,
        mirror: Ident,
    },
    Assert {
        pred: Predicate,
        tol: Option<f64>,
    },
}

impl Stmt {
    /// The name this statement defines, if any.
    pub fn defines(&self) -> Option<&Ident> {
        match self {
            Stmt::Point { name, .. }
            | Stmt::LineThrough { name, .. }
            | Stmt::Fold { name, .. }
            | Stmt::Intersect { name, .. }
            | Stmt::ReflectPoint { name, .. }
            | Stmt::ReflectLine { name, .. } => Some(name),
            Stmt::Assert { .. } => None,
        }
    }
}

/// Writes `x` so that parsing the text gives back the same `f64`.
fn fmt_num(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    write!(f, "{x}")
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Point { name, x, y } => {
                write!(f, "point {name} ")?;
                fmt_num(f, *x)?;
                f.write_str(" ")?;
                fmt_num(f, *y)
            }
            Stmt::LineThrough { name, a, b } => write!(f, "line {name} through {a} {b}"),
            Stmt::Fold {
                name,
                axiom,
                args,
                pick,
            } => {
                write!(f, "fold {name} = {axiom}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                match pick {
                    Some(Picker::Index(i)) => write!(f, " pick {i}"),
                    Some(Picker::Nearest(p)) => write!(f, " pick nearest {p}"),
                    None => Ok(()),
                }
            }
            Stmt::Intersect { name, l1, l2 } => write!(f, "point {name} = intersect {l1} {l2}"),
            Stmt::ReflectPoint { name, src, mirror } => {
                write!(f, "point {name} = reflect {src} over {mirror}")
            }
            Stmt::ReflectLine { name, src, mirror } => {
                write!(f, "line {name} = reflect {src} over {mirror}")
            }
            Stmt::Assert { pred, tol } => {
                write!(f, "assert {}", pred.keyword())?;
                match pred {
                    Predicate::On { point, line } => write!(f, " {point} {line}")?,
                    Predicate::Collinear(a, b, c) => write!(f, " {a} {b} {c}")?,
                    Predicate::DistRatio { points, ratio } => {
                        for p in points {
                            write!(f, " {p}")?;
                        }
                        f.write_str(" ")?;
                        fmt_num(f, *ratio)?;
                    }
                    Predicate::AngleRatio {
                        p1,
                        vertex,
                        p2,
                        p3,
                        p4,
                        ratio,
                    } => {
                        write!(f, " {p1} {vertex} {p2} {p3} {p4} ")?;
                        fmt_num(f, *ratio)?;
                    }
                }
                if let Some(t) = tol {
                    f.write_str(" tol ")?;
                    fmt_num(f, *t)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub stmt: Stmt,
    pub pos: Pos,
}

/// A parsed script: statements in source order, names already resolved.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

impl fmt::Display for Script {
    /// Canonical text: one statement per line, no comments.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Lex(String),
    #[error("{0}")]
    Syntax(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("{what} takes {expected} arguments, found {found}")]
    Arity {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("`{name}` is a {found}, expected a {expected}")]
    KindMismatch {
        name: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("name `{0}` is already defined")]
    DuplicateName(String),
}

impl ParseErrorKind {
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::Lex(_) => "LexError",
            ParseErrorKind::Syntax(_) => "SyntaxError",
            ParseErrorKind::UnknownName(_) => "UnknownName",
            ParseErrorKind::Arity { .. } => "ArityError",
            ParseErrorKind::KindMismatch { .. } => "KindMismatch",
            ParseErrorKind::DuplicateName(_) => "DuplicateName",
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{pos}: {}: {kind}", kind.code())]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Pos,
}

/// Execution failure of one statement.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{pos}: {}: `{statement}`: {source}", self.code())]
pub struct RuntimeError {
    pub pos: Pos,
    pub statement: String,
    pub source: Error,
}

impl RuntimeError {
    pub fn code(&self) -> &'static str {
        match self.source.root() {
            Error::AssertFailed { .. } => "AssertFailed",
            Error::AmbiguousPick { .. } => "AmbiguousPick",
            Error::EmptyFold => "EmptyFold",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DegenerateAssert(_) => "DegenerateAssert",
            _ => "GeometryError",
        }
    }
}
