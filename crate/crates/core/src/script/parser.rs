use std::collections::HashMap;

use super::lexer::{tokenize, Tok, Token};
use super::{Ident, ParseError, ParseErrorKind, Picker, Pos, Predicate, Script, Statement, Stmt};
use crate::axioms::{ArgKind, Axiom};

/// Parses and name-checks a script.
pub fn parse(src: &str) -> Result<Script, ParseError> {
    let tokens = tokenize(src)?;
    let mut statements = Vec::new();
    let mut line: Vec<Token> = Vec::new();
    for t in tokens {
        if t.tok == Tok::Newline {
            if !line.is_empty() {
                let end = t.pos;
                statements.push(LineParser::new(&line, end).statement()?);
                line.clear();
            }
        } else {
            line.push(t);
        }
    }
    check_names(&statements)?;
    Ok(Script { statements })
}

fn err(kind: ParseErrorKind, pos: Pos) -> ParseError {
    ParseError { kind, pos }
}

fn syntax(msg: impl Into<String>, pos: Pos) -> ParseError {
    err(ParseErrorKind::Syntax(msg.into()), pos)
}

struct LineParser<'a> {
    toks: &'a [Token],
    i: usize,
    end: Pos,
}

impl<'a> LineParser<'a> {
    fn new(toks: &'a [Token], end: Pos) -> Self {
        Self { toks, i: 0, end }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.i)
    }

    fn here(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.i);
        self.i += 1;
        t
    }

    fn peek_word(&self) -> Option<&'a str> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => Some(w),
            _ => None,
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek_word() {
            Some(w) if w == kw => {
                self.i += 1;
                Ok(())
            }
            _ => Err(syntax(format!("expected `{kw}`"), self.here())),
        }
    }

    fn equals(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Token {
                tok: Tok::Equals, ..
            }) => {
                self.i += 1;
                Ok(())
            }
            _ => Err(syntax("expected `=`", self.here())),
        }
    }

    fn name(&mut self) -> Result<Ident, ParseError> {
        let pos = self.here();
        match self.next() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => Ok(Ident {
                text: w.clone(),
                pos,
            }),
            _ => Err(syntax("expected a name", pos)),
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let pos = self.here();
        match self.next() {
            Some(Token {
                tok: Tok::Number(x),
                ..
            }) => Ok(*x),
            _ => Err(syntax("expected a number", pos)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax("unexpected trailing input", t.pos)),
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let pos = self.here();
        let stmt = match self.peek_word() {
            Some("point") => {
                self.i += 1;
                self.point()?
            }
            Some("line") => {
                self.i += 1;
                self.line()?
            }
            Some("fold") => {
                self.i += 1;
                self.fold()?
            }
            Some("assert") => {
                self.i += 1;
                self.assert()?
            }
            _ => return Err(syntax("expected `point`, `line`, `fold` or `assert`", pos)),
        };
        self.finish()?;
        Ok(Statement { stmt, pos })
    }

    fn point(&mut self) -> Result<Stmt, ParseError> {
        let name = self.name()?;
        if matches!(self.peek(), Some(Token { tok: Tok::Equals, .. })) {
            self.i += 1;
            match self.peek_word() {
                Some("intersect") => {
                    self.i += 1;
                    let l1 = self.name()?;
                    let l2 = self.name()?;
                    Ok(Stmt::Intersect { name, l1, l2 })
                }
                Some("reflect") => {
                    self.i += 1;
                    let src = self.name()?;
                    self.keyword("over")?;
                    let mirror = self.name()?;
                    Ok(Stmt::ReflectPoint { name, src, mirror })
                }
                _ => Err(syntax("expected `intersect` or `reflect`", self.here())),
            }
        } else {
            let x = self.number()?;
            let y = self.number()?;
            Ok(Stmt::Point { name, x, y })
        }
    }

    fn line(&mut self) -> Result<Stmt, ParseError> {
        let name = self.name()?;
        match self.peek() {
            Some(Token {
                tok: Tok::Equals, ..
            }) => {
                self.i += 1;
                self.keyword("reflect")?;
                let src = self.name()?;
                self.keyword("over")?;
                let mirror = self.name()?;
                Ok(Stmt::ReflectLine { name, src, mirror })
            }
            _ => {
                self.keyword("through")?;
                let a = self.name()?;
                let b = self.name()?;
                Ok(Stmt::LineThrough { name, a, b })
            }
        }
    }

    fn fold(&mut self) -> Result<Stmt, ParseError> {
        let name = self.name()?;
        self.equals()?;
        let apos = self.here();
        let axiom = match self.peek_word() {
            Some(w) => Axiom::from_name(w)
                .filter(|a| a.to_string() == w)
                .ok_or_else(|| syntax(format!("unknown fold rule `{w}`"), apos))?,
            None => return Err(syntax("expected a fold rule O1..O7", apos)),
        };
        self.i += 1;
        let mut args = Vec::new();
        while let Some(w) = self.peek_word() {
            if w == "pick" {
                break;
            }
            args.push(self.name()?);
        }
        if let Some(t) = self.peek() {
            if !matches!(t.tok, Tok::Word(_)) {
                return Err(syntax("expected a name or `pick`", t.pos));
            }
        }
        let expected = axiom.signature().len();
        if args.len() != expected {
            return Err(err(
                ParseErrorKind::Arity {
                    what: axiom.to_string(),
                    expected,
                    found: args.len(),
                },
                apos,
            ));
        }
        let pick = if self.peek_word() == Some("pick") {
            self.i += 1;
            if self.peek_word() == Some("nearest") {
                self.i += 1;
                Some(Picker::Nearest(self.name()?))
            } else {
                let ppos = self.here();
                let x = self.number()?;
                if x < 0.0 || x.fract() != 0.0 || x > u32::MAX as f64 {
                    return Err(syntax("pick index must be a non-negative integer", ppos));
                }
                Some(Picker::Index(x as usize))
            }
        } else {
            None
        };
        Ok(Stmt::Fold {
            name,
            axiom,
            args,
            pick,
        })
    }

    fn assert(&mut self) -> Result<Stmt, ParseError> {
        let kpos = self.here();
        let kw = self
            .peek_word()
            .ok_or_else(|| syntax("expected a predicate", kpos))?;
        self.i += 1;
        // Names up to the first number or `tol`.
        let mut names = Vec::new();
        while let Some(w) = self.peek_word() {
            if w == "tol" {
                break;
            }
            names.push(self.name()?);
        }
        let (expected, wants_ratio) = match kw {
            "on" => (2, false),
            "collinear" => (3, false),
            "dist_ratio" => (4, true),
            "angle_ratio" => (5, true),
            _ => return Err(syntax(format!("unknown predicate `{kw}`"), kpos)),
        };
        if names.len() != expected {
            return Err(err(
                ParseErrorKind::Arity {
                    what: kw.to_string(),
                    expected,
                    found: names.len(),
                },
                kpos,
            ));
        }
        let ratio = if wants_ratio { Some(self.number()?) } else { None };
        let tol = if self.peek_word() == Some("tol") {
            self.i += 1;
            let tpos = self.here();
            let t = self.number()?;
            if t < 0.0 {
                return Err(syntax("tolerance must be non-negative", tpos));
            }
            Some(t)
        } else {
            None
        };
        let mut it = names.into_iter();
        let mut n = || it.next().expect("arity checked");
        let pred = match kw {
            "on" => Predicate::On {
                point: n(),
                line: n(),
            },
            "collinear" => Predicate::Collinear(n(), n(), n()),
            "dist_ratio" => Predicate::DistRatio {
                points: [n(), n(), n(), n()],
                ratio: ratio.expect("ratio parsed"),
            },
            _ => Predicate::AngleRatio {
                p1: n(),
                vertex: n(),
                p2: n(),
                p3: n(),
                p4: n(),
                ratio: ratio.expect("ratio parsed"),
            },
        };
        Ok(Stmt::Assert { pred, tol })
    }
}

/// Checks definition-before-use, uniqueness and argument kinds.
fn check_names(statements: &[Statement]) -> Result<(), ParseError> {
    use ArgKind::{Line as L, Point as P};
    let mut kinds: HashMap<&str, ArgKind> = HashMap::new();
    for s in statements {
        let uses: Vec<(&Ident, ArgKind)> = match &s.stmt {
            Stmt::Point { .. } => vec![],
            Stmt::LineThrough { a, b, .. } => vec![(a, P), (b, P)],
            Stmt::Fold {
                axiom, args, pick, ..
            } => {
                let mut v: Vec<_> = args.iter().zip(axiom.signature().iter().copied()).collect();
                if let Some(Picker::Nearest(p)) = pick {
                    v.push((p, P));
                }
                v
            }
            Stmt::Intersect { l1, l2, .. } => vec![(l1, L), (l2, L)],
            Stmt::ReflectPoint { src, mirror, .. } => vec![(src, P), (mirror, L)],
            Stmt::ReflectLine { src, mirror, .. } => vec![(src, L), (mirror, L)],
            Stmt::Assert { pred, .. } => match pred {
                Predicate::On { point, line } => vec![(point, P), (line, L)],
                Predicate::Collinear(a, b, c) => vec![(a, P), (b, P), (c, P)],
                Predicate::DistRatio { points, .. } => points.iter().map(|p| (p, P)).collect(),
                Predicate::AngleRatio {
                    p1,
                    vertex,
                    p2,
                    p3,
                    p4,
                    ..
                } => vec![(p1, P), (vertex, P), (p2, P), (p3, P), (p4, P)],
            },
        };
        for (id, want) in uses {
            match kinds.get(id.as_str()) {
                None => {
                    return Err(err(ParseErrorKind::UnknownName(id.text.clone()), id.pos));
                }
                Some(&found) if found != want => {
                    return Err(err(
                        ParseErrorKind::KindMismatch {
                            name: id.text.clone(),
                            expected: want.name(),
                            found: found.name(),
                        },
                        id.pos,
                    ));
                }
                Some(_) => {}
            }
        }
        if let Some(name) = s.stmt.defines() {
            let kind = match s.stmt {
                Stmt::Point { .. } | Stmt::Intersect { .. } | Stmt::ReflectPoint { .. } => P,
                _ => L,
            };
            if kinds.insert(name.as_str(), kind).is_some() {
                return Err(err(ParseErrorKind::DuplicateName(name.text.clone()), name.pos));
            }
        }
    }
    Ok(())
}
