use super::{ParseError, ParseErrorKind, Pos};

#[derive(Debug, Clone, PartialEq)]
pub(super) enum Tok {
    Word(String),
    Number(f64),
    Equals,
    Newline,
}

#[derive(Debug, Clone, PartialEq)]
pub(super) struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn lex_err(msg: impl Into<String>, pos: Pos) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Lex(msg.into()),
        pos,
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `src` into tokens. Every line, including the last, ends with a
/// `Newline` token.
pub(super) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, raw) in src.split('\n').enumerate() {
        let line = li + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos { line, col: i + 1 };
            if c == '#' {
                break;
            }
            if c == ' ' || c == '\t' || c == '\r' {
                i += 1;
                continue;
            }
            if c == '=' {
                out.push(Token { tok: Tok::Equals, pos });
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Word(word),
                    pos,
                });
                continue;
            }
            if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' {
                let start = i;
                i = scan_number(&chars, i).ok_or_else(|| lex_err("malformed number", pos))?;
                if i < chars.len() && (is_word_char(chars[i]) || chars[i] == '.') {
                    return Err(lex_err("malformed number", pos));
                }
                let text: String = chars[start..i].iter().collect();
                let value: f64 = text
                    .parse()
                    .map_err(|_| lex_err(format!("malformed number `{text}`"), pos))?;
                if !value.is_finite() {
                    return Err(lex_err(format!("number `{text}` is out of range"), pos));
                }
                out.push(Token {
                    tok: Tok::Number(value),
                    pos,
                });
                continue;
            }
            return Err(lex_err(format!("unexpected character `{c}`"), pos));
        }
        out.push(Token {
            tok: Tok::Newline,
            pos: Pos {
                line,
                col: chars.len() + 1,
            },
        });
    }
    Ok(out)
}

/// Scans `[+-]?digits(.digits)?([eE][+-]?digits)?` and returns the end index.
fn scan_number(chars: &[char], mut i: usize) -> Option<usize> {
    let digits = |i: &mut usize| {
        let s = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        *i > s
    };
    if chars[i] == '-' || chars[i] == '+' {
        i += 1;
    }
    if !digits(&mut i) {
        return None;
    }
    if i < chars.len() && chars[i] == '.' {
        i += 1;
        if !digits(&mut i) {
            return None;
        }
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        i += 1;
        if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
            i += 1;
        }
        if !digits(&mut i) {
            return None;
        }
    }
    Some(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn words_numbers_and_comments() {
        assert_eq!(
            toks("point A' -1.5e3 2 # note\r\n"),
            vec![
                Tok::Word("point".into()),
                Tok::Word("A'".into()),
                Tok::Number(-1500.0),
                Tok::Number(2.0),
                Tok::Newline,
                Tok::Newline,
            ]
        );
    }

    #[test]
    fn positions_are_one_based() {
        let t = tokenize("\n  fold f = O2 A B").unwrap();
        assert_eq!(t[1].pos, Pos { line: 2, col: 3 });
        assert_eq!(t[3].pos, Pos { line: 2, col: 10 });
    }

    #[test]
    fn malformed_input() {
        for bad in ["point A 1. 2", "point A 12x 0", "point A 1e 0", "point @", "point A -- 1"] {
            let e = tokenize(bad).unwrap_err();
            assert_eq!(e.kind.code(), "LexError", "{bad}");
        }
        assert_eq!(tokenize("x 1e999").unwrap_err().kind.code(), "LexError");
    }
}
