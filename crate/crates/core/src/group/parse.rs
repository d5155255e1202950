//! Parser for the group spec DSL:
//!
//! ```text
//! spec := "C" n | "D" n | "Dic" n | "Q" 2^a | "SD" 2^a | "M(" p "," a ")"
//!       | "EA(" p "," k ")" | spec "x" spec | "SD(" m "," k "," r ")"
//!       | "A4" | "SL23" | "Z3A4" | "F5" | "(" spec ")"
//! ```
//!
//! Whitespace is insignificant; `x` is the direct product, left-associative.

use crate::error::{Error, Result};
use crate::group::spec::{GroupSpec, NamedGroup};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Kw(&'static str),
    Int(u64),
    LParen,
    RParen,
    Comma,
    Times,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize, usize)>, // token, line, col
}

const KEYWORDS: [&str; 11] = ["Dic", "SL23", "Z3A4", "EA", "SD", "A4", "F5", "C", "D", "Q", "M"];

impl<'a> Lexer<'a> {
    fn lex(src: &'a str) -> Result<Lexer<'a>> {
        let mut toks = Vec::new();
        let bytes = src.as_bytes();
        let (mut line, mut col) = (1usize, 1usize);
        let mut i = 0;
        'outer: while i < bytes.len() {
            let c = bytes[i] as char;
            if c == '\n' {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            if c.is_whitespace() {
                i += 1;
                col += 1;
                continue;
            }
            let simple = match c {
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                'x' => Some(Tok::Times),
                _ => None,
            };
            if let Some(t) = simple {
                toks.push((t, line, col));
                i += 1;
                col += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n: u64 = text.parse().map_err(|_| Error::Parse {
                    line,
                    col,
                    message: format!("integer {text} out of range"),
                })?;
                toks.push((Tok::Int(n), line, col));
                col += i - start;
                continue;
            }
            for kw in KEYWORDS {
                if src[i..].starts_with(kw) {
                    toks.push((Tok::Kw(kw), line, col));
                    i += kw.len();
                    col += kw.len();
                    continue 'outer;
                }
            }
            return Err(Error::Parse { line, col, message: format!("unexpected character {c:?}") });
        }
        Ok(Lexer { src, toks })
    }
}

struct Parser<'a> {
    lx: Lexer<'a>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.lx
            .toks
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or_else(|| {
                let l = self.lx.src.lines().count().max(1);
                let c = self.lx.src.lines().last().map(|s| s.len() + 1).unwrap_or(1);
                (l, c)
            })
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse { line, col, message: message.into() }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.lx.toks.get(self.pos).map(|(t, _, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_int(&mut self) -> Result<u64> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            other => Err(self.prev_err(format!("expected an integer, found {other:?}"))),
        }
    }

    fn prev_err(&self, message: String) -> Error {
        let idx = self.pos.saturating_sub(1).min(self.lx.toks.len().saturating_sub(1));
        let (line, col) = self
            .lx
            .toks
            .get(idx)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1));
        Error::Parse { line, col, message }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            other => Err(self.prev_err(format!("expected {tok:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::Times) {
            self.next();
            let rhs = self.term()?;
            lhs = GroupSpec::DirectProduct(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn pow2_exponent(&self, n: u64, family: &str) -> Result<u32> {
        if n >= 8 && n.is_power_of_two() {
            Ok(n.trailing_zeros())
        } else {
            Err(self.prev_err(format!("{family} needs a power of two >= 8, got {n}")))
        }
    }

    fn term(&mut self) -> Result<GroupSpec> {
        match self.next() {
            Some(Tok::Kw("C")) => Ok(GroupSpec::Cyclic(self.expect_int()?)),
            Some(Tok::Kw("D")) => Ok(GroupSpec::Dihedral(self.expect_int()?)),
            Some(Tok::Kw("Dic")) => Ok(GroupSpec::Dicyclic(self.expect_int()?)),
            Some(Tok::Kw("Q")) => {
                let n = self.expect_int()?;
                Ok(GroupSpec::GeneralizedQuaternion(self.pow2_exponent(n, "Q")?))
            }
            Some(Tok::Kw("SD")) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.next();
                    let base = self.expect_int()?;
                    self.expect(Tok::Comma)?;
                    let top = self.expect_int()?;
                    self.expect(Tok::Comma)?;
                    let multiplier = self.expect_int()?;
                    self.expect(Tok::RParen)?;
                    Ok(GroupSpec::SemidirectCyclic { base, top, multiplier })
                } else {
                    let n = self.expect_int()?;
                    Ok(GroupSpec::Semidihedral(self.pow2_exponent(n, "SD")?))
                }
            }
            Some(Tok::Kw("M")) => {
                self.expect(Tok::LParen)?;
                let p = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let a = self.expect_int()?;
                self.expect(Tok::RParen)?;
                Ok(GroupSpec::ModularPGroup { p, a: a as u32 })
            }
            Some(Tok::Kw("EA")) => {
                self.expect(Tok::LParen)?;
                let p = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let k = self.expect_int()?;
                self.expect(Tok::RParen)?;
                Ok(GroupSpec::ElementaryAbelian { p, k: k as u32 })
            }
            Some(Tok::Kw("A4")) => Ok(GroupSpec::Named(NamedGroup::A4)),
            Some(Tok::Kw("SL23")) => Ok(GroupSpec::Named(NamedGroup::Sl23)),
            Some(Tok::Kw("Z3A4")) => Ok(GroupSpec::Named(NamedGroup::Z3A4)),
            Some(Tok::Kw("F5")) => Ok(GroupSpec::Named(NamedGroup::F5)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(self.prev_err(format!("expected a group spec, found {other:?}"))),
        }
    }
}

/// Parse a single spec. Errors carry line and column.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let lx = Lexer::lex(text)?;
    if lx.toks.is_empty() {
        return Err(Error::Parse { line: 1, col: 1, message: "empty spec".into() });
    }
    let mut p = Parser { lx, pos: 0 };
    let spec = p.expr()?;
    if p.pos != p.lx.toks.len() {
        return Err(p.err("trailing input after spec"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        assert_eq!(parse_spec("C 6").unwrap(), GroupSpec::Cyclic(6));
        assert_eq!(parse_spec("Dic7").unwrap(), GroupSpec::Dicyclic(7));
        assert_eq!(parse_spec("Q 16").unwrap(), GroupSpec::GeneralizedQuaternion(4));
        assert_eq!(parse_spec("SD 16").unwrap(), GroupSpec::Semidihedral(4));
        assert_eq!(
            parse_spec("SD(5,8,2)").unwrap(),
            GroupSpec::SemidirectCyclic { base: 5, top: 8, multiplier: 2 }
        );
        assert_eq!(parse_spec("M(3,4)").unwrap(), GroupSpec::ModularPGroup { p: 3, a: 4 });
        assert_eq!(parse_spec("EA(2,3)").unwrap(), GroupSpec::ElementaryAbelian { p: 2, k: 3 });
    }

    #[test]
    fn products_and_parens() {
        let s = parse_spec("C27xC3").unwrap();
        assert_eq!(s.spec_order(), 81);
        let s = parse_spec("C 2 x (C 3 x C 5)").unwrap();
        assert_eq!(s.spec_order(), 30);
        let s = parse_spec("C3 x D 3").unwrap();
        assert_eq!(s.spec_order(), 18);
    }

    #[test]
    fn whitespace_insignificant() {
        assert_eq!(parse_spec("  C   27 x C 3 ").unwrap(), parse_spec("C27xC3").unwrap());
    }

    #[test]
    fn errors_carry_position() {
        match parse_spec("C 6 x") {
            Err(Error::Parse { line: 1, col, .. }) => assert!(col >= 5),
            other => panic!("{other:?}"),
        }
        match parse_spec("Q 12") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_spec("C 6 )") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_spec("\nZ9") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn roundtrip_dsl() {
        for text in ["C 6", "D 8", "Dic 7", "Q 16", "SD 16", "SD(5,8,4)", "M(3,4)", "EA(2,3)", "A4", "SL23", "Z3A4", "F5", "C 3 x D 3"] {
            let s = parse_spec(text).unwrap();
            assert_eq!(parse_spec(&s.to_dsl()).unwrap(), s, "{text}");
        }
    }
}
