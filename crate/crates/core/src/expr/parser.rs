use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::{Atom, Expr, Sign, MAX_EXPONENT};
use crate::scalars::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" | "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: exponent {value} exceeds the limit of {MAX_EXPONENT}")]
    ExponentOverflow {
        line: usize,
        column: usize,
        value: String,
    },
    #[error("{line}:{column}: {message}")]
    Invalid {
        line: usize,
        column: usize,
        message: String,
    },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::ExponentOverflow { line, column, .. }
            | ParseError::Invalid { line, column, .. } => (*line, *column),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned {
                tok,
                line: l0,
                column: c0,
            });
            i += 1;
            column += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Int(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else {
            return Err(ParseError::Syntax {
                line: l0,
                column: c0,
                expected: atom_starts(),
                found: format!("'{c}'"),
            });
        }
        column += i - start;
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

const IDENTS: [&str; 10] = [
    "a", "ad", "xi", "xibar", "dxi", "dxibar", "q", "qN", "br", "rad",
];

fn atom_starts() -> Vec<String> {
    let mut v: Vec<String> = IDENTS.iter().map(|s| format!("'{s}'")).collect();
    v.push("integer".into());
    v.push("'('".into());
    v
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError::Syntax {
            line: t.line,
            column: t.column,
            expected,
            found: t.tok.to_string(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(vec![tok.to_string()])
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek().tok, Tok::Ident(_) | Tok::Int(_) | Tok::LParen)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = Sign::Plus;
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                sign = Sign::Minus;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek().tok {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if !self.starts_atom() {
            return self.fail(atom_starts());
        }
        let mut factors = vec![self.factor()?];
        loop {
            if self.peek().tok == Tok::Star {
                self.bump();
                if !self.starts_atom() {
                    return self.fail(atom_starts());
                }
            } else if !self.starts_atom() {
                break;
            }
            factors.push(self.factor()?);
        }
        Ok(Expr::Product(factors))
    }

    fn exponent(&mut self) -> Result<(i64, usize, usize), ParseError> {
        let start = self.peek().clone();
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(digits) = self.peek().tok.clone() else {
            return self.fail(vec!["integer".into()]);
        };
        self.bump();
        let overflow = || ParseError::ExponentOverflow {
            line: start.line,
            column: start.column,
            value: format!("{}{digits}", if negative { "-" } else { "" }),
        };
        let v: i64 = digits.parse().map_err(|_| overflow())?;
        if v > MAX_EXPONENT {
            return Err(overflow());
        }
        Ok((if negative { -v } else { v }, start.line, start.column))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let parenthesized = self.peek().tok == Tok::LParen;
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (e, line, column) = self.exponent()?;
        // q^m and qN^s fold into the atom
        match base {
            Expr::Atom(Atom::QPow(1)) if !parenthesized => Ok(Expr::Atom(Atom::QPow(e))),
            Expr::Atom(Atom::QN(1)) if !parenthesized => Ok(Expr::Atom(Atom::QN(e))),
            b => {
                if e < 0 && !b.invertible_form() {
                    return Err(ParseError::Invalid {
                        line,
                        column,
                        message: "negative exponents need a base built only from q, qN, br(n), rad(n) and numbers".into(),
                    });
                }
                Ok(Expr::Power(Box::new(b), e))
            }
        }
    }

    fn small_int(&mut self) -> Result<u32, ParseError> {
        let t = self.peek().clone();
        let Tok::Int(digits) = t.tok else {
            return self.fail(vec!["integer".into()]);
        };
        self.bump();
        digits.parse().map_err(|_| ParseError::Invalid {
            line: t.line,
            column: t.column,
            message: format!("{digits} is too large here"),
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.bump();
                let a = match name.as_str() {
                    "a" => Atom::A,
                    "ad" => Atom::Ad,
                    "xi" => Atom::Xi,
                    "xibar" => Atom::Xibar,
                    "dxi" => Atom::Dxi,
                    "dxibar" => Atom::Dxibar,
                    "q" => Atom::QPow(1),
                    "qN" => Atom::QN(1),
                    "br" | "rad" => {
                        self.expect(Tok::LParen)?;
                        let n = self.small_int()?;
                        self.expect(Tok::RParen)?;
                        if name == "br" {
                            Atom::Bracket(n)
                        } else {
                            Atom::Rad(n)
                        }
                    }
                    _ => {
                        return Err(ParseError::Syntax {
                            line: t.line,
                            column: t.column,
                            expected: atom_starts(),
                            found: format!("'{name}'"),
                        })
                    }
                };
                Ok(Expr::Atom(a))
            }
            Tok::Int(digits) => {
                self.bump();
                let num: BigInt = digits.parse().expect("digits");
                let mut den = BigInt::from(1);
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.peek().clone();
                    let Tok::Int(dd) = d.tok else {
                        return self.fail(vec!["integer".into()]);
                    };
                    self.bump();
                    den = dd.parse().expect("digits");
                    if den == BigInt::from(0) {
                        return Err(ParseError::Invalid {
                            line: d.line,
                            column: d.column,
                            message: "zero denominator".into(),
                        });
                    }
                }
                Ok(Expr::Atom(Atom::Rational(Rational::new(num, den))))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?.normalize();
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.fail(atom_starts()),
        }
    }
}

/// Parse into a normalized tree.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        let mut expected = vec!["'+'".to_string(), "'-'".into(), "'*'".into(), "'^'".into()];
        expected.extend(atom_starts());
        expected.push("end of input".into());
        return p.fail(expected);
    }
    Ok(e.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(a: Atom) -> Expr {
        Expr::Atom(a)
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse("ad^2 xi").unwrap(),
            Expr::Product(vec![
                Expr::Power(Box::new(atom(Atom::Ad)), 2),
                atom(Atom::Xi)
            ])
        );
        assert_eq!(
            parse("q^-1 xibar a").unwrap(),
            Expr::Product(vec![atom(Atom::QPow(-1)), atom(Atom::Xibar), atom(Atom::A)])
        );
        let e = parse("xi xibar - q^-1 xibar xi").unwrap();
        assert!(matches!(&e, Expr::Sum(ts) if ts.len() == 2 && ts[1].0 == Sign::Minus));
        assert_eq!(parse("xi*xibar").unwrap(), parse("xi  xibar").unwrap());
        assert_eq!(parse("qN^-2").unwrap(), atom(Atom::QN(-2)));
        assert_eq!(
            parse("(q)^2").unwrap(),
            Expr::Power(Box::new(atom(Atom::QPow(1))), 2)
        );
        assert_eq!(parse("br(3)").unwrap(), atom(Atom::Bracket(3)));
        assert_eq!(
            parse("6/4").unwrap(),
            atom(Atom::Rational(Rational::new(3.into(), 2.into())))
        );
    }

    #[test]
    fn product_order_is_kept() {
        let e = parse("xibar xi ad a").unwrap();
        assert_eq!(
            e,
            Expr::Product(vec![
                atom(Atom::Xibar),
                atom(Atom::Xi),
                atom(Atom::Ad),
                atom(Atom::A)
            ])
        );
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse("xi +\n  * a").unwrap_err();
        match &err {
            ParseError::Syntax {
                line,
                column,
                expected,
                ..
            } => {
                assert_eq!((*line, *column), (2, 3));
                assert!(expected.contains(&"'xi'".to_string()));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("xi^1000001"),
            Err(ParseError::ExponentOverflow { .. })
        ));
        assert!(matches!(
            parse("xi^99999999999999999999"),
            Err(ParseError::ExponentOverflow { .. })
        ));
        assert!(parse("xi^1000000").is_ok());
        assert!(matches!(parse("xi^-1"), Err(ParseError::Invalid { .. })));
        assert!(parse("foo").is_err());
        assert!(parse("(xi").is_err());
        assert!(parse("").is_err());
        assert!(parse("1/0").is_err());
    }
}
