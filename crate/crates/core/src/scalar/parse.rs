//! Recursive-descent parser for the scalar wire grammar:
//! integers, `q`, `+ - * / ^` and parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Poly, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            'q' => Tok::Q,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        };
        out.push((i, tok));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        let exp = match self.peek() {
            Some(Tok::Int(n)) => {
                let e: i32 = n.try_into().map_err(|_| Error::Parse {
                    pos: self.offset(),
                    msg: "exponent too large".into(),
                })?;
                self.pos += 1;
                e
            }
            _ => return self.err("expected integer exponent"),
        };
        base.pow(if negative { -exp } else { exp })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Scalar::Rat(BigRational::from_integer(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(Scalar::from_poly(Poly::monomial(
                    BigRational::from_integer(1.into()),
                    1,
                )))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected number, `q` or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a scalar expression into canonical form.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty scalar".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_scalar("3/4").unwrap(), Scalar::ratio(3, 4));
        assert_eq!(parse_scalar("q^2-1").unwrap().to_string(), "q^2-1");
        let f = parse_scalar("1/(q+1)").unwrap();
        match &f {
            Scalar::Func(rf) => assert_eq!(rf.denominator().to_string(), "q+1"),
            _ => panic!("expected a rational function"),
        }
        assert_eq!(parse_scalar("-(2*q)*q").unwrap().to_string(), "-2*q^2");
        assert_eq!(parse_scalar("2-3").unwrap(), Scalar::int(-1));
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(
            parse_scalar("1 + x").unwrap_err(),
            Error::Parse {
                pos: 4,
                msg: "unexpected character `x`".into()
            }
        );
        assert!(matches!(parse_scalar("(q+1"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_scalar("q^"), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar(""), Err(Error::Parse { pos: 0, .. })));
    }
}
