//! Recursive-descent parser for the ordinal text grammar:
//!
//! ```text
//! ordinal := term ('+' term)*
//! term    := 'w' ('^' atom)? ('*' nat)?  |  nat
//! atom    := nat | 'w' | '(' ordinal ')'
//! nat     := [0-9]+
//! ```
//!
//! Whitespace between tokens is ignored. Terms are combined with ordinal
//! addition, so non-canonical input such as `w + w^2` is normalised.

use std::fmt;

use thiserror::Error;

use super::{Cnf, Coefficient};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ZeroCoefficient,
    NumberOutOfRange,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::ZeroCoefficient => f.write_str("coefficient must be at least 1"),
            ParseErrorKind::NumberOutOfRange => f.write_str("number out of range for coefficient type"),
        }
    }
}

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub(super) fn parse<C: Coefficient>(text: &str) -> Result<Cnf<C>, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let value = p.ordinal()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c))),
    }
}

impl<'a> Parser<'a> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c)),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn ordinal<C: Coefficient>(&mut self) -> Result<Cnf<C>, ParseError> {
        let mut acc = self.term()?;
        while self.eat('+') {
            let t = self.term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn term<C: Coefficient>(&mut self) -> Result<Cnf<C>, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('w') => {
                self.pos += 1;
                let exponent = if self.eat('^') { self.atom()? } else { Cnf::one() };
                let coefficient = if self.eat('*') {
                    self.skip_ws();
                    let start = self.pos;
                    let c: C = self.nat()?;
                    if c.is_zero() {
                        return Err(ParseError {
                            position: start,
                            kind: ParseErrorKind::ZeroCoefficient,
                        });
                    }
                    c
                } else {
                    C::one()
                };
                Ok(Cnf::monomial(exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok(Cnf::from_coefficient(self.nat()?)),
            _ => Err(self.unexpected()),
        }
    }

    fn atom<C: Coefficient>(&mut self) -> Result<Cnf<C>, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('w') => {
                self.pos += 1;
                Ok(Cnf::omega())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.ordinal()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Cnf::from_coefficient(self.nat()?)),
            _ => Err(self.unexpected()),
        }
    }

    fn nat<C: Coefficient>(&mut self) -> Result<C, ParseError> {
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.unexpected());
        }
        self.pos += digits;
        self.src[start..self.pos].parse::<C>().map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::NumberOutOfRange,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Ordinal, SmallOrdinal};

    fn err(s: &str) -> ParseError {
        s.parse::<Ordinal>().unwrap_err()
    }

    #[test]
    fn reads_terms_directly() {
        let a: Ordinal = "w^2*3 + w*2 + 5".parse().unwrap();
        let got: Vec<(u64, u64)> = a
            .terms()
            .iter()
            .map(|t| (t.exponent().to_u64().unwrap(), num_traits::ToPrimitive::to_u64(t.coefficient()).unwrap()))
            .collect();
        assert_eq!(got, vec![(2, 3), (1, 2), (0, 5)]);
    }

    #[test]
    fn zero_and_absorption() {
        assert!("0".parse::<Ordinal>().unwrap().is_zero());
        assert_eq!("1 + w".parse::<Ordinal>().unwrap(), Ordinal::omega());
        assert_eq!("w + w^2".parse::<Ordinal>().unwrap().to_string(), "w^2");
        assert_eq!("w + 0".parse::<Ordinal>().unwrap(), Ordinal::omega());
        assert_eq!("3 + 4".parse::<Ordinal>().unwrap().to_string(), "7");
    }

    #[test]
    fn whitespace_insensitive() {
        let a: Ordinal = "  w ^ ( w + 1 ) * 2+3 ".parse().unwrap();
        assert_eq!(a.to_string(), "w^(w + 1)*2 + 3");
    }

    #[test]
    fn rejects_zero_coefficient() {
        let e = err("w*0");
        assert_eq!(e.kind, ParseErrorKind::ZeroCoefficient);
        assert_eq!(e.position, 2);
        assert_eq!(err("w^2 * 00").kind, ParseErrorKind::ZeroCoefficient);
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(err("").kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err("w +").kind, ParseErrorKind::UnexpectedEnd);
        let e = err("w + x");
        assert_eq!(e, ParseError { position: 4, kind: ParseErrorKind::UnexpectedChar('x') });
        assert_eq!(err("w^w^2").position, 3);
        assert_eq!(err("w^(w").kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err("2*w").position, 1);
        assert_eq!(err("w^-1").position, 2);
    }

    #[test]
    fn out_of_range_for_small_coefficients() {
        let e = "w*99999999999999999999".parse::<SmallOrdinal>().unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NumberOutOfRange);
        assert!("w*99999999999999999999".parse::<Ordinal>().is_ok());
    }
}
