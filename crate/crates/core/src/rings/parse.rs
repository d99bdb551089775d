//! Text format for polynomials and scalars.
//!
//! Polynomials are signed sums of terms with `^` for powers and `*`
//! optional between factors, over variables `x0, x1, …`. The symbol `t`
//! denotes the quadratic generator of `gf:p^2` and `q(sqrt(d))`.
//! Parentheses are accepted, and `/` divides by a nonzero constant, so
//! `1/2*(1 - x0)` and `3+2*t` are both valid.

use num_bigint::BigInt;

use super::field::{Field, Scalar};
use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Var(usize),
    Gen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Token::Number(n)));
                continue;
            }
            'x' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(Error::Parse { position: start, message: "expected variable index after `x`".into() });
                }
                let idx = src[digits..i].parse().map_err(|_| Error::Parse {
                    position: start,
                    message: "variable index too large".into(),
                })?;
                out.push((start, Token::Var(idx)));
                continue;
            }
            't' => out.push((start, Token::Gen)),
            other => {
                return Err(Error::Parse { position: start, message: format!("unexpected character `{other}`") });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    field: Field,
    nvars: usize,
    _src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.field, self.nvars);
        let mut sign_neg = false;
        match self.peek() {
            Some(Token::Plus) => self.pos += 1,
            Some(Token::Minus) => {
                self.pos += 1;
                sign_neg = true;
            }
            _ => {}
        }
        loop {
            let term = self.term()?;
            acc = if sign_neg { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    sign_neg = false;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    sign_neg = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Number(_) | Token::Var(_) | Token::Gen | Token::LParen)
        )
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let rhs = self.factor()?;
                    let inv = rhs.as_constant().and_then(|c| c.inv()).ok_or(Error::Parse {
                        position: at,
                        message: "division is only defined by nonzero constants".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                _ if self.starts_factor() => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Number(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        position: self.offset(),
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.field.from_bigint(&n), self.nvars))
            }
            Some(Token::Var(i)) => {
                if i >= self.nvars {
                    return Err(Error::Parse {
                        position: at,
                        message: format!("variable x{i} out of range (ring has {} variables)", self.nvars),
                    });
                }
                self.pos += 1;
                Ok(Polynomial::var(self.field, self.nvars, i))
            }
            Some(Token::Gen) => {
                let g = self.field.generator().ok_or(Error::Parse {
                    position: at,
                    message: format!("field {} has no generator `t`", self.field),
                })?;
                self.pos += 1;
                Ok(Polynomial::constant(g, self.nvars))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `field` in `nvars` variables.
pub fn parse_polynomial(src: &str, field: Field, nvars: usize) -> Result<Polynomial> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty expression".into() });
    }
    let mut parser = Parser { tokens, pos: 0, end: src.len(), field, nvars, _src: src };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

/// Parses a scalar literal such as `3`, `-1/2` or `3+2*t`.
pub fn parse_scalar(src: &str, field: Field) -> Result<Scalar> {
    let p = parse_polynomial(src, field, 0)?;
    Ok(p.as_constant().expect("zero-variable polynomial is constant"))
}

/// Parses a comma-separated list of scalars.
pub fn parse_scalar_list(src: &str, field: Field) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(',') {
        let s = parse_scalar(piece, field).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse { position: position + offset, message },
            other => other,
        })?;
        out.push(s);
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn parses_the_sphere_relation() {
        let p = parse_polynomial("1 - x0^2 - x1^2 - x2^2", gf5(), 3).unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.to_string(), "4*x0^2 + 4*x1^2 + 4*x2^2 + 1");
        let q = parse_polynomial("1 - x0^2 - x1^2 - x2^2", Field::Rational, 3).unwrap();
        assert_eq!(q.to_string(), "-x0^2 - x1^2 - x2^2 + 1");
    }

    #[test]
    fn optional_star_and_parentheses() {
        let a = parse_polynomial("2x0x1", gf5(), 2).unwrap();
        let b = parse_polynomial("2*x0*x1", gf5(), 2).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("1/2*(1 - x0)", Field::Rational, 1).unwrap();
        let d = parse_polynomial("1/2 - 1/2*x0", Field::Rational, 1).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn scalar_literals() {
        let f = Field::prime_square(5).unwrap();
        let s = parse_scalar("3+2*t", f).unwrap();
        assert_eq!(s.to_string(), "3+2*t");
        assert_eq!(parse_scalar("7", gf5()).unwrap(), gf5().from_i64(2));
        assert_eq!(parse_scalar("-1/2", Field::Rational).unwrap().to_string(), "-1/2");
        let list = parse_scalar_list("1, 0, -1", gf5()).unwrap();
        assert_eq!(list, vec![gf5().one(), gf5().zero(), gf5().from_i64(-1)]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial("x0 + $", gf5(), 1) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("x0 + x3", gf5(), 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("x0 / x1", gf5(), 2).is_err());
        assert!(parse_polynomial("t", gf5(), 0).is_err());
        assert!(parse_polynomial("(x0", gf5(), 1).is_err());
        assert!(parse_polynomial("", gf5(), 1).is_err());
        match parse_scalar_list("1, 2, %", gf5()) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn display_output_reparses() {
        for (src, field, n) in [
            ("3*x0^2*x1 - 1/2*x1 + 7", Field::Rational, 2),
            ("(1+2*t)*x0 + t", Field::prime_square(5).unwrap(), 1),
            ("(1/2-t)*x0^3 - x0", Field::gaussian(), 1),
        ] {
            let p = parse_polynomial(src, field, n).unwrap();
            let again = parse_polynomial(&p.to_string(), field, n).unwrap();
            assert_eq!(p, again, "{src} -> {p}");
        }
    }
}
