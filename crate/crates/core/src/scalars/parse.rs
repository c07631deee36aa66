//! Scalar grammar: integers, fractions and polynomials in `q` combined with
//! `+ - * / ^` and parentheses, e.g. `1/2`, `q^2-1`, `(q-1)/(q+1)`, `q^-1`.

use num_bigint::BigInt;

use super::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq)]
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

fn malformed(text: &str, reason: impl Into<String>) -> ScalarError {
    ScalarError::MalformedScalar { text: text.to_string(), reason: reason.into() }
}

fn lex(text: &str) -> Result<Vec<Tok>, ScalarError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Int(text[start..=i].parse().unwrap()));
            }
            'q' => out.push(Tok::Q),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            other => return Err(malformed(text, format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F> {
    text: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    like: &'a F,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<F, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<F, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc * self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).ok_or(ScalarError::DenominatorZero)?;
                }
                // implicit product, as in `2q` or `3(q+1)`
                Some(Tok::Q) | Some(Tok::LParen) => {
                    acc = acc * self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<F, ScalarError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<F, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let Some(Tok::Int(e)) = self.bump() else {
            return Err(malformed(self.text, "exponent must be an integer"));
        };
        let e: i64 = e.try_into().map_err(|_| malformed(self.text, "exponent too large"))?;
        let e = if negative { -e } else { e };
        base.pow_i64(e).ok_or(ScalarError::DenominatorZero)
    }

    fn atom(&mut self) -> Result<F, ScalarError> {
        match self.bump() {
            Some(Tok::Int(v)) => Ok(self.like.bigint_like(&v)),
            Some(Tok::Q) => self
                .like
                .indeterminate_like()
                .ok_or_else(|| malformed(self.text, format!("`q` is not available in field {}", self.like.kind()))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(malformed(self.text, "unbalanced parenthesis")),
                }
            }
            Some(t) => Err(malformed(self.text, format!("unexpected token {t:?}"))),
            None => Err(malformed(self.text, "unexpected end of input")),
        }
    }
}

/// Parse `text` as an element of the field that `like` belongs to.
pub fn parse_in<F: Field>(text: &str, like: &F) -> Result<F, ScalarError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(malformed(text, "empty"));
    }
    let mut parser = Parser { text, toks, pos: 0, like };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(malformed(text, "trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, RatFunc, Rational};

    #[test]
    fn rationals() {
        let z = Rational::from_integer(0.into());
        assert_eq!(parse_in("1/2", &z).unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_in("-3", &z).unwrap(), Rational::from_integer((-3).into()));
        assert_eq!(parse_in("2^-2", &z).unwrap(), Rational::new(1.into(), 4.into()));
        assert_eq!(parse_in("1/0", &z), Err(ScalarError::DenominatorZero));
        assert!(matches!(parse_in("q", &z), Err(ScalarError::MalformedScalar { .. })));
        assert!(matches!(parse_in("1/", &z), Err(ScalarError::MalformedScalar { .. })));
        assert!(matches!(parse_in("(1", &z), Err(ScalarError::MalformedScalar { .. })));
    }

    #[test]
    fn prime_field() {
        let z = Fp::zero(7).unwrap();
        assert_eq!(parse_in("10", &z).unwrap().residue(), 3);
        assert_eq!(parse_in("1/3", &z).unwrap().residue(), 5);
    }

    #[test]
    fn rational_functions() {
        let z = RatFunc::zero();
        assert_eq!(parse_in("q-1", &z).unwrap().to_string(), "q-1");
        assert_eq!(parse_in("(q^2-1)/(q+1)", &z).unwrap().to_string(), "q-1");
        assert_eq!(parse_in("2q", &z).unwrap().to_string(), "2*q");
        assert_eq!(parse_in("q^-1", &z).unwrap().to_string(), "1/q");
        assert_eq!(parse_in("(q-1)/(q-1)-1", &z).unwrap(), RatFunc::zero());
    }
}
