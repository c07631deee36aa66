//! Text forms.
//!
//! Elements: sums of terms `scalar*T[i1,..]*X^[e1,..]`, e.g.
//! `(q-1)*T[1]*X^[0,1,0] + q*X^[1,-1,0]`. The parser accepts any expression
//! built with `+ - * / ^` and parentheses from scalars, `q`, `T[word]`,
//! `T<i>`, `X<j>` and `X^[exponents]`, evaluated with the algebra's
//! multiplication; the printed normal form is one such expression.
//!
//! Words: whitespace separated letters `T<i>`, `T<i>^-1`, `X<j>`, `X<j>^-1`
//! (`Tinv<i>`, `Xinv<j>` also accepted).

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::laurent::ExponentVector;
use crate::weyl::Permutation;
use crate::scalars::{Field, ScalarError};

use super::{GeneratorWord, HeckeAlgebra, HeckeElement, HeckeError, Letter};

fn syntax(text: &str, reason: impl Into<String>) -> HeckeError {
    HeckeError::Syntax { text: text.to_string(), reason: reason.into() }
}

impl FromStr for Letter {
    type Err = HeckeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (body, inverse) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, digits, inverse) = if let Some(d) = body.strip_prefix("Tinv") {
            ('T', d, !inverse)
        } else if let Some(d) = body.strip_prefix("Xinv") {
            ('X', d, !inverse)
        } else if let Some(d) = body.strip_prefix('T').or_else(|| body.strip_prefix('t')) {
            ('T', d, inverse)
        } else if let Some(d) = body.strip_prefix('X').or_else(|| body.strip_prefix('x')) {
            ('X', d, inverse)
        } else {
            return Err(syntax(s, "letters are T<i>, X<j>, optionally followed by ^-1"));
        };
        let index: usize = digits.parse().map_err(|_| syntax(s, "missing generator index"))?;
        Ok(match (kind, inverse) {
            ('T', false) => Letter::T(index),
            ('T', true) => Letter::TInv(index),
            ('X', false) => Letter::X(index),
            _ => Letter::XInv(index),
        })
    }
}

impl FromStr for GeneratorWord {
    type Err = HeckeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(GeneratorWord::empty());
        }
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',' || c == '*')
            .filter(|tok| !tok.is_empty())
            .map(Letter::from_str)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    TWord(Vec<usize>),
    XGen(usize),
    XExp(Vec<i64>),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<Tok>, HeckeError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    let bracket_list = |i: &mut usize| -> Result<Vec<i64>, HeckeError> {
        if chars.get(*i) != Some(&'[') {
            return Err(syntax(text, "expected '['"));
        }
        let close = chars[*i..].iter().position(|&c| c == ']').ok_or_else(|| syntax(text, "unclosed '['"))? + *i;
        let body: String = chars[*i + 1..close].iter().collect();
        *i = close + 1;
        if body.trim().is_empty() {
            return Ok(Vec::new());
        }
        body.split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|_| syntax(text, format!("bad list entry {s:?}"))))
            .collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => out.push(Tok::Int(digits(&mut i).parse().unwrap())),
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            'T' => {
                i += 1;
                if chars.get(i) == Some(&'[') {
                    let list = bracket_list(&mut i)?;
                    let word = list
                        .into_iter()
                        .map(|v| usize::try_from(v).map_err(|_| syntax(text, "negative index in T[...]")))
                        .collect::<Result<_, _>>()?;
                    out.push(Tok::TWord(word));
                } else {
                    let d = digits(&mut i);
                    let idx = d.parse().map_err(|_| syntax(text, "expected T[...] or T<i>"))?;
                    out.push(Tok::TWord(vec![idx]));
                }
            }
            'X' => {
                i += 1;
                if chars.get(i) == Some(&'^') && chars.get(i + 1) == Some(&'[') {
                    i += 1;
                    out.push(Tok::XExp(bracket_list(&mut i)?));
                } else {
                    let d = digits(&mut i);
                    let idx = d.parse().map_err(|_| syntax(text, "expected X^[...] or X<j>"))?;
                    out.push(Tok::XGen(idx));
                }
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
                i += 1;
            }
            other => return Err(syntax(text, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Value<F> {
    Scalar(F),
    Element(HeckeElement<F>),
}

struct Parser<'a, F> {
    text: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    algebra: &'a HeckeAlgebra<F>,
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

    fn lift(&self, v: Value<F>) -> HeckeElement<F> {
        match v {
            Value::Scalar(c) => self.algebra.scalar(c),
            Value::Element(h) => h,
        }
    }

    fn add(&self, a: Value<F>, b: Value<F>) -> Result<Value<F>, HeckeError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (a, b) => Value::Element(self.lift(a).try_add(&self.lift(b))?),
        })
    }

    fn neg(&self, a: Value<F>) -> Value<F> {
        match a {
            Value::Scalar(x) => Value::Scalar(-x),
            Value::Element(h) => Value::Element(h.negate()),
        }
    }

    fn mul(&self, a: Value<F>, b: Value<F>) -> Result<Value<F>, HeckeError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(x), Value::Element(h)) | (Value::Element(h), Value::Scalar(x)) => Value::Element(h.scale(&x)),
            (Value::Element(g), Value::Element(h)) => Value::Element(g.try_mul(&h)?),
        })
    }

    fn as_scalar(&self, v: &Value<F>) -> Option<F> {
        match v {
            Value::Scalar(x) => Some(x.clone()),
            Value::Element(h) => h.as_scalar(),
        }
    }

    fn expr(&mut self) -> Result<Value<F>, HeckeError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, self.neg(rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value<F>, HeckeError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.mul(acc, rhs)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let d = self.as_scalar(&rhs).ok_or_else(|| syntax(self.text, "can only divide by scalars"))?;
                    let inv = d.inv().ok_or(ScalarError::DivisionByZero)?;
                    acc = self.mul(acc, Value::Scalar(inv))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value<F>, HeckeError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                let v = self.unary()?;
                Ok(self.neg(v))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value<F>, HeckeError> {
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
            return Err(syntax(self.text, "exponent must be an integer"));
        };
        let e: i64 = e.try_into().map_err(|_| syntax(self.text, "exponent too large"))?;
        let e = if negative { -e } else { e };
        if let Some(x) = self.as_scalar(&base) {
            return Ok(Value::Scalar(x.pow_i64(e).ok_or(ScalarError::DivisionByZero)?));
        }
        let mut h = self.lift(base);
        if e < 0 {
            h = self.invert_term(&h)?;
        }
        let mut acc = self.algebra.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&h)?;
        }
        Ok(Value::Element(acc))
    }

    /// Inverse of a single basis term `c T_w X^λ`, which is
    /// `c^{-1} X^{-λ} T_w^{-1}`.
    fn invert_term(&self, h: &HeckeElement<F>) -> Result<HeckeElement<F>, HeckeError> {
        let mut terms = h.terms();
        let (Some((w, lambda, c)), None) = (terms.next(), terms.next()) else {
            return Err(syntax(self.text, "negative powers only of scalars and single terms"));
        };
        let c_inv = c.inv().ok_or(ScalarError::DivisionByZero)?;
        let mut acc = self.algebra.basis_element(Permutation::identity(w.size()), lambda.neg(), c_inv);
        for &i in w.reduced_word().iter().rev() {
            acc = acc.try_mul(&self.algebra.t_inv(i)?)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Value<F>, HeckeError> {
        let n = self.algebra.rank();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Value::Scalar(self.algebra.q().bigint_like(&v))),
            Some(Tok::Q) => {
                let like = self.algebra.q();
                let q = like.indeterminate_like().ok_or_else(|| {
                    HeckeError::Scalar(ScalarError::MalformedScalar {
                        text: self.text.to_string(),
                        reason: format!("`q` is not available in field {}", like.kind()),
                    })
                })?;
                Ok(Value::Scalar(q))
            }
            Some(Tok::TWord(word)) => Ok(Value::Element(self.algebra.t_word(&word)?)),
            Some(Tok::XGen(j)) => Ok(Value::Element(self.algebra.x(j)?)),
            Some(Tok::XExp(exps)) => {
                if exps.len() != n + 1 {
                    return Err(crate::laurent::LaurentError::LengthMismatch { expected: n + 1, got: exps.len() }.into());
                }
                Ok(Value::Element(self.algebra.basis_element(
                    crate::weyl::Permutation::identity(n + 1),
                    ExponentVector::new(exps),
                    self.algebra.field_one(),
                )))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(self.text, "unbalanced parenthesis")),
                }
            }
            Some(t) => Err(syntax(self.text, format!("unexpected token {t:?}"))),
            None => Err(syntax(self.text, "unexpected end of input")),
        }
    }
}

/// Parse an element of `algebra` from its text form.
pub fn parse_element<F: Field>(text: &str, algebra: &HeckeAlgebra<F>) -> Result<HeckeElement<F>, HeckeError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(syntax(text, "empty"));
    }
    let mut parser = Parser { text, toks, pos: 0, algebra };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(syntax(text, "trailing input"));
    }
    Ok(parser.lift(value))
}

/// Parse `name = element` lines; blank lines and `#` comments are skipped.
pub fn parse_named_elements<F: Field>(
    text: &str,
    algebra: &HeckeAlgebra<F>,
) -> Result<BTreeMap<String, HeckeElement<F>>, HeckeError> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, body) = line.split_once('=').ok_or_else(|| syntax(line, "expected `name = element`"))?;
        let name = name.trim().to_ascii_lowercase().replace('_', "");
        if out.insert(name.clone(), parse_element(body.trim(), algebra)?).is_some() {
            return Err(syntax(line, format!("duplicate image for {name}")));
        }
    }
    Ok(out)
}
