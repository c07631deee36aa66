//! Exact coefficient fields.
//!
//! Every algebraic structure in this crate is generic over [`Field`]. Three
//! fields are provided: the rationals ([`Rational`]), prime fields ([`Fp`],
//! modulus carried at runtime) and rational functions in one indeterminate
//! `q` with rational coefficients ([`RatFunc`]).
//!
//! Field elements do not have context-free constants: a prime-field zero
//! needs its modulus. Constants are therefore derived from an existing
//! element (`x.zero_like()`, `x.one_like()`).

mod element;
mod parse;
mod poly;
mod prime;
mod ratfunc;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

pub use element::{arithmetic, invert, parse_scalar, ArithOp, FieldElement};
pub use parse::parse_in;
pub use poly::IntPoly;
pub use prime::{is_prime, Fp};
pub use ratfunc::RatFunc;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar {text:?}: {reason}")]
    MalformedScalar { text: String, reason: String },
    #[error("modulus {0} is not prime")]
    NonInvertibleModulus(u64),
    #[error("denominator is zero")]
    DenominatorZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldKind, right: FieldKind },
    #[error("unknown field descriptor {0:?} (expected Q, Fp:<prime> or Qq)")]
    UnknownField(String),
}

/// Which coefficient field a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
    RationalFunction,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "Fp:{p}"),
            FieldKind::RationalFunction => write!(f, "Qq"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "Q" => Ok(FieldKind::Rational),
            "Qq" | "Q(q)" => Ok(FieldKind::RationalFunction),
            _ => {
                let rest = s
                    .strip_prefix("Fp:")
                    .or_else(|| s.strip_prefix("F:"))
                    .ok_or_else(|| ScalarError::UnknownField(s.to_string()))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| ScalarError::UnknownField(s.to_string()))?;
                if !is_prime(p) {
                    return Err(ScalarError::NonInvertibleModulus(p));
                }
                Ok(FieldKind::Prime(p))
            }
        }
    }
}

/// An exact field with decidable equality.
///
/// Arithmetic is through the std operator traits (by value, or by value with
/// a borrowed right operand). Mixing elements of different prime fields is a
/// programming error and panics; use [`Field::same_field`] at API boundaries.
pub trait Field:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn kind(&self) -> FieldKind;

    fn zero_like(&self) -> Self;

    fn one_like(&self) -> Self;

    fn bigint_like(&self, value: &BigInt) -> Self;

    fn is_zero(&self) -> bool;

    fn inv(&self) -> Option<Self>;

    /// The indeterminate `q`, for fields that have one.
    fn indeterminate_like(&self) -> Option<Self> {
        None
    }

    fn same_field(&self, _other: &Self) -> bool {
        true
    }

    /// Deterministic total order used for serialization only; it is not
    /// compatible with the field operations.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// All `k`-th roots of `self` in the field, or `None` when the field
    /// cannot decide the question exactly.
    fn nth_roots(&self, k: u32) -> Option<Vec<Self>>;

    fn int_like(&self, value: i64) -> Self {
        self.bigint_like(&BigInt::from(value))
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.clone() * inv)
    }

    /// Integer power; negative exponents invert first.
    fn pow_i64(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Some(acc)
    }
}

/// Whether `text` prints as a single atom, i.e. it can be used as a factor in
/// a product without parentheses.
pub(crate) fn is_atomic_display(text: &str) -> bool {
    let body = text.strip_prefix('-').unwrap_or(text);
    if body.is_empty() {
        return false;
    }
    let is_int = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if is_int(body) {
        return true;
    }
    if let Some((a, b)) = body.split_once('/') {
        return is_int(a) && is_int(b);
    }
    if body == "q" {
        return true;
    }
    if let Some(e) = body.strip_prefix("q^") {
        return is_int(e);
    }
    false
}
