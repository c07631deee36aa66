use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::IntPoly;
use super::rational::Rational;
use super::{Field, FieldKind};

/// Element of `Q(q)`, stored as a reduced quotient of integer polynomials.
///
/// Invariants: numerator and denominator are coprime in `Z[q]`, the
/// denominator has positive leading coefficient, and zero is `0/1`. Two
/// values are equal iff their stored forms are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Build `num / den` in canonical form; `None` if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFunc { num: IntPoly::monomial(BigInt::one(), 1), den: IntPoly::one() }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        RatFunc { num, den: IntPoly::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::reduce(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    /// `Some((c, e))` when the value is `c * q^e` with `c` rational.
    pub fn as_laurent_monomial(&self) -> Option<(Rational, i64)> {
        let (nc, nd) = self.num.as_monomial()?;
        let (dc, dd) = self.den.as_monomial()?;
        Some((Rational::new(nc.clone(), dc.clone()), nd as i64 - dd as i64))
    }

    /// `c * q^e` for rational `c` and any integer `e`.
    pub fn laurent_monomial(c: &Rational, e: i64) -> Self {
        let q_part = if e >= 0 {
            IntPoly::monomial(BigInt::one(), e as usize)
        } else {
            IntPoly::one()
        };
        let q_den = if e < 0 {
            IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize)
        } else {
            IntPoly::one()
        };
        Self::reduce(q_part.scale(c.numer()), q_den.scale(c.denom()))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let den = self.den.to_string();
        if super::is_atomic_display(&den) {
            write!(f, "/{den}")
        } else {
            write!(f, "/({den})")
        }
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(self.num.add(&rhs.num), self.den);
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFunc::reduce(num, self.den.mul(&rhs.den))
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den }
    }
}

impl Field for RatFunc {
    fn kind(&self) -> FieldKind {
        FieldKind::RationalFunction
    }

    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }

    fn one_like(&self) -> Self {
        RatFunc::one()
    }

    fn bigint_like(&self, value: &BigInt) -> Self {
        RatFunc::from_poly(IntPoly::constant(value.clone()))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    fn indeterminate_like(&self) -> Option<Self> {
        Some(RatFunc::q())
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        let total = |r: &RatFunc| r.num.coeffs().len() + r.den.coeffs().len();
        total(self)
            .cmp(&total(other))
            .then_with(|| self.den.canonical_cmp(&other.den))
            .then_with(|| self.num.canonical_cmp(&other.num))
    }

    /// Searches the ansatz `c * q^e` only; returns `None` when it yields
    /// nothing, since a root outside the ansatz is not ruled out here.
    fn nth_roots(&self, k: u32) -> Option<Vec<Self>> {
        if k == 0 {
            return None;
        }
        if self.num.is_zero() {
            return Some(vec![self.clone()]);
        }
        let (c, e) = self.as_laurent_monomial()?;
        if e % k as i64 != 0 {
            return None;
        }
        let roots: Vec<RatFunc> = c
            .nth_roots(k)?
            .iter()
            .map(|r| RatFunc::laurent_monomial(r, e / k as i64))
            .collect();
        (!roots.is_empty()).then_some(roots)
    }
}
