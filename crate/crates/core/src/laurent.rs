//! Laurent polynomials in `X_1..X_{n+1}` modulo `X_1 X_2 ... X_{n+1} = 1`.
//!
//! Exponent vectors are kept in the canonical representative whose last
//! entry is zero, so the ring is concretely `k[X_1^{±1}, .., X_n^{±1}]` with
//! `X_{n+1}` standing for `(X_1 ... X_n)^{-1}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::Field;
use crate::text::{exponent_list, render_term, write_sum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("evaluation point has a zero coordinate at position {0}")]
    ZeroCoordinate(usize),
    #[error("evaluation point coordinates do not multiply to 1")]
    ProductNotOne,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },
}

/// Exponent vector of a monomial `X^λ`, normalized so the last entry is 0.
///
/// Ordered graded-lexicographically: total degree first, then entries
/// left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    /// Normalize any integer vector: subtracting the last entry from every
    /// entry multiplies by a power of `X_1 ... X_{n+1} = 1`.
    pub fn new(mut entries: Vec<i64>) -> Self {
        if let Some(&last) = entries.last() {
            if last != 0 {
                entries.iter_mut().for_each(|e| *e -= last);
            }
        }
        ExponentVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n + 1])
    }

    /// Exponent of `X_j`, 1-based.
    pub fn unit(j: usize, n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[j - 1] = 1;
        Self::new(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.0.iter().map(|a| -a).collect())
    }

    /// Exchange the exponents of `X_i` and `X_{i+1}` (1-based `i`).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Self::new(v)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{}", exponent_list(&self.0))
    }
}

/// A Laurent polynomial of rank `n` (in `n + 1` variables).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<F> {
    n: usize,
    terms: BTreeMap<ExponentVector, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: F) -> Self {
        let mut p = Self::zero(n);
        p.add_term(ExponentVector::zero(n), c);
        p
    }

    /// `c * X^λ` for an arbitrary (not necessarily canonical) `λ` of length
    /// `n + 1`.
    pub fn monomial(exponents: &[i64], c: F, n: usize) -> Result<Self, LaurentError> {
        if exponents.len() != n + 1 {
            return Err(LaurentError::LengthMismatch { expected: n + 1, got: exponents.len() });
        }
        let mut p = Self::zero(n);
        p.add_term(ExponentVector::new(exponents.to_vec()), c);
        Ok(p)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentVector, F)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Elementary symmetric function `e_j(X_1, .., X_{n+1})`; `e_0 = 1` and
    /// `e_{n+1} = X_1 ... X_{n+1} = 1`.
    pub fn elementary_symmetric(j: usize, n: usize, like: &F) -> Result<Self, LaurentError> {
        if j > n + 1 {
            return Err(LaurentError::IndexOutOfRange { index: j, max: n + 1 });
        }
        let mut p = Self::zero(n);
        let mut subset: Vec<usize> = (0..j).collect();
        loop {
            let mut v = vec![0; n + 1];
            subset.iter().for_each(|&k| v[k] = 1);
            p.add_term(ExponentVector::new(v), like.one_like());
            // next j-subset of 0..=n in lexicographic order
            let Some(pos) = (0..j).rev().find(|&k| subset[k] < n + 1 - j + k) else {
                break;
            };
            subset[pos] += 1;
            for k in pos + 1..j {
                subset[k] = subset[k - 1] + 1;
            }
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&F> {
        self.terms.get(e)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &F)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: F) {
        debug_assert_eq!(e.len(), self.n + 1);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<(), LaurentError> {
        if self.n != other.n {
            return Err(LaurentError::LengthMismatch { expected: self.n + 1, got: other.n + 1 });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.n);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c);
        }
        out
    }

    /// Multiply by the monomial `X^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.clone() * c2);
            }
        }
        Ok(out)
    }

    /// Substitute `X_j -> X_j^{-1}` for every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.neg(), c.clone())).collect(),
        }
    }

    /// Value at a point `(a_1, .., a_{n+1})` of nonzero scalars with product 1.
    pub fn evaluate(&self, point: &[F]) -> Result<F, LaurentError> {
        if point.len() != self.n + 1 {
            return Err(LaurentError::LengthMismatch { expected: self.n + 1, got: point.len() });
        }
        if let Some(pos) = point.iter().position(Field::is_zero) {
            return Err(LaurentError::ZeroCoordinate(pos + 1));
        }
        let one = point[0].one_like();
        let product = point.iter().fold(one.clone(), |acc, a| acc * a);
        if !product.is_one() {
            return Err(LaurentError::ProductNotOne);
        }
        let mut total = one.zero_like();
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (a, &k) in point.iter().zip(e.entries()) {
                if k != 0 {
                    value = value * &a.pow_i64(k).expect("nonzero coordinate");
                }
            }
            total = total + value;
        }
        Ok(total)
    }

    /// The quotient `h` with `divisor * h = self`, by leading-term division
    /// under the graded-lex order.
    ///
    /// Each exponent coordinate of a true quotient lies between
    /// `min(self) - min(divisor)` and `max(self) - max(divisor)`; a candidate
    /// outside that box proves non-divisibility, which also bounds the loop.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_rank(divisor)?;
        let (lead_exp, lead_coeff) = divisor.leading_term().ok_or(LaurentError::DivisionByZero)?;
        let lead_inv = lead_coeff.inv().expect("stored coefficients are nonzero");
        let bounds: Vec<(i64, i64)> = (0..=self.n)
            .map(|k| {
                let range = |p: &Self| {
                    let it = p.terms.keys().map(|e| e.entries()[k]);
                    (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
                };
                let (fmin, fmax) = range(self);
                let (gmin, gmax) = range(divisor);
                (fmin - gmin, fmax - gmax)
            })
            .collect();
        let mut remainder = self.clone();
        let mut quotient = Self::zero(self.n);
        while let Some((e, c)) = remainder.leading_term() {
            let m = e.sub(lead_exp);
            let in_box = m.entries().iter().zip(&bounds).all(|(&x, &(lo, hi))| lo <= x && x <= hi);
            if !in_box {
                return Err(LaurentError::NotDivisible { remainder: remainder.to_string() });
            }
            let coeff = c.clone() * &lead_inv;
            let step = divisor.shift(&m).scale(&coeff);
            remainder = remainder.sub(&step)?;
            quotient.add_term(m, coeff);
        }
        Ok(quotient)
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().rev().map(|(e, c)| {
                let factors = if e.is_zero() { vec![] } else { vec![e.to_string()] };
                render_term(&c.to_string(), &factors)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_in, RatFunc, Rational};

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn mono(e: &[i64], n: usize) -> LaurentPoly<Rational> {
        LaurentPoly::monomial(e, q(1), n).unwrap()
    }

    fn sum(polys: &[LaurentPoly<Rational>]) -> LaurentPoly<Rational> {
        polys.iter().fold(LaurentPoly::zero(polys[0].rank()), |acc, p| acc.add(p).unwrap())
    }

    #[test]
    fn monomial_normalization() {
        assert_eq!(mono(&[0, 0, 1], 2), mono(&[-1, -1, 0], 2));
        assert_eq!(mono(&[2, 2, 2], 2), LaurentPoly::constant(2, q(1)));
        let m = mono(&[1, 0, 0], 2);
        assert_eq!(m.terms().next().unwrap().0.entries(), &[1, 0, 0]);
        assert_eq!(
            LaurentPoly::monomial(&[1, 0], q(1), 2),
            Err(LaurentError::LengthMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn multiplication() {
        assert_eq!(mono(&[1, 0, 0], 2).mul(&mono(&[-1, -1, 0], 2)).unwrap(), mono(&[0, -1, 0], 2));
        let x1 = mono(&[1, 0, 0], 2);
        let x2 = mono(&[0, 1, 0], 2);
        let lhs = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        let rhs = mono(&[2, 0, 0], 2).sub(&mono(&[0, 2, 0], 2)).unwrap();
        assert_eq!(lhs, rhs);
        let s1 = LaurentPoly::elementary_symmetric(1, 2, &q(1)).unwrap();
        assert_eq!(s1.mul(&LaurentPoly::constant(2, q(1))).unwrap(), s1);
    }

    #[test]
    fn elementary_symmetric_examples() {
        let e1 = LaurentPoly::elementary_symmetric(1, 2, &q(1)).unwrap();
        assert_eq!(e1, sum(&[mono(&[1, 0, 0], 2), mono(&[0, 1, 0], 2), mono(&[-1, -1, 0], 2)]));
        assert_eq!(LaurentPoly::elementary_symmetric(0, 3, &q(1)).unwrap(), LaurentPoly::constant(3, q(1)));
        // X1X2 + X1X3 + X2X3 with X3 = (X1X2)^-1, expanded by hand
        let e2 = LaurentPoly::elementary_symmetric(2, 2, &q(1)).unwrap();
        assert_eq!(e2, sum(&[mono(&[1, 1, 0], 2), mono(&[0, -1, 0], 2), mono(&[-1, 0, 0], 2)]));
        assert_eq!(LaurentPoly::elementary_symmetric(3, 2, &q(1)).unwrap(), LaurentPoly::constant(2, q(1)));
        assert_eq!(
            LaurentPoly::elementary_symmetric(4, 2, &q(1)),
            Err(LaurentError::IndexOutOfRange { index: 4, max: 3 })
        );
        // binomial term counts
        for n in 1..=5 {
            for j in 0..=n + 1 {
                let e = LaurentPoly::elementary_symmetric(j, n, &q(1)).unwrap();
                let binom = (0..j).fold(1usize, |acc, k| acc * (n + 1 - k) / (k + 1));
                let expected = if j == 0 || j == n + 1 { 1 } else { binom };
                assert_eq!(e.len(), expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn inversion_of_variables() {
        let s1 = LaurentPoly::elementary_symmetric(1, 2, &q(1)).unwrap();
        let s2 = LaurentPoly::elementary_symmetric(2, 2, &q(1)).unwrap();
        assert_eq!(s1.invert_variables(), s2);
        assert_eq!(LaurentPoly::constant(2, q(1)).invert_variables(), LaurentPoly::constant(2, q(1)));
        assert_eq!(mono(&[1, 0, 0], 2).invert_variables(), mono(&[-1, 0, 0], 2));
    }

    #[test]
    fn evaluation() {
        let half = Rational::new(1.into(), 2.into());
        let point = [q(2), q(1), half.clone()];
        let s1 = LaurentPoly::elementary_symmetric(1, 2, &q(1)).unwrap();
        let s2 = LaurentPoly::elementary_symmetric(2, 2, &q(1)).unwrap();
        let seven_halves = Rational::new(7.into(), 2.into());
        assert_eq!(s1.evaluate(&point).unwrap(), seven_halves);
        assert_eq!(s2.evaluate(&point).unwrap(), seven_halves);
        assert_eq!(LaurentPoly::constant(2, q(1)).evaluate(&point).unwrap(), q(1));
        assert_eq!(s1.evaluate(&[q(2), q(0), half]), Err(LaurentError::ZeroCoordinate(2)));
        assert_eq!(s1.evaluate(&[q(2), q(1), q(1)]), Err(LaurentError::ProductNotOne));
    }

    #[test]
    fn exact_division() {
        // (X1 - X2) / (1 - X1 X2^-1) = -X2
        let f = mono(&[1, 0, 0], 2).sub(&mono(&[0, 1, 0], 2)).unwrap();
        let g = LaurentPoly::constant(2, q(1)).sub(&mono(&[1, -1, 0], 2)).unwrap();
        let h = f.exact_divide(&g).unwrap();
        assert_eq!(h, mono(&[0, 1, 0], 2).neg());
        assert_eq!(g.mul(&h).unwrap(), f);
        assert_eq!(f.exact_divide(&LaurentPoly::constant(2, q(1))).unwrap(), f);
        assert_eq!(mono(&[1, 0, 0], 2).exact_divide(&mono(&[0, 1, 0], 2)).unwrap(), mono(&[1, -1, 0], 2));
        let one_plus_x1 = LaurentPoly::constant(2, q(1)).add(&mono(&[1, 0, 0], 2)).unwrap();
        assert!(matches!(
            mono(&[0, 1, 0], 2).exact_divide(&one_plus_x1),
            Err(LaurentError::NotDivisible { .. })
        ));
        assert_eq!(f.exact_divide(&LaurentPoly::zero(2)), Err(LaurentError::DivisionByZero));
    }

    #[test]
    fn display_order() {
        let s1 = LaurentPoly::elementary_symmetric(1, 2, &q(1)).unwrap();
        assert_eq!(s1.to_string(), "X^[1,0,0] + X^[0,1,0] + X^[-1,-1,0]");
        let rf = RatFunc::zero();
        let p = LaurentPoly::monomial(&[1, 0, 0], parse_in("q-1", &rf).unwrap(), 2)
            .unwrap()
            .add(&LaurentPoly::constant(2, parse_in("-2", &rf).unwrap()))
            .unwrap();
        assert_eq!(p.to_string(), "(q-1)*X^[1,0,0] - 2");
    }
}
