use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::scalars::Field;
use crate::text::{render_term, write_sum};
use crate::weyl::Permutation;

use super::{HeckeAlgebra, HeckeError};

/// A finite linear combination of basis elements `T_w X^λ`.
#[derive(Debug, Clone)]
pub struct HeckeElement<F> {
    algebra: HeckeAlgebra<F>,
    terms: BTreeMap<(Permutation, ExponentVector), F>,
}

impl<F: PartialEq> PartialEq for HeckeElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}

impl<F: Eq> Eq for HeckeElement<F> {}

impl<F: Field> HeckeElement<F> {
    pub(super) fn zero(algebra: HeckeAlgebra<F>) -> Self {
        HeckeElement { algebra, terms: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &HeckeAlgebra<F> {
        &self.algebra
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

    /// Terms in ascending order: by length of `w`, then one-line form of
    /// `w`, then graded-lex on `λ`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Permutation, &ExponentVector, &F)> {
        self.terms.iter().map(|((w, l), c)| (w, l, c))
    }

    pub fn coefficient(&self, w: &Permutation, lambda: &ExponentVector) -> Option<&F> {
        self.terms.get(&(w.clone(), lambda.clone()))
    }

    /// The Laurent polynomial this element equals, if every term has
    /// trivial permutation part.
    pub fn as_laurent(&self) -> Option<LaurentPoly<F>> {
        self.terms
            .iter()
            .all(|((w, _), _)| w.is_identity())
            .then(|| LaurentPoly::from_terms(self.algebra.rank(), self.terms.iter().map(|((_, l), c)| (l.clone(), c.clone()))))
    }

    /// The scalar this element equals, if it is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(self.algebra.field_zero()),
            1 => {
                let ((w, l), c) = self.terms.iter().next().unwrap();
                (w.is_identity() && l.is_zero()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, w: Permutation, lambda: ExponentVector, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((w, lambda)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_algebra(&self, other: &Self) -> Result<(), HeckeError> {
        if self.algebra != other.algebra {
            return Err(HeckeError::ParameterMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check_algebra(other)?;
        let mut out = self.clone();
        for ((w, l), c) in &other.terms {
            out.add_term(w.clone(), l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, HeckeError> {
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        HeckeElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.algebra.clone());
        if c.is_zero() {
            return out;
        }
        for ((w, l), a) in &self.terms {
            out.add_term(w.clone(), l.clone(), a.clone() * c);
        }
        out
    }

    /// Right multiplication by `X^μ`, which only shifts exponents.
    pub fn mul_x_right(&self, mu: &ExponentVector) -> Self {
        HeckeElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|((w, l), c)| ((w.clone(), l.add(mu)), c.clone())).collect(),
        }
    }

    /// Right multiplication by `T_i`:
    /// `T_w X^λ T_i = T_w T_i X^{s_i λ} + T_w C(λ)`, then
    /// `T_w T_i = T_{w s_i}` if `l(w s_i) > l(w)`, else `(q-1) T_w + q T_{w s_i}`.
    pub fn mul_t_right(&self, i: usize) -> Result<Self, HeckeError> {
        let q = self.algebra.q().clone();
        let q_minus_one = q.clone() - self.algebra.field_one();
        let mut out = Self::zero(self.algebra.clone());
        for ((w, lambda), c) in &self.terms {
            let swapped = lambda.swap_adjacent(i);
            let ws = w.mul_simple_right(i);
            if w.is_right_ascent(i) {
                out.add_term(ws, swapped, c.clone());
            } else {
                out.add_term(w.clone(), swapped.clone(), c.clone() * &q_minus_one);
                out.add_term(ws, swapped, c.clone() * &q);
            }
            for (mu, d) in self.algebra.commutation_correction(lambda, i)?.terms() {
                out.add_term(w.clone(), mu.clone(), c.clone() * d);
            }
        }
        Ok(out)
    }

    /// Product in `H_q`. Terms of the right factor are grouped by their
    /// permutation so each `T_v` is pushed through once.
    pub fn try_mul(&self, other: &Self) -> Result<Self, HeckeError> {
        self.check_algebra(other)?;
        let mut grouped: BTreeMap<&Permutation, Vec<(&ExponentVector, &F)>> = BTreeMap::new();
        for ((v, mu), c) in &other.terms {
            grouped.entry(v).or_default().push((mu, c));
        }
        let mut out = Self::zero(self.algebra.clone());
        for (v, tail) in grouped {
            let mut prefix = self.clone();
            for i in v.reduced_word() {
                prefix = prefix.mul_t_right(i)?;
            }
            for (mu, c) in tail {
                for ((w, l), a) in &prefix.terms {
                    out.add_term(w.clone(), l.add(mu), a.clone() * c);
                }
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, HeckeError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }
}

impl<F: Field> fmt::Display for HeckeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().rev().map(|((w, l), c)| {
                let mut factors = Vec::new();
                if !w.is_identity() {
                    factors.push(format!("T{w}"));
                }
                if !l.is_zero() {
                    factors.push(l.to_string());
                }
                render_term(&c.to_string(), &factors)
            }),
        )
    }
}

impl<F: Field> Add for &HeckeElement<F> {
    type Output = HeckeElement<F>;
    fn add(self, rhs: Self) -> HeckeElement<F> {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl<F: Field> Sub for &HeckeElement<F> {
    type Output = HeckeElement<F>;
    fn sub(self, rhs: Self) -> HeckeElement<F> {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl<F: Field> Mul for &HeckeElement<F> {
    type Output = HeckeElement<F>;
    fn mul(self, rhs: Self) -> HeckeElement<F> {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

impl<F: Field> Neg for &HeckeElement<F> {
    type Output = HeckeElement<F>;
    fn neg(self) -> HeckeElement<F> {
        self.negate()
    }
}
