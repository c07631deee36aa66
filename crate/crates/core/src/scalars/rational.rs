use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldKind};

pub type Rational = BigRational;

/// Exact `k`-th root of a non-negative integer, if it exists.
pub(crate) fn exact_root(value: &BigInt, k: u32) -> Option<BigInt> {
    if value.is_negative() {
        return None;
    }
    let r = value.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *value).then_some(r)
}

impl Field for BigRational {
    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }

    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }

    fn bigint_like(&self, value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn nth_roots(&self, k: u32) -> Option<Vec<Self>> {
        if k == 0 {
            return None;
        }
        if Zero::is_zero(self) {
            return Some(vec![self.clone()]);
        }
        let negative = self.is_negative();
        if negative && k.is_multiple_of(2) {
            return Some(Vec::new());
        }
        let (Some(num), Some(den)) = (exact_root(&self.numer().abs(), k), exact_root(self.denom(), k)) else {
            return Some(Vec::new());
        };
        let root = BigRational::new(num, den);
        Some(if k % 2 == 1 {
            vec![if negative { -root } else { root }]
        } else {
            vec![-root.clone(), root]
        })
    }
}
