use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldKind, ScalarError};

/// Largest modulus for which root finding scans every unit.
const EXHAUSTIVE_SCAN_LIMIT: u64 = 1 << 22;

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// An element of the prime field `F_p`, with `p` carried alongside.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Result<Self, ScalarError> {
        if !is_prime(modulus) {
            return Err(ScalarError::NonInvertibleModulus(modulus));
        }
        Ok(Self::reduce_i128(value as i128, modulus))
    }

    pub fn zero(modulus: u64) -> Result<Self, ScalarError> {
        Self::new(0, modulus)
    }

    fn reduce_i128(value: i128, modulus: u64) -> Self {
        let residue = value.rem_euclid(modulus as i128) as u64;
        Fp { residue, modulus }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Every element of the field, in residue order.
    pub fn elements(modulus: u64) -> impl Iterator<Item = Fp> {
        (0..modulus).map(move |residue| Fp { residue, modulus })
    }

    /// The nonzero elements of the field, in residue order.
    pub fn units(modulus: u64) -> impl Iterator<Item = Fp> {
        (1..modulus).map(move |residue| Fp { residue, modulus })
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between F_{} and F_{}",
            self.modulus, other.modulus
        );
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.residue as u128 + rhs.residue as u128) % self.modulus as u128;
        Fp { residue: s as u64, modulus: self.modulus }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp { residue: mul_mod(self.residue, rhs.residue, self.modulus), modulus: self.modulus }
    }
}

impl<'a> Add<&'a Fp> for Fp {
    type Output = Fp;
    fn add(self, rhs: &'a Fp) -> Fp {
        self + *rhs
    }
}

impl<'a> Sub<&'a Fp> for Fp {
    type Output = Fp;
    fn sub(self, rhs: &'a Fp) -> Fp {
        self - *rhs
    }
}

impl<'a> Mul<&'a Fp> for Fp {
    type Output = Fp;
    fn mul(self, rhs: &'a Fp) -> Fp {
        self * *rhs
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let residue = if self.residue == 0 { 0 } else { self.modulus - self.residue };
        Fp { residue, modulus: self.modulus }
    }
}

impl Field for Fp {
    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.modulus)
    }

    fn zero_like(&self) -> Self {
        Fp { residue: 0, modulus: self.modulus }
    }

    fn one_like(&self) -> Self {
        Fp { residue: 1, modulus: self.modulus }
    }

    fn bigint_like(&self, value: &BigInt) -> Self {
        let r = value.mod_floor(&BigInt::from(self.modulus));
        Fp { residue: r.to_u64().expect("residue fits"), modulus: self.modulus }
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1
        Some(Fp { residue: pow_mod(self.residue, self.modulus - 2, self.modulus), modulus: self.modulus })
    }

    fn same_field(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        (self.modulus, self.residue).cmp(&(other.modulus, other.residue))
    }

    fn nth_roots(&self, k: u32) -> Option<Vec<Self>> {
        if k == 0 || self.modulus > EXHAUSTIVE_SCAN_LIMIT {
            return None;
        }
        if self.residue == 0 {
            return Some(vec![*self]);
        }
        let roots = Fp::units(self.modulus)
            .filter(|z| pow_mod(z.residue, k as u64, self.modulus) == self.residue)
            .collect();
        Some(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn reduction_and_inverse() {
        let ten = Fp::new(10, 7).unwrap();
        assert_eq!(ten.residue(), 3);
        // exhaustive oracle: the x with 3x = 1 mod 7
        let expected = (1..7).find(|x| (3 * x) % 7 == 1).unwrap();
        assert_eq!(ten.inv().unwrap().residue(), expected);
        assert_eq!(expected, 5);
        let four = Fp::new(4, 7).unwrap();
        let two = Fp::new(2, 7).unwrap();
        assert_eq!((four * two).residue(), 8 % 7);
        assert_eq!(Fp::new(-1, 7).unwrap().residue(), 6);
        assert_eq!(Fp::new(1, 9), Err(ScalarError::NonInvertibleModulus(9)));
    }

    #[test]
    #[should_panic(expected = "arithmetic between")]
    fn mixed_moduli_panic() {
        let _ = Fp::new(1, 5).unwrap() + Fp::new(1, 7).unwrap();
    }

    #[test]
    fn cube_roots_scan() {
        let one = Fp::new(1, 7).unwrap();
        let roots: Vec<u64> = one.nth_roots(3).unwrap().iter().map(Fp::residue).collect();
        assert_eq!(roots, vec![1, 2, 4]);
        let three = Fp::new(3, 7).unwrap();
        assert_eq!(three.nth_roots(3), Some(vec![]));
    }
}
