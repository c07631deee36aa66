//! The symmetric group `S_{n+1}` as the finite Weyl group of type `A_n`.
//!
//! Permutations are stored in one-line notation with entries `1..=n+1`.
//! Composition is `(u * v)(k) = u(v(k))`; right multiplication by `s_i`
//! swaps positions `i, i+1`, left multiplication swaps values `i, i+1`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::scalars::Field;
use crate::text::exponent_list;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("simple reflection index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0:?} is not a permutation of 1..=len")]
    NotAPermutation(Vec<usize>),
    #[error("size mismatch: permutation of {expected} letters applied to length {got}")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation((1..=size).collect())
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self, WeylError> {
        let mut seen = vec![false; one_line.len()];
        for &v in &one_line {
            if v == 0 || v > one_line.len() || seen[v - 1] {
                return Err(WeylError::NotAPermutation(one_line));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    /// The transposition `s_i = (i, i+1)` in `S_{n+1}`.
    pub fn simple_reflection(i: usize, n: usize) -> Result<Self, WeylError> {
        if i == 0 || i > n {
            return Err(WeylError::IndexOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n + 1);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, WeylError> {
        let mut w = Self::identity(n + 1);
        for &i in word {
            if i == 0 || i > n {
                return Err(WeylError::IndexOutOfRange { index: i, n });
            }
            w.0.swap(i - 1, i);
        }
        Ok(w)
    }

    /// Every permutation of `size` letters, in lexicographic one-line order.
    pub fn all(size: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Self::identity(size).0;
        loop {
            out.push(Permutation(current.clone()));
            let Some(k) = (0..size.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) else {
                return out;
            };
            let l = (k + 1..size).rev().find(|&l| current[k] < current[l]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Number of letters, `n + 1`.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&v| self.0[v - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation(inv)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// Whether `l(w s_i) > l(w)`, i.e. `w(i) < w(i+1)`.
    pub fn is_right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// `w * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        Permutation(
            self.0
                .iter()
                .map(|&v| match v {
                    v if v == i => i + 1,
                    v if v == i + 1 => i,
                    v => v,
                })
                .collect(),
        )
    }

    fn smallest_left_descent(&self) -> Option<usize> {
        let mut pos = vec![0; self.size()];
        for (k, &v) in self.0.iter().enumerate() {
            pos[v - 1] = k;
        }
        (1..self.size()).find(|&i| pos[i] < pos[i - 1])
    }

    /// The lexicographically smallest reduced word, found by peeling off
    /// the smallest left descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = w.smallest_left_descent() {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Permute variables: entry `j` of the result is entry `w^{-1}(j)` of
    /// `lambda`, so that `X^{w·λ}` evaluated at `a` equals `X^λ` evaluated at
    /// `(a_{w(1)}, .., a_{w(n+1)})`.
    pub fn act(&self, lambda: &ExponentVector) -> Result<ExponentVector, WeylError> {
        if lambda.len() != self.size() {
            return Err(WeylError::LengthMismatch { expected: self.size(), got: lambda.len() });
        }
        let mut out = vec![0; self.size()];
        for (k, &v) in self.0.iter().enumerate() {
            out[v - 1] = lambda.entries()[k];
        }
        Ok(ExponentVector::new(out))
    }

    /// Apply [`Permutation::act`] to every monomial of `f`.
    pub fn act_on_poly<F: Field>(&self, f: &LaurentPoly<F>) -> Result<LaurentPoly<F>, WeylError> {
        let terms = f
            .terms()
            .map(|(e, c)| Ok((self.act(e)?, c.clone())))
            .collect::<Result<Vec<_>, WeylError>>()?;
        Ok(LaurentPoly::from_terms(f.rank(), terms))
    }
}

/// Length first, then one-line notation.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length().cmp(&other.length()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Serialized as the reduced word, e.g. `[1,2,1]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<i64> = self.reduced_word().iter().map(|&i| i as i64).collect();
        f.write_str(&exponent_list(&word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(Permutation::simple_reflection(1, 2).unwrap(), perm(&[2, 1, 3]));
        assert_eq!(Permutation::simple_reflection(2, 2).unwrap(), perm(&[1, 3, 2]));
        assert_eq!(Permutation::simple_reflection(1, 1).unwrap(), perm(&[2, 1]));
        assert_eq!(
            Permutation::simple_reflection(3, 2),
            Err(WeylError::IndexOutOfRange { index: 3, n: 2 })
        );
        assert!(Permutation::from_one_line(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn lengths_and_words() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(perm(&[2, 1, 3]).length(), 1);
        // inversions of 321: (3,2), (3,1), (2,1)
        assert_eq!(perm(&[3, 2, 1]).length(), 3);
        assert_eq!(Permutation::identity(3).reduced_word(), Vec::<usize>::new());
        assert_eq!(perm(&[2, 1, 3]).reduced_word(), vec![1]);
        assert_eq!(perm(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(Permutation::from_word(&[1, 2, 1], 2).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(perm(&[3, 2, 1]).to_string(), "[1,2,1]");
    }

    #[test]
    fn reduced_words_are_lex_smallest() {
        // brute force: all words of length l(w) over 1..=n, keep those whose
        // product is w, take the minimum
        let n = 3;
        for w in Permutation::all(n + 1) {
            let l = w.length();
            let mut best: Option<Vec<usize>> = None;
            let total = n.pow(l as u32);
            for code in 0..total {
                let word: Vec<usize> = (0..l).map(|k| (code / n.pow((l - 1 - k) as u32)) % n + 1).collect();
                if Permutation::from_word(&word, n).unwrap() == w && best.as_ref().is_none_or(|b| word < *b) {
                    best = Some(word);
                }
            }
            assert_eq!(w.reduced_word(), best.unwrap(), "{w:?}");
        }
    }

    #[test]
    fn action_examples() {
        let s1 = Permutation::simple_reflection(1, 2).unwrap();
        let s2 = Permutation::simple_reflection(2, 2).unwrap();
        assert_eq!(s1.act(&ExponentVector::new(vec![1, 0, 0])).unwrap().entries(), &[0, 1, 0]);
        assert_eq!(s2.act(&ExponentVector::new(vec![-1, -1, 0])).unwrap().entries(), &[0, 1, 0]);
        let lambda = ExponentVector::new(vec![3, -1, 0]);
        assert_eq!(Permutation::identity(3).act(&lambda).unwrap(), lambda);
        assert!(s1.act(&ExponentVector::zero(3)).is_err());
    }

    #[test]
    fn action_matches_evaluation() {
        // X^{w·λ}(a) == X^λ(a∘w), checked by direct substitution
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let a = [r(2, 1), r(-3, 1), r(1, 5), r(-5, 6)];
        let lambda = ExponentVector::new(vec![2, -1, 3, 0]);
        for w in Permutation::all(4) {
            let lhs = LaurentPoly::monomial(w.act(&lambda).unwrap().entries(), r(1, 1), 3)
                .unwrap()
                .evaluate(&a)
                .unwrap();
            let permuted: Vec<Rational> = w.one_line().iter().map(|&v| a[v - 1].clone()).collect();
            let mut rhs = r(1, 1);
            for (x, &e) in permuted.iter().zip(lambda.entries()) {
                rhs *= num_traits::pow::Pow::pow(x.clone(), e as i32);
            }
            assert_eq!(lhs, rhs, "{w:?}");
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(5).len(), 120);
        assert_eq!(Permutation::all(1).len(), 1);
    }
}
