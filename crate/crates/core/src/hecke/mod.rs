//! The affine Hecke algebra `H_q` of type `A_n` in the basis `T_w X^λ`.
//!
//! Multiplication pushes Laurent monomials rightward through `T_i` with
//!
//! ```text
//! X^λ T_i = T_i X^{s_i λ} + (q - 1) (X^λ - X^{s_i λ}) / (1 - X_i X_{i+1}^{-1})
//! ```
//!
//! and contracts `T_w T_i` by the usual length case split. The division is
//! exact for every `λ`; a remainder is reported as [`HeckeError::NotDivisible`]
//! and indicates a bug, never a property of the input.

mod element;
mod oracle;
mod relations;
mod text;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::laurent::{ExponentVector, LaurentError, LaurentPoly};
use crate::scalars::{Field, ScalarError};
use crate::weyl::{Permutation, WeylError};

pub use element::HeckeElement;
pub use oracle::oracle_normal_form;
pub use relations::{
    check_relations, relation_list, CrossConvention, GeneratorImages, PresentationRelation, RelationKind,
    RelationOutcome, RelationReport,
};
pub use text::{parse_element, parse_named_elements};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("the parameter must be nonzero")]
    ZeroParameter,
    #[error("rank must be at least 1")]
    RankZero,
    #[error("generator index {letter}{index} out of range for n = {n}")]
    IndexOutOfRange { letter: char, index: usize, n: usize },
    #[error("operands belong to different algebras")]
    ParameterMismatch,
    #[error("commutation of X^{lambda} past T_{i} left a remainder: {detail}")]
    NotDivisible { lambda: String, i: usize, detail: String },
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("malformed input {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A letter of a word in the generators and their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    TInv(usize),
    X(usize),
    XInv(usize),
}

impl Letter {
    pub fn validate(&self, n: usize) -> Result<(), HeckeError> {
        let (letter, index, max) = match *self {
            Letter::T(i) | Letter::TInv(i) => ('T', i, n),
            Letter::X(j) | Letter::XInv(j) => ('X', j, n + 1),
        };
        if index == 0 || index > max {
            return Err(HeckeError::IndexOutOfRange { letter, index, n });
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::TInv(i) => write!(f, "T{i}^-1"),
            Letter::X(j) => write!(f, "X{j}"),
            Letter::XInv(j) => write!(f, "X{j}^-1"),
        }
    }
}

/// A word in the generators, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, n: usize) -> Result<(), HeckeError> {
        self.0.iter().try_for_each(|l| l.validate(n))
    }
}

impl FromIterator<Letter> for GeneratorWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        GeneratorWord(iter.into_iter().collect())
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug)]
struct AlgebraParams<F> {
    n: usize,
    q: F,
    q_inv: F,
}

/// Handle on `H_q` for a fixed rank `n` and parameter `q`; cheap to clone.
#[derive(Debug, Clone)]
pub struct HeckeAlgebra<F> {
    params: Arc<AlgebraParams<F>>,
}

impl<F: PartialEq> PartialEq for HeckeAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.params, &other.params)
            || (self.params.n == other.params.n && self.params.q == other.params.q)
    }
}

impl<F: Eq> Eq for HeckeAlgebra<F> {}

impl<F: Field> HeckeAlgebra<F> {
    /// `H_q` of type `A_n`. `q` must be nonzero since `T_i^{-1} = q^{-1}(T_i + 1 - q)`.
    pub fn new(n: usize, q: F) -> Result<Self, HeckeError> {
        if n == 0 {
            return Err(HeckeError::RankZero);
        }
        let q_inv = q.inv().ok_or(HeckeError::ZeroParameter)?;
        Ok(HeckeAlgebra { params: Arc::new(AlgebraParams { n, q, q_inv }) })
    }

    pub fn rank(&self) -> usize {
        self.params.n
    }

    pub fn q(&self) -> &F {
        &self.params.q
    }

    pub fn q_inv(&self) -> &F {
        &self.params.q_inv
    }

    pub fn field_one(&self) -> F {
        self.params.q.one_like()
    }

    pub fn field_zero(&self) -> F {
        self.params.q.zero_like()
    }

    pub fn zero(&self) -> HeckeElement<F> {
        HeckeElement::zero(self.clone())
    }

    pub fn one(&self) -> HeckeElement<F> {
        self.scalar(self.field_one())
    }

    pub fn scalar(&self, c: F) -> HeckeElement<F> {
        self.basis_element(Permutation::identity(self.rank() + 1), ExponentVector::zero(self.rank()), c)
    }

    /// `c * T_w X^λ`.
    pub fn basis_element(&self, w: Permutation, lambda: ExponentVector, c: F) -> HeckeElement<F> {
        let mut h = self.zero();
        h.add_term(w, lambda, c);
        h
    }

    /// Embed a Laurent polynomial as `sum c * T_id X^λ`.
    pub fn from_laurent(&self, f: &LaurentPoly<F>) -> Result<HeckeElement<F>, HeckeError> {
        if f.rank() != self.rank() {
            return Err(LaurentError::LengthMismatch { expected: self.rank() + 1, got: f.rank() + 1 }.into());
        }
        let mut h = self.zero();
        let id = Permutation::identity(self.rank() + 1);
        for (e, c) in f.terms() {
            h.add_term(id.clone(), e.clone(), c.clone());
        }
        Ok(h)
    }

    pub fn generator(&self, letter: Letter) -> Result<HeckeElement<F>, HeckeError> {
        letter.validate(self.rank())?;
        let n = self.rank();
        Ok(match letter {
            Letter::T(i) => {
                self.basis_element(Permutation::simple_reflection(i, n)?, ExponentVector::zero(n), self.field_one())
            }
            Letter::TInv(i) => {
                // q^{-1} T_i + (q^{-1} - 1)
                let mut h = self.basis_element(
                    Permutation::simple_reflection(i, n)?,
                    ExponentVector::zero(n),
                    self.q_inv().clone(),
                );
                h.add_term(
                    Permutation::identity(n + 1),
                    ExponentVector::zero(n),
                    self.q_inv().clone() - self.field_one(),
                );
                h
            }
            Letter::X(j) => self.basis_element(Permutation::identity(n + 1), ExponentVector::unit(j, n), self.field_one()),
            Letter::XInv(j) => {
                self.basis_element(Permutation::identity(n + 1), ExponentVector::unit(j, n).neg(), self.field_one())
            }
        })
    }

    pub fn t(&self, i: usize) -> Result<HeckeElement<F>, HeckeError> {
        self.generator(Letter::T(i))
    }

    pub fn t_inv(&self, i: usize) -> Result<HeckeElement<F>, HeckeError> {
        self.generator(Letter::TInv(i))
    }

    pub fn x(&self, j: usize) -> Result<HeckeElement<F>, HeckeError> {
        self.generator(Letter::X(j))
    }

    pub fn x_inv(&self, j: usize) -> Result<HeckeElement<F>, HeckeError> {
        self.generator(Letter::XInv(j))
    }

    /// `T_w` for the product of the given simple reflections; the word need
    /// not be reduced.
    pub fn t_word(&self, word: &[usize]) -> Result<HeckeElement<F>, HeckeError> {
        let mut h = self.one();
        for &i in word {
            Letter::T(i).validate(self.rank())?;
            h = h.mul_t_right(i)?;
        }
        Ok(h)
    }

    /// Product of the generators in `word`, evaluated with the multiplication
    /// of this algebra.
    pub fn word_product(&self, word: &GeneratorWord) -> Result<HeckeElement<F>, HeckeError> {
        word.validate(self.rank())?;
        let mut h = self.one();
        for &letter in word.letters() {
            h = h.try_mul(&self.generator(letter)?)?;
        }
        Ok(h)
    }

    /// The Laurent correction `C` in `X^λ T_i = T_i X^{s_i λ} + C`.
    pub fn commutation_correction(&self, lambda: &ExponentVector, i: usize) -> Result<LaurentPoly<F>, HeckeError> {
        let n = self.rank();
        Letter::T(i).validate(n)?;
        let one = self.field_one();
        let swapped = lambda.swap_adjacent(i);
        if swapped == *lambda {
            return Ok(LaurentPoly::zero(n));
        }
        let numerator = LaurentPoly::from_terms(n, [(lambda.clone(), one.clone()), (swapped, -one.clone())]);
        let root = ExponentVector::unit(i, n).sub(&ExponentVector::unit(i + 1, n));
        let denominator = LaurentPoly::from_terms(n, [(ExponentVector::zero(n), one.clone()), (root, -one.clone())]);
        let quotient = numerator.exact_divide(&denominator).map_err(|e| HeckeError::NotDivisible {
            lambda: lambda.to_string(),
            i,
            detail: e.to_string(),
        })?;
        Ok(quotient.scale(&(self.q().clone() - one)))
    }

    /// `X^λ T_i` written in normal form as `T_i X^{s_i λ} + C`.
    pub fn commute_x_past_t(&self, lambda: &ExponentVector, i: usize) -> Result<HeckeElement<F>, HeckeError> {
        let n = self.rank();
        if lambda.len() != n + 1 {
            return Err(LaurentError::LengthMismatch { expected: n + 1, got: lambda.len() }.into());
        }
        let correction = self.commutation_correction(lambda, i)?;
        let mut h = self.from_laurent(&correction)?;
        h.add_term(Permutation::simple_reflection(i, n)?, lambda.swap_adjacent(i), self.field_one());
        Ok(h)
    }
}

impl<F: Field> fmt::Display for HeckeAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_q(A_{}) with q = {} over {}", self.rank(), self.q(), self.q().kind())
    }
}
