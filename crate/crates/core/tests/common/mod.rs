#![allow(dead_code)]

use hecke_core::{ExponentVector, Field, GeneratorWord, HeckeAlgebra, HeckeElement, Letter, Permutation, RatFunc, Rational};
use rand::Rng;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn numeric_algebra(n: usize) -> HeckeAlgebra<Rational> {
    HeckeAlgebra::new(n, rat(2, 1)).unwrap()
}

pub fn symbolic_algebra(n: usize) -> HeckeAlgebra<RatFunc> {
    HeckeAlgebra::new(n, RatFunc::q()).unwrap()
}

pub fn random_letter<R: Rng>(rng: &mut R, n: usize) -> Letter {
    match rng.gen_range(0..4) {
        0 => Letter::T(rng.gen_range(1..=n)),
        1 => Letter::TInv(rng.gen_range(1..=n)),
        2 => Letter::X(rng.gen_range(1..=n + 1)),
        _ => Letter::XInv(rng.gen_range(1..=n + 1)),
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, n)).collect()
}

/// The product of the generators of `word`, multiplied left to right.
pub fn product_of_generators<F: Field>(algebra: &HeckeAlgebra<F>, word: &GeneratorWord) -> HeckeElement<F> {
    word.letters()
        .iter()
        .fold(algebra.one(), |acc, &l| acc.try_mul(&algebra.generator(l).unwrap()).unwrap())
}

/// A sparse element: up to `max_terms` basis elements with small integer
/// coefficients and exponents in `-1..=1`.
pub fn random_element<F: Field, R: Rng>(rng: &mut R, algebra: &HeckeAlgebra<F>, max_terms: usize) -> HeckeElement<F> {
    let n = algebra.rank();
    let perms = Permutation::all(n + 1);
    let one = algebra.field_one();
    let mut out = algebra.zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let lambda = ExponentVector::new((0..=n).map(|_| rng.gen_range(-1..=1)).collect());
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        out = out.try_add(&algebra.basis_element(w, lambda, one.int_like(c))).unwrap();
    }
    out
}
