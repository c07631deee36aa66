//! Naive normal form by word rewriting.
//!
//! This path deliberately shares nothing with [`HeckeElement::try_mul`]
//! beyond the output container: it expands inverses of `T_i`, then moves
//! X-letters to the right one adjacent swap at a time using the
//! single-variable rules
//!
//! ```text
//! X_i      T_i = T_i X_{i+1}      - (q-1) X_{i+1}
//! X_{i+1}  T_i = T_i X_i          + (q-1) X_{i+1}
//! X_i^-1   T_i = T_i X_{i+1}^-1   + (q-1) X_i^-1
//! X_{i+1}^-1 T_i = T_i X_i^-1     - (q-1) X_i^-1
//! X_j^±1   T_i = T_i X_j^±1          (j != i, i+1)
//! ```
//!
//! each of which follows from `T_i X_i T_i = q X_{i+1}` and the quadratic
//! relation in one step. Finally the T-prefix is contracted letter by letter.

use std::collections::BTreeMap;

use crate::laurent::ExponentVector;
use crate::scalars::Field;
use crate::weyl::Permutation;

use super::{GeneratorWord, HeckeAlgebra, HeckeElement, HeckeError, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    T(usize),
    /// `X_j^{sign}`
    X(usize, i8),
}

fn cancel_adjacent_x(word: &mut Vec<Sym>) {
    let mut out: Vec<Sym> = Vec::with_capacity(word.len());
    for &s in word.iter() {
        match (out.last(), s) {
            (Some(&Sym::X(a, sa)), Sym::X(b, sb)) if a == b && sa == -sb => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    *word = out;
}

/// Normal form of the product of `word` in `algebra`, by rewriting.
pub fn oracle_normal_form<F: Field>(word: &GeneratorWord, algebra: &HeckeAlgebra<F>) -> Result<HeckeElement<F>, HeckeError> {
    let n = algebra.rank();
    word.validate(n)?;
    let one = algebra.field_one();
    let q = algebra.q().clone();
    let q_inv = q.inv().ok_or(HeckeError::ZeroParameter)?;
    let qm1 = q.clone() - &one;

    // Expand T_i^{-1} = q^{-1} T_i + (q^{-1} - 1).
    let mut expanded: Vec<(F, Vec<Sym>)> = vec![(one.clone(), Vec::new())];
    for &letter in word.letters() {
        let mut next = Vec::with_capacity(expanded.len() * 2);
        for (c, w) in expanded {
            match letter {
                Letter::T(i) => next.push((c, [w, vec![Sym::T(i)]].concat())),
                Letter::X(j) => next.push((c, [w, vec![Sym::X(j, 1)]].concat())),
                Letter::XInv(j) => next.push((c, [w, vec![Sym::X(j, -1)]].concat())),
                Letter::TInv(i) => {
                    next.push((c.clone() * &q_inv, [w.clone(), vec![Sym::T(i)]].concat()));
                    next.push((c * &(q_inv.clone() - &one), w));
                }
            }
        }
        expanded = next;
    }

    let mut stack = expanded;
    let mut normal: BTreeMap<(Vec<usize>, Vec<i64>), F> = BTreeMap::new();
    while let Some((c, mut w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        cancel_adjacent_x(&mut w);
        let first_swap = w.windows(2).position(|pair| matches!(pair, [Sym::X(..), Sym::T(_)]));
        let Some(p) = first_swap else {
            let t_word: Vec<usize> = w.iter().filter_map(|s| if let Sym::T(i) = s { Some(*i) } else { None }).collect();
            let mut exps = vec![0i64; n + 1];
            for s in &w {
                if let Sym::X(j, sign) = s {
                    exps[j - 1] += *sign as i64;
                }
            }
            let entry = normal.entry((t_word, exps)).or_insert_with(|| one.zero_like());
            *entry = entry.clone() + c;
            continue;
        };
        let (Sym::X(j, sign), Sym::T(i)) = (w[p], w[p + 1]) else { unreachable!() };
        let splice = |replacement: &[Sym]| -> Vec<Sym> {
            let mut out = w[..p].to_vec();
            out.extend_from_slice(replacement);
            out.extend_from_slice(&w[p + 2..]);
            out
        };
        match (sign, j) {
            (1, j) if j == i => {
                stack.push((c.clone(), splice(&[Sym::T(i), Sym::X(i + 1, 1)])));
                stack.push((-(c * &qm1), splice(&[Sym::X(i + 1, 1)])));
            }
            (1, j) if j == i + 1 => {
                stack.push((c.clone(), splice(&[Sym::T(i), Sym::X(i, 1)])));
                stack.push((c * &qm1, splice(&[Sym::X(i + 1, 1)])));
            }
            (-1, j) if j == i => {
                stack.push((c.clone(), splice(&[Sym::T(i), Sym::X(i + 1, -1)])));
                stack.push((c * &qm1, splice(&[Sym::X(i, -1)])));
            }
            (-1, j) if j == i + 1 => {
                stack.push((c.clone(), splice(&[Sym::T(i), Sym::X(i, -1)])));
                stack.push((-(c * &qm1), splice(&[Sym::X(i, -1)])));
            }
            _ => stack.push((c, splice(&[Sym::T(i), Sym::X(j, sign)]))),
        }
    }

    let mut out = algebra.zero();
    for ((t_word, exps), c) in normal {
        if c.is_zero() {
            continue;
        }
        let lambda = ExponentVector::new(exps);
        for (w, d) in contract_t_word(&t_word, n, &q) {
            out.add_term(w, lambda.clone(), c.clone() * &d);
        }
    }
    Ok(out)
}

/// `T_{i_1} ... T_{i_k}` as a combination of `T_w`, contracting from the left
/// with `T_w T_s = T_{ws}` or `(q-1) T_w + q T_{ws}`.
fn contract_t_word<F: Field>(word: &[usize], n: usize, q: &F) -> Vec<(Permutation, F)> {
    let one = q.one_like();
    let mut acc: BTreeMap<Permutation, F> = BTreeMap::new();
    acc.insert(Permutation::identity(n + 1), one.clone());
    for &s in word {
        let mut next: BTreeMap<Permutation, F> = BTreeMap::new();
        let mut push = |w: Permutation, c: F| {
            let e = next.entry(w).or_insert_with(|| one.zero_like());
            *e = e.clone() + c;
        };
        for (w, c) in acc {
            let ws = w.mul_simple_right(s);
            if ws.length() > w.length() {
                push(ws, c);
            } else {
                push(w, c.clone() * &(q.clone() - &one));
                push(ws, c * q);
            }
        }
        acc = next;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
