//! One-dimensional modules of `H_q`: algebra maps sending every `T_i` to a
//! scalar `ε` and `X_j` to `a_j`.
//!
//! Substituting scalars into the presentation gives `ε ∈ {-1, q}`,
//! `ε^2 a_i = q a_{i+1}` and `a_1 ... a_{n+1} = 1`. For the sign branch
//! (`ε = -1`) that is `a_i = q a_{i+1}`, so `a_i = q^{n+1-i} a_{n+1}`; for the
//! index branch (`ε = q`) it is `a_{i+1} = q a_i`. Either way the anchor `z`
//! solves `z^{n+1} q^{n(n+1)/2} = 1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hecke::{relation_list, CrossConvention, GeneratorWord, Letter, RelationKind};
use crate::laurent::LaurentError;
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OneDimError {
    #[error("the parameter must be nonzero")]
    ZeroParameter,
    #[error("expected {expected} scalars, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a module: {0}")]
    InvalidModule(String),
    #[error("unknown branch {0:?} (expected sign or index)")]
    UnknownBranch(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `T_i -> -1`
    Sign,
    /// `T_i -> q`
    Index,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Sign => "sign",
            Branch::Index => "index",
        })
    }
}

impl FromStr for Branch {
    type Err = OneDimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sign" => Ok(Branch::Sign),
            "index" => Ok(Branch::Index),
            other => Err(OneDimError::UnknownBranch(other.to_string())),
        }
    }
}

/// Scalar images for `T_1..T_n` and `X_1..X_{n+1}`, not yet known to
/// satisfy the relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarAssignment<F> {
    pub q: F,
    pub t: Vec<F>,
    pub x: Vec<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarRelationOutcome<F> {
    pub name: String,
    pub kind: RelationKind,
    pub residual: Option<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleReport<F> {
    pub outcomes: Vec<ScalarRelationOutcome<F>>,
}

impl<F: Field> ModuleReport<F> {
    pub fn passes(&self) -> bool {
        self.outcomes.iter().all(|o| o.residual.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ScalarRelationOutcome<F>> {
        self.outcomes.iter().filter(|o| o.residual.is_some())
    }

    pub fn first_failure(&self) -> Option<String> {
        self.failures()
            .next()
            .map(|o| format!("{} has residual {}", o.name, o.residual.as_ref().unwrap()))
    }
}

impl<F: Field> ScalarAssignment<F> {
    fn image(&self, letter: Letter) -> F {
        let inv = |x: &F| x.inv().unwrap_or_else(|| x.zero_like());
        match letter {
            Letter::T(i) => self.t[i - 1].clone(),
            Letter::TInv(i) => inv(&self.t[i - 1]),
            Letter::X(j) => self.x[j - 1].clone(),
            Letter::XInv(j) => inv(&self.x[j - 1]),
        }
    }

    fn evaluate(&self, word: &GeneratorWord) -> F {
        word.letters().iter().fold(self.q.one_like(), |acc, &l| acc * &self.image(l))
    }

    /// Substitute into every defining relation of `H_q`. A zero scalar has
    /// no inverse; it is substituted as zero so the invertibility relations
    /// report it.
    pub fn check(&self) -> ModuleReport<F> {
        let n = self.t.len();
        let outcomes = relation_list(n, &self.q, CrossConvention::SubscriptShift)
            .into_iter()
            .map(|rel| {
                let mut residual = self.evaluate(&rel.lhs);
                for (c, w) in &rel.rhs {
                    residual = residual - self.evaluate(w) * c;
                }
                ScalarRelationOutcome {
                    name: rel.name,
                    kind: rel.kind,
                    residual: (!residual.is_zero()).then_some(residual),
                }
            })
            .collect();
        ModuleReport { outcomes }
    }
}

/// A one-dimensional module: every `T_i` acts by `epsilon`, `X_j` by `a_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimModule<F> {
    q: F,
    epsilon: F,
    a: Vec<F>,
}

impl<F: Field> OneDimModule<F> {
    /// Package the scalars; use [`OneDimModule::check`] to validate them.
    pub fn new(n: usize, q: F, epsilon: F, a: Vec<F>) -> Result<Self, OneDimError> {
        if a.len() != n + 1 {
            return Err(OneDimError::LengthMismatch { expected: n + 1, got: a.len() });
        }
        Ok(OneDimModule { q, epsilon, a })
    }

    pub fn rank(&self) -> usize {
        self.a.len() - 1
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn epsilon(&self) -> &F {
        &self.epsilon
    }

    /// `(a_1, .., a_{n+1})`.
    pub fn x_scalars(&self) -> &[F] {
        &self.a
    }

    pub fn assignment(&self) -> ScalarAssignment<F> {
        ScalarAssignment { q: self.q.clone(), t: vec![self.epsilon.clone(); self.rank()], x: self.a.clone() }
    }

    pub fn check(&self) -> ModuleReport<F> {
        self.assignment().check()
    }
}

/// The geometric family of one branch before the anchor is solved for:
/// `a_i = q^{exponents[i-1]} z` with `z^{anchor_power} = anchor_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorFamily<F> {
    pub branch: Branch,
    pub epsilon: F,
    pub exponents: Vec<i64>,
    /// 1-based position `k` with `a_k = z`.
    pub anchor_index: usize,
    pub anchor_power: u32,
    pub anchor_target: F,
}

impl<F: Field> AnchorFamily<F> {
    pub fn instantiate(&self, q: &F, anchor: &F) -> Vec<F> {
        self.exponents
            .iter()
            .map(|&e| q.pow_i64(e).expect("q is nonzero") * anchor)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification<F> {
    pub family: AnchorFamily<F>,
    /// Every module of the branch, when the anchor equation was solved
    /// completely in the field; `None` when only the family is known.
    pub modules: Option<Vec<OneDimModule<F>>>,
}

/// The one-dimensional modules of `H_q` of rank `n` in one branch.
pub fn classify_onedim<F: Field>(n: usize, q: &F, branch: Branch) -> Result<Classification<F>, OneDimError> {
    if q.is_zero() {
        return Err(OneDimError::ZeroParameter);
    }
    let n_i = n as i64;
    let (epsilon, exponents, anchor_index) = match branch {
        Branch::Sign => (-q.one_like(), (1..=n_i + 1).map(|i| n_i + 1 - i).collect::<Vec<_>>(), n + 1),
        Branch::Index => (q.clone(), (1..=n_i + 1).map(|i| i - 1).collect(), 1),
    };
    let triangular = n_i * (n_i + 1) / 2;
    let anchor_target = q.pow_i64(-triangular).expect("q is nonzero");
    let family = AnchorFamily {
        branch,
        epsilon: epsilon.clone(),
        exponents,
        anchor_index,
        anchor_power: n as u32 + 1,
        anchor_target,
    };
    let modules = family.anchor_target.nth_roots(family.anchor_power).map(|roots| {
        roots
            .iter()
            .map(|z| OneDimModule { q: q.clone(), epsilon: epsilon.clone(), a: family.instantiate(q, z) })
            .collect()
    });
    Ok(Classification { family, modules })
}

/// Both branches, with modules listed once when the branches coincide
/// (`q = -1`).
pub fn classify_all<F: Field>(n: usize, q: &F) -> Result<Vec<Classification<F>>, OneDimError> {
    let sign = classify_onedim(n, q, Branch::Sign)?;
    let mut index = classify_onedim(n, q, Branch::Index)?;
    if let (Some(seen), Some(mods)) = (&sign.modules, &mut index.modules) {
        mods.retain(|m| !seen.contains(m));
    }
    Ok(vec![sign, index])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, RatFunc, Rational};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sign_module_over_rationals() {
        let c = classify_onedim(2, &r(2, 1), Branch::Sign).unwrap();
        let mods = c.modules.unwrap();
        assert_eq!(mods.len(), 1);
        assert_eq!(mods[0].x_scalars(), &[r(2, 1), r(1, 1), r(1, 2)]);
        assert_eq!(mods[0].epsilon(), &r(-1, 1));
        assert!(mods[0].check().passes());
        assert_eq!(c.family.anchor_target, r(1, 8));
    }

    #[test]
    fn check_module_examples() {
        let good = OneDimModule::new(2, r(2, 1), r(-1, 1), vec![r(2, 1), r(1, 1), r(1, 2)]).unwrap();
        assert!(good.check().passes());
        let bad = OneDimModule::new(2, r(2, 1), r(2, 1), vec![r(2, 1), r(1, 1), r(1, 2)]).unwrap();
        let report = bad.check();
        let failed: Vec<&str> = report.failures().map(|o| o.name.as_str()).collect();
        // ε = 2: ε²a_1 - 2 a_2 = 8 - 2 = 6, ε²a_2 - 2 a_3 = 4 - 1 = 3
        assert_eq!(failed, vec!["cross(1)", "cross(2)"]);
        let residuals: Vec<Rational> = report.failures().map(|o| o.residual.clone().unwrap()).collect();
        assert_eq!(residuals, vec![r(6, 1), r(3, 1)]);
        for n in 1..=4 {
            let trivial = OneDimModule::new(n, r(1, 1), r(1, 1), vec![r(1, 1); n + 1]).unwrap();
            assert!(trivial.check().passes());
        }
        assert_eq!(
            OneDimModule::new(2, r(2, 1), r(-1, 1), vec![r(1, 1)]),
            Err(OneDimError::LengthMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn prime_field_scan() {
        let q = Fp::new(4, 7).unwrap();
        let c = classify_onedim(2, &q, Branch::Sign).unwrap();
        let anchors: Vec<u64> = c.modules.unwrap().iter().map(|m| m.x_scalars()[2].residue()).collect();
        // exhaustive oracle over F_7^*: z^3 * 4^3 = 1
        let expected: Vec<u64> = (1..7u64).filter(|z| (z.pow(3) * 64) % 7 == 1).collect();
        assert_eq!(anchors, expected);
    }

    #[test]
    fn trivial_parameter() {
        let c = classify_onedim(2, &r(1, 1), Branch::Sign).unwrap();
        let mods = c.modules.unwrap();
        assert_eq!(mods.len(), 1);
        assert_eq!(mods[0].x_scalars(), vec![r(1, 1); 3].as_slice());
    }

    #[test]
    fn symbolic_parity() {
        let q = RatFunc::q();
        let even = classify_onedim(2, &q, Branch::Sign).unwrap();
        let mods = even.modules.unwrap();
        assert_eq!(mods.len(), 1);
        // z = q^{-1}: a = (q, 1, 1/q)
        let a: Vec<String> = mods[0].x_scalars().iter().map(|x| x.to_string()).collect();
        assert_eq!(a, vec!["q", "1", "1/q"]);
        assert!(mods[0].check().passes());
        let odd = classify_onedim(3, &q, Branch::Sign).unwrap();
        assert!(odd.modules.is_none());
        assert_eq!(odd.family.anchor_power, 4);
    }

    #[test]
    fn branches_coincide_at_minus_one() {
        let all = classify_all(2, &r(-1, 1)).unwrap();
        assert_eq!(all[0].modules.as_ref().unwrap().len(), 1);
        assert!(all[1].modules.as_ref().unwrap().is_empty());
        assert_eq!(classify_onedim(2, &r(0, 1), Branch::Sign).unwrap_err(), OneDimError::ZeroParameter);
    }

    #[test]
    fn mixed_t_scalars_fail_braid() {
        for p in [3u64, 5, 7] {
            let units: Vec<Fp> = Fp::units(p).collect();
            for e1 in &units {
                for e2 in &units {
                    if e1 == e2 {
                        continue;
                    }
                    for q in &units {
                        let a = vec![q.one_like(); 3];
                        let report = ScalarAssignment { q: *q, t: vec![*e1, *e2], x: a }.check();
                        assert!(report.failures().any(|o| o.kind == RelationKind::Braid), "p={p} ε=({e1:?},{e2:?})");
                    }
                }
            }
        }
    }
}
