//! The defining relations of `H_p` as data, and a checker that evaluates
//! them on candidate generator images inside some `H_q`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::scalars::Field;

use super::{GeneratorWord, HeckeAlgebra, HeckeElement, HeckeError, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Quadratic,
    Braid,
    DistantT,
    XCommute,
    XProduct,
    Cross,
    DistantXT,
    Invertibility,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Quadratic => "quadratic",
            RelationKind::Braid => "braid",
            RelationKind::DistantT => "distant-t",
            RelationKind::XCommute => "x-commute",
            RelationKind::XProduct => "x-product",
            RelationKind::Cross => "cross",
            RelationKind::DistantXT => "distant-x-t",
            RelationKind::Invertibility => "invertibility",
        })
    }
}

/// Which right-hand side to use for the relation tying `T_i` to `X_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossConvention {
    /// `T_i X_i T_i = q X_{i+1}`.
    #[default]
    SubscriptShift,
    /// `T_i X_i T_i = q X_i + 1`, the subscript `i+1` read as `i` plus one.
    /// It does not hold in `H_q`; kept so that can be demonstrated.
    AsPrinted,
}

impl fmt::Display for CrossConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossConvention::SubscriptShift => "T_i X_i T_i = q X_(i+1)",
            CrossConvention::AsPrinted => "T_i X_i T_i = q X_i + 1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationRelation<F> {
    pub name: String,
    pub kind: RelationKind,
    pub lhs: GeneratorWord,
    /// Linear combination of words.
    pub rhs: Vec<(F, GeneratorWord)>,
}

impl<F: Field> fmt::Display for PresentationRelation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = ", self.name, self.lhs)?;
        if self.rhs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.rhs.iter().map(|(c, w)| format!("({c})*[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn word(letters: &[Letter]) -> GeneratorWord {
    GeneratorWord(letters.to_vec())
}

/// Every defining relation of `H_param` of rank `n`, in a fixed order:
/// quadratic, braid, distant T commutation, X commutation, the X product,
/// cross relations, X/T commutation, and invertibility.
pub fn relation_list<F: Field>(n: usize, param: &F, convention: CrossConvention) -> Vec<PresentationRelation<F>> {
    use Letter::*;
    let one = param.one_like();
    let mut rels = Vec::new();
    let mut push = |name: String, kind, lhs, rhs| rels.push(PresentationRelation { name, kind, lhs, rhs });

    for i in 1..=n {
        // (T+1)(T-q) = 0  <=>  T T = (q-1) T + q
        push(
            format!("quadratic({i})"),
            RelationKind::Quadratic,
            word(&[T(i), T(i)]),
            vec![(param.clone() - &one, word(&[T(i)])), (param.clone(), GeneratorWord::empty())],
        );
    }
    for i in 1..n {
        push(
            format!("braid({i},{})", i + 1),
            RelationKind::Braid,
            word(&[T(i), T(i + 1), T(i)]),
            vec![(one.clone(), word(&[T(i + 1), T(i), T(i + 1)]))],
        );
    }
    for i in 1..=n {
        for j in i + 2..=n {
            push(
                format!("t-commute({i},{j})"),
                RelationKind::DistantT,
                word(&[T(i), T(j)]),
                vec![(one.clone(), word(&[T(j), T(i)]))],
            );
        }
    }
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            push(
                format!("x-commute({i},{j})"),
                RelationKind::XCommute,
                word(&[X(i), X(j)]),
                vec![(one.clone(), word(&[X(j), X(i)]))],
            );
        }
    }
    push(
        "x-product".to_string(),
        RelationKind::XProduct,
        (1..=n + 1).map(X).collect(),
        vec![(one.clone(), GeneratorWord::empty())],
    );
    for i in 1..=n {
        let rhs = match convention {
            CrossConvention::SubscriptShift => vec![(param.clone(), word(&[X(i + 1)]))],
            CrossConvention::AsPrinted => {
                vec![(param.clone(), word(&[X(i)])), (one.clone(), GeneratorWord::empty())]
            }
        };
        push(format!("cross({i})"), RelationKind::Cross, word(&[T(i), X(i), T(i)]), rhs);
    }
    for i in 1..=n {
        for j in (1..=n + 1).filter(|&j| j != i && j != i + 1) {
            push(
                format!("x-t-commute(x{j},t{i})"),
                RelationKind::DistantXT,
                word(&[X(j), T(i)]),
                vec![(one.clone(), word(&[T(i), X(j)]))],
            );
        }
    }
    for i in 1..=n {
        push(format!("t-inverse-right({i})"), RelationKind::Invertibility, word(&[T(i), TInv(i)]), vec![(one.clone(), GeneratorWord::empty())]);
        push(format!("t-inverse-left({i})"), RelationKind::Invertibility, word(&[TInv(i), T(i)]), vec![(one.clone(), GeneratorWord::empty())]);
    }
    for j in 1..=n + 1 {
        push(format!("x-inverse-right({j})"), RelationKind::Invertibility, word(&[X(j), XInv(j)]), vec![(one.clone(), GeneratorWord::empty())]);
        push(format!("x-inverse-left({j})"), RelationKind::Invertibility, word(&[XInv(j), X(j)]), vec![(one.clone(), GeneratorWord::empty())]);
    }
    rels
}

/// Images of the generators `t_i, x_j` of `H_p` (and of their inverses)
/// inside an ambient algebra `H_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorImages<F> {
    ambient: HeckeAlgebra<F>,
    target: F,
    t: Vec<HeckeElement<F>>,
    t_inv: Vec<HeckeElement<F>>,
    x: Vec<HeckeElement<F>>,
    x_inv: Vec<HeckeElement<F>>,
}

impl<F: Field> GeneratorImages<F> {
    /// The built-in generators, images of `H_q` in itself.
    pub fn identity(ambient: &HeckeAlgebra<F>) -> Result<Self, HeckeError> {
        let n = ambient.rank();
        Ok(GeneratorImages {
            ambient: ambient.clone(),
            target: ambient.q().clone(),
            t: (1..=n).map(|i| ambient.t(i)).collect::<Result<_, _>>()?,
            t_inv: (1..=n).map(|i| ambient.t_inv(i)).collect::<Result<_, _>>()?,
            x: (1..=n + 1).map(|j| ambient.x(j)).collect::<Result<_, _>>()?,
            x_inv: (1..=n + 1).map(|j| ambient.x_inv(j)).collect::<Result<_, _>>()?,
        })
    }

    /// Build from images of `t_1..t_n`, `x_1..x_{n+1}`. Inverses are derived:
    /// `t_i^{-1} = p^{-1}(t_i + 1 - p)`, and `x_j^{-1}` by inverting a
    /// Laurent monomial image.
    pub fn new(ambient: &HeckeAlgebra<F>, target: F, t: Vec<HeckeElement<F>>, x: Vec<HeckeElement<F>>) -> Result<Self, HeckeError> {
        let named = t
            .into_iter()
            .enumerate()
            .map(|(k, h)| (format!("t{}", k + 1), h))
            .chain(x.into_iter().enumerate().map(|(k, h)| (format!("x{}", k + 1), h)))
            .collect();
        Self::from_named(ambient, target, &named)
    }

    /// Build from a name map with keys `t<i>`, `x<j>` and optionally
    /// `tinv<i>` / `xinv<j>` (also accepted: `t<i>^-1`, `x<j>^-1`).
    pub fn from_named(
        ambient: &HeckeAlgebra<F>,
        target: F,
        named: &BTreeMap<String, HeckeElement<F>>,
    ) -> Result<Self, HeckeError> {
        let n = ambient.rank();
        let p_inv = target.inv().ok_or(HeckeError::ZeroParameter)?;
        for h in named.values() {
            if h.algebra() != ambient {
                return Err(HeckeError::ParameterMismatch);
            }
        }
        let lookup = |base: &str, k: usize| -> Option<HeckeElement<F>> {
            named.get(&format!("{base}{k}")).cloned()
        };
        let lookup_inv = |base: &str, k: usize| -> Option<HeckeElement<F>> {
            named
                .get(&format!("{base}inv{k}"))
                .or_else(|| named.get(&format!("{base}{k}^-1")))
                .cloned()
        };
        let mut t = Vec::with_capacity(n);
        let mut t_inv = Vec::with_capacity(n);
        for i in 1..=n {
            let ti = lookup("t", i).ok_or_else(|| HeckeError::MissingImage(format!("t{i}")))?;
            let inv = match lookup_inv("t", i) {
                Some(h) => h,
                None => {
                    let shift = ambient.scalar(ambient.field_one() - &target);
                    ti.try_add(&shift)?.scale(&p_inv)
                }
            };
            t.push(ti);
            t_inv.push(inv);
        }
        let mut x = Vec::with_capacity(n + 1);
        let mut x_inv = Vec::with_capacity(n + 1);
        for j in 1..=n + 1 {
            let xj = lookup("x", j).ok_or_else(|| HeckeError::MissingImage(format!("x{j}")))?;
            let inv = match lookup_inv("x", j) {
                Some(h) => h,
                None => invert_monomial(&xj).ok_or_else(|| HeckeError::MissingImage(format!("xinv{j}")))?,
            };
            x.push(xj);
            x_inv.push(inv);
        }
        Ok(GeneratorImages { ambient: ambient.clone(), target, t, t_inv, x, x_inv })
    }

    pub fn ambient(&self) -> &HeckeAlgebra<F> {
        &self.ambient
    }

    /// The parameter `p` of the algebra whose presentation the images
    /// should satisfy.
    pub fn target_parameter(&self) -> &F {
        &self.target
    }

    pub fn t_images(&self) -> &[HeckeElement<F>] {
        &self.t
    }

    pub fn x_images(&self) -> &[HeckeElement<F>] {
        &self.x
    }

    pub fn image(&self, letter: Letter) -> &HeckeElement<F> {
        match letter {
            Letter::T(i) => &self.t[i - 1],
            Letter::TInv(i) => &self.t_inv[i - 1],
            Letter::X(j) => &self.x[j - 1],
            Letter::XInv(j) => &self.x_inv[j - 1],
        }
    }

    pub fn evaluate_word(&self, word: &GeneratorWord) -> Result<HeckeElement<F>, HeckeError> {
        word.validate(self.ambient.rank())?;
        word.letters()
            .iter()
            .try_fold(self.ambient.one(), |acc, &l| acc.try_mul(self.image(l)))
    }

    /// `lhs - rhs` of a relation with the images substituted.
    pub fn residual(&self, relation: &PresentationRelation<F>) -> Result<HeckeElement<F>, HeckeError> {
        let mut acc = self.evaluate_word(&relation.lhs)?;
        for (c, w) in &relation.rhs {
            acc = acc.try_sub(&self.evaluate_word(w)?.scale(c))?;
        }
        Ok(acc)
    }
}

fn invert_monomial<F: Field>(h: &HeckeElement<F>) -> Option<HeckeElement<F>> {
    let mut terms = h.terms();
    let (w, lambda, c) = terms.next()?;
    if terms.next().is_some() || !w.is_identity() {
        return None;
    }
    Some(h.algebra().basis_element(w.clone(), lambda.neg(), c.inv()?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationOutcome<F> {
    pub name: String,
    pub kind: RelationKind,
    /// `None` when the relation holds, otherwise the nonzero `lhs - rhs`.
    pub residual: Option<HeckeElement<F>>,
}

impl<F> RelationOutcome<F> {
    pub fn holds(&self) -> bool {
        self.residual.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport<F> {
    pub outcomes: Vec<RelationOutcome<F>>,
}

impl<F> RelationReport<F> {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(RelationOutcome::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome<F>> {
        self.outcomes.iter().filter(|o| !o.holds())
    }
}

/// Evaluate every relation of `H_p` (with `p` the images' target
/// parameter) on the images. Relations are checked in parallel; the report
/// keeps [`relation_list`] order.
pub fn check_relations<F: Field>(images: &GeneratorImages<F>, convention: CrossConvention) -> Result<RelationReport<F>, HeckeError> {
    let relations = relation_list(images.ambient.rank(), &images.target, convention);
    let outcomes = relations
        .par_iter()
        .map(|rel| {
            let residual = images.residual(rel)?;
            Ok(RelationOutcome {
                name: rel.name.clone(),
                kind: rel.kind,
                residual: (!residual.is_zero()).then_some(residual),
            })
        })
        .collect::<Result<Vec<_>, HeckeError>>()?;
    Ok(RelationReport { outcomes })
}
