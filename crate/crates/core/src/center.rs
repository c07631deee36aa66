//! Central elements `S_j = e_j(X_1, .., X_{n+1})`, centrality checks, the
//! inversion symmetry of the `S_j`, and central characters of
//! one-dimensional modules.

use rayon::prelude::*;

use crate::hecke::{HeckeAlgebra, HeckeElement, HeckeError, Letter};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::onedim::{OneDimError, OneDimModule};
use crate::scalars::Field;

/// `S_j` embedded in `H_q`, for `1 <= j <= n`.
pub fn central_s<F: Field>(algebra: &HeckeAlgebra<F>, j: usize) -> Result<HeckeElement<F>, HeckeError> {
    let n = algebra.rank();
    if j == 0 || j > n {
        return Err(LaurentError::IndexOutOfRange { index: j, max: n }.into());
    }
    algebra.from_laurent(&LaurentPoly::elementary_symmetric(j, n, algebra.q())?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorCheck<F> {
    pub generator: Letter,
    /// `h g - g h`; zero when they commute.
    pub commutator: HeckeElement<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityReport<F> {
    pub checks: Vec<CommutatorCheck<F>>,
}

impl<F: Field> CentralityReport<F> {
    pub fn is_central(&self) -> bool {
        self.checks.iter().all(|c| c.commutator.is_zero())
    }

    /// First generator, in the order `T_1..T_n, X_1..X_{n+1}`, that fails
    /// to commute.
    pub fn first_witness(&self) -> Option<&CommutatorCheck<F>> {
        self.checks.iter().find(|c| !c.commutator.is_zero())
    }
}

/// Commutators of `h` with every generator `T_1..T_n, X_1..X_{n+1}`.
pub fn is_central<F: Field>(h: &HeckeElement<F>) -> Result<CentralityReport<F>, HeckeError> {
    let algebra = h.algebra();
    let n = algebra.rank();
    let generators: Vec<Letter> = (1..=n).map(Letter::T).chain((1..=n + 1).map(Letter::X)).collect();
    let checks = generators
        .par_iter()
        .map(|&g| {
            let commutator = h.commutator(&algebra.generator(g)?)?;
            Ok(CommutatorCheck { generator: g, commutator })
        })
        .collect::<Result<Vec<_>, HeckeError>>()?;
    Ok(CentralityReport { checks })
}

/// Scalars by which `S_1..S_n` act on a one-dimensional module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharacter<F> {
    pub values: Vec<F>,
}

pub fn central_character<F: Field>(module: &OneDimModule<F>) -> Result<CentralCharacter<F>, OneDimError> {
    let report = module.check();
    if !report.passes() {
        return Err(OneDimError::InvalidModule(report.first_failure().unwrap_or_default()));
    }
    let n = module.rank();
    let values = (1..=n)
        .map(|j| LaurentPoly::elementary_symmetric(j, n, module.q())?.evaluate(module.x_scalars()))
        .collect::<Result<Vec<_>, LaurentError>>()?;
    Ok(CentralCharacter { values })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryRow {
    pub i: usize,
    /// Index of the elementary function that `S_i` turns into under
    /// `X -> X^{-1}`, namely `n + 1 - i`.
    pub partner: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub n: usize,
    pub rows: Vec<SymmetryRow>,
}

impl SymmetryReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Check `S_i(X) = S_{n+1-i}(X^{-1})` for `i = 0..=n+1`, where `S_0 = S_{n+1} = 1`.
///
/// With `n + 1` variables of product one, `e_i` and `e_{n+1-i}` are swapped
/// by inverting the variables; the complementary index is `n + 1 - i`.
pub fn symmetry_check<F: Field>(n: usize, like: &F) -> Result<SymmetryReport, LaurentError> {
    let rows = (0..=n + 1)
        .map(|i| {
            let partner = n + 1 - i;
            let lhs = LaurentPoly::elementary_symmetric(i, n, like)?;
            let rhs = LaurentPoly::elementary_symmetric(partner, n, like)?.invert_variables();
            Ok(SymmetryRow { i, partner, holds: lhs == rhs })
        })
        .collect::<Result<Vec<_>, LaurentError>>()?;
    Ok(SymmetryReport { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::parse_element;
    use crate::scalars::{RatFunc, Rational};

    fn symbolic(n: usize) -> HeckeAlgebra<RatFunc> {
        HeckeAlgebra::new(n, RatFunc::q()).unwrap()
    }

    #[test]
    fn s1_embedding() {
        let h = symbolic(2);
        assert_eq!(central_s(&h, 1).unwrap(), parse_element("X^[1,0,0] + X^[0,1,0] + X^[-1,-1,0]", &h).unwrap());
        assert!(central_s(&h, 0).is_err());
        assert!(central_s(&h, 3).is_err());
    }

    #[test]
    fn s_n_is_inverted_s1() {
        let h = symbolic(2);
        let s1 = central_s(&h, 1).unwrap().as_laurent().unwrap();
        let s2 = central_s(&h, 2).unwrap();
        assert_eq!(h.from_laurent(&s1.invert_variables()).unwrap(), s2);
    }

    #[test]
    fn centrality_small() {
        let h = symbolic(2);
        for j in 1..=2 {
            let report = is_central(&central_s(&h, j).unwrap()).unwrap();
            assert!(report.is_central(), "S_{j}: {:?}", report.first_witness());
            assert_eq!(report.checks.len(), 5);
        }
        assert!(is_central(&h.one()).unwrap().is_central());
    }

    #[test]
    fn t1_is_not_central() {
        let h = symbolic(2);
        let report = is_central(&h.t(1).unwrap()).unwrap();
        assert!(!report.is_central());
        let witness = report.checks.iter().find(|c| c.generator == Letter::X(1)).unwrap();
        // T_1 X_1 - X_1 T_1 = T_1 X_1 - T_1 X_2 + (q-1) X_2
        let x1 = h.x(1).unwrap();
        let t1 = h.t(1).unwrap();
        let expected = &(&t1 * &x1) - &(&x1 * &t1);
        assert_eq!(witness.commutator, expected);
        assert_eq!(
            expected,
            parse_element("T[1]*X^[1,0,0] - T[1]*X^[0,1,0] + (q-1)*X^[0,1,0]", &h).unwrap()
        );
    }

    #[test]
    fn symmetry_identity() {
        for n in 1..=5 {
            let report = symmetry_check(n, &Rational::from_integer(1.into())).unwrap();
            assert!(report.all_hold(), "n={n}");
            assert_eq!(report.rows.len(), n + 2);
        }
        // the off-by-one reading S_i(X) = S_{n-i}(X^-1) is false already for n = 1
        let one = Rational::from_integer(1.into());
        let s1 = LaurentPoly::elementary_symmetric(1, 1, &one).unwrap();
        let s0 = LaurentPoly::elementary_symmetric(0, 1, &one).unwrap();
        assert_ne!(s1, s0.invert_variables());
    }

    #[test]
    fn characters_of_small_modules() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let sign = OneDimModule::new(2, r(2, 1), r(-1, 1), vec![r(2, 1), r(1, 1), r(1, 2)]).unwrap();
        assert_eq!(central_character(&sign).unwrap().values, vec![r(7, 2), r(7, 2)]);
        let trivial = OneDimModule::new(2, r(1, 1), r(1, 1), vec![r(1, 1); 3]).unwrap();
        assert_eq!(central_character(&trivial).unwrap().values, vec![r(3, 1), r(3, 1)]);
        let broken = OneDimModule::new(2, r(2, 1), r(2, 1), vec![r(2, 1), r(1, 1), r(1, 2)]).unwrap();
        assert!(matches!(central_character(&broken), Err(OneDimError::InvalidModule(_))));
    }
}
