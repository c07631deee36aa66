//! Exact computation in affine Hecke algebras of type `A_n`.
//!
//! The algebra `H_q` is generated by `T_1..T_n` and invertible, commuting
//! `X_1..X_{n+1}` with `X_1 X_2 ... X_{n+1} = 1`, subject to
//! `(T_i + 1)(T_i - q) = 0`, the braid relations and the cross relation
//! `T_i X_i T_i = q X_{i+1}`. Elements are kept in the normal form
//! `sum c * T_w X^lambda`.
//!
//! Layers, bottom up: [`scalars`] (exact coefficient fields), [`laurent`]
//! (Laurent polynomials modulo the product relation), [`weyl`] (the
//! symmetric group), [`hecke`] (multiplication, a rewriting oracle and the
//! presentation checker), [`center`], [`onedim`] (one-dimensional modules)
//! and [`isotest`] (deciding whether `H_q` and `H_p` are isomorphic).

pub mod scalars;

pub use scalars::{Field, FieldElement, FieldKind, Fp, RatFunc, Rational, ScalarError};
pub mod laurent;
mod text;

pub use laurent::{ExponentVector, LaurentError, LaurentPoly};
pub mod weyl;

pub use weyl::{Permutation, WeylError};
pub mod hecke;

pub use hecke::{GeneratorWord, HeckeAlgebra, HeckeElement, HeckeError, Letter};
pub mod center;
pub mod onedim;
pub mod isotest;

pub use center::{central_character, central_s, is_central, symmetry_check, CentralCharacter};
pub use isotest::{decide_isomorphism, Direction, IsoError, IsoVerdict};
pub use onedim::{classify_onedim, Branch, OneDimError, OneDimModule};

/// `H_q` over the rationals with a numeric parameter.
pub type QHeckeAlgebra = HeckeAlgebra<Rational>;
/// `H_q` over `Q(q)` with the indeterminate as parameter.
pub type QqHeckeAlgebra = HeckeAlgebra<RatFunc>;
pub type FpHeckeAlgebra = HeckeAlgebra<Fp>;
pub type QHeckeElement = HeckeElement<Rational>;
pub type QqHeckeElement = HeckeElement<RatFunc>;
pub type FpHeckeElement = HeckeElement<Fp>;
pub type QLaurentPoly = LaurentPoly<Rational>;
pub type QqLaurentPoly = LaurentPoly<RatFunc>;
pub type FpLaurentPoly = LaurentPoly<Fp>;
