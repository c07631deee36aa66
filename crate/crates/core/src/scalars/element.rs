use std::fmt;

use num_traits::Zero;

use super::{parse_in, Field, FieldKind, Fp, RatFunc, Rational, ScalarError};

/// A scalar tagged with the field it belongs to, for boundaries where the
/// field is only known at runtime (command line, text formats).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    PrimeField(Fp),
    RationalFunction(RatFunc),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn zero(kind: FieldKind) -> Result<Self, ScalarError> {
        Ok(match kind {
            FieldKind::Rational => FieldElement::Rational(Rational::zero()),
            FieldKind::Prime(p) => FieldElement::PrimeField(Fp::zero(p)?),
            FieldKind::RationalFunction => FieldElement::RationalFunction(RatFunc::zero()),
        })
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rational(x) => x.kind(),
            FieldElement::PrimeField(x) => x.kind(),
            FieldElement::RationalFunction(x) => x.kind(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(x) => Field::is_zero(x),
            FieldElement::PrimeField(x) => x.is_zero(),
            FieldElement::RationalFunction(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(x) => write!(f, "{x}"),
            FieldElement::PrimeField(x) => write!(f, "{x}"),
            FieldElement::RationalFunction(x) => write!(f, "{x}"),
        }
    }
}

/// Parse `text` into the canonical form of an element of `field`.
pub fn parse_scalar(text: &str, field: FieldKind) -> Result<FieldElement, ScalarError> {
    Ok(match FieldElement::zero(field)? {
        FieldElement::Rational(z) => FieldElement::Rational(parse_in(text, &z)?),
        FieldElement::PrimeField(z) => FieldElement::PrimeField(parse_in(text, &z)?),
        FieldElement::RationalFunction(z) => FieldElement::RationalFunction(parse_in(text, &z)?),
    })
}

pub fn invert(a: &FieldElement) -> Result<FieldElement, ScalarError> {
    let out = match a {
        FieldElement::Rational(x) => x.inv().map(FieldElement::Rational),
        FieldElement::PrimeField(x) => x.inv().map(FieldElement::PrimeField),
        FieldElement::RationalFunction(x) => x.inv().map(FieldElement::RationalFunction),
    };
    out.ok_or(ScalarError::DivisionByZero)
}

fn apply<F: Field>(a: &F, b: &F, op: ArithOp) -> Result<F, ScalarError> {
    if !a.same_field(b) {
        return Err(ScalarError::FieldMismatch { left: a.kind(), right: b.kind() });
    }
    Ok(match op {
        ArithOp::Add => a.clone() + b,
        ArithOp::Sub => a.clone() - b,
        ArithOp::Mul => a.clone() * b,
        ArithOp::Div => a.checked_div(b).ok_or(ScalarError::DivisionByZero)?,
    })
}

/// Exact field arithmetic on tagged scalars.
pub fn arithmetic(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, ScalarError> {
    use FieldElement::*;
    match (a, b) {
        (Rational(x), Rational(y)) => apply(x, y, op).map(Rational),
        (PrimeField(x), PrimeField(y)) => apply(x, y, op).map(PrimeField),
        (RationalFunction(x), RationalFunction(y)) => apply(x, y, op).map(RationalFunction),
        _ => Err(ScalarError::FieldMismatch { left: a.kind(), right: b.kind() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, field: &str) -> FieldElement {
        parse_scalar(text, field.parse().unwrap()).unwrap()
    }

    #[test]
    fn literal_parses() {
        assert_eq!(parse("1/2", "Q"), FieldElement::Rational(Rational::new(1.into(), 2.into())));
        assert_eq!(parse("10", "Fp:7"), FieldElement::PrimeField(Fp::new(3, 7).unwrap()));
        assert_eq!(parse("q-1", "Qq").to_string(), "q-1");
        assert_eq!(
            parse_scalar("1", FieldKind::Prime(8)),
            Err(ScalarError::NonInvertibleModulus(8))
        );
        assert_eq!(parse_scalar("3/0", FieldKind::Rational), Err(ScalarError::DenominatorZero));
    }

    #[test]
    fn inversion() {
        assert_eq!(invert(&parse("2", "Q")).unwrap(), parse("1/2", "Q"));
        assert_eq!(invert(&parse("3", "Fp:7")).unwrap(), parse("5", "Fp:7"));
        assert_eq!(invert(&parse("q", "Qq")).unwrap(), parse("1/q", "Qq"));
        assert_eq!(invert(&parse("0", "Qq")), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn arithmetic_examples() {
        let sum = arithmetic(&parse("1/2", "Q"), &parse("1/3", "Q"), ArithOp::Add).unwrap();
        assert_eq!(sum, parse("5/6", "Q"));
        let prod = arithmetic(&parse("q-1", "Qq"), &parse("q+1", "Qq"), ArithOp::Mul).unwrap();
        assert_eq!(prod, parse("q^2-1", "Qq"));
        let f7 = arithmetic(&parse("4", "Fp:7"), &parse("2", "Fp:7"), ArithOp::Mul).unwrap();
        assert_eq!(f7, parse("1", "Fp:7"));
        assert_eq!(
            arithmetic(&parse("1", "Q"), &parse("1", "Fp:7"), ArithOp::Add),
            Err(ScalarError::FieldMismatch { left: FieldKind::Rational, right: FieldKind::Prime(7) })
        );
        assert_eq!(
            arithmetic(&parse("1", "Fp:5"), &parse("1", "Fp:7"), ArithOp::Add),
            Err(ScalarError::FieldMismatch { left: FieldKind::Prime(5), right: FieldKind::Prime(7) })
        );
        assert_eq!(
            arithmetic(&parse("1", "Q"), &parse("0", "Q"), ArithOp::Div),
            Err(ScalarError::DivisionByZero)
        );
    }
}
