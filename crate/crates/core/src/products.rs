//! Derived products: the minus (supercommutator) and plus (super-Jordan)
//! algebras, the Hom-associator and the Hom-Jordan associator.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::grading::{basis_tuples, koszul};
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalar::{format_scalar, int, one, Scalar};
use crate::tensor::BinaryStructure;
use crate::vector::SuperVector;

/// Overall factor `λ` on the bracket and the Jordan product.
///
/// The default `λ = 1` reproduces the worked tables; `λ = 1/2` is the
/// normalized convention. Induced ternary products carry `λ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleConvention {
    lambda: Scalar,
}

impl ScaleConvention {
    pub fn new(lambda: Scalar) -> Result<Self, Error> {
        if lambda.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(ScaleConvention { lambda })
    }

    pub fn unit() -> Self {
        ScaleConvention { lambda: one() }
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
}

impl Default for ScaleConvention {
    fn default() -> Self {
        ScaleConvention::unit()
    }
}

impl fmt::Display for ScaleConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_scalar(&self.lambda))
    }
}

/// Sign between the two terms of the Hom-Jordan associator.
///
/// `Minus` gives `(x∘y)∘α(z) - α(x)∘(y∘z)` and is the one that reproduces the
/// worked Bol table. `Plus` is kept for experiments only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JordanSign {
    #[default]
    Minus,
    Plus,
}

impl JordanSign {
    fn factor(self) -> Scalar {
        match self {
            JordanSign::Minus => -one(),
            JordanSign::Plus => one(),
        }
    }
}

impl FromStr for JordanSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "minus" => Ok(JordanSign::Minus),
            "plus" => Ok(JordanSign::Plus),
            other => Err(Error::InvalidParam(format!("jordan sign must be plus or minus, got {other:?}"))),
        }
    }
}

fn graded_combination(a: &SuperAlgebraData, lambda: &Scalar, sign: i64) -> Result<BinaryStructure, Error> {
    let b = a.require_binary()?;
    Ok(BinaryStructure::from_fn(a.dim(), |i, j| {
        let s = sign * koszul(a.degree(i).times(a.degree(j)));
        let mut v = b.get(i, j).clone();
        v.add_scaled(&int(s), b.get(j, i));
        v.scale(lambda)
    }))
}

/// `[x,y] = λ(xy - (-1)^{|x||y|} yx)`; grading and twist are kept.
pub fn supercommutator(a: &SuperAlgebraData, c: &ScaleConvention) -> Result<SuperAlgebraData, Error> {
    let bracket = graded_combination(a, c.lambda(), -1)?;
    Ok(a.clone().with_binary(Some(bracket)))
}

/// `x∘y = λ(xy + (-1)^{|x||y|} yx)`; grading and twist are kept.
pub fn super_jordan(a: &SuperAlgebraData, c: &ScaleConvention) -> Result<SuperAlgebraData, Error> {
    let product = graded_combination(a, c.lambda(), 1)?;
    Ok(a.clone().with_binary(Some(product)))
}

/// `as_α(x,y,z) = (xy)α(z) - α(x)(yz)`.
pub fn hom_associator(
    a: &SuperAlgebraData,
    x: &SuperVector,
    y: &SuperVector,
    z: &SuperVector,
) -> Result<SuperVector, Error> {
    let b = a.require_binary()?;
    let alpha = a.twist_or_identity();
    let left = b.eval(&b.eval(x, y)?, &alpha.apply(z)?)?;
    let right = b.eval(&alpha.apply(x)?, &b.eval(y, z)?)?;
    Ok(&left - &right)
}

/// `as^J_α(x,y,z) = (x∘y)∘α(z) - α(x)∘(y∘z)`, evaluated with the product of `plus`.
pub fn hom_jordan_associator(
    plus: &SuperAlgebraData,
    x: &SuperVector,
    y: &SuperVector,
    z: &SuperVector,
) -> Result<SuperVector, Error> {
    hom_jordan_associator_with(plus, JordanSign::Minus, x, y, z)
}

pub fn hom_jordan_associator_with(
    plus: &SuperAlgebraData,
    sign: JordanSign,
    x: &SuperVector,
    y: &SuperVector,
    z: &SuperVector,
) -> Result<SuperVector, Error> {
    let p = plus.require_binary()?;
    let alpha = plus.twist_or_identity();
    let mut out = p.eval(&p.eval(x, y)?, &alpha.apply(z)?)?;
    let right = p.eval(&alpha.apply(x)?, &p.eval(y, z)?)?;
    out.add_scaled(&sign.factor(), &right);
    Ok(out)
}

/// `x∘y - (-1)^{|x||y|} y∘x = 0` on all basis pairs.
pub fn check_supercommutative(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    let b = a.require_binary()?;
    let mut failures = Vec::new();
    for t in basis_tuples(a.dim(), 2) {
        let (i, j) = (t[0], t[1]);
        let mut residual = b.get(i, j).clone();
        residual.add_scaled(&int(-koszul(a.degree(i).times(a.degree(j)))), b.get(j, i));
        if !residual.is_zero() {
            failures.push(Counterexample { tuple: t, residual });
        }
    }
    let mut report = CheckReport::new("supercommutative");
    report.push(AxiomId::PlusSupercomm, failures);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::frac;

    fn e(k: usize) -> SuperVector {
        SuperVector::basis(3, k)
    }

    fn v(i: i64, j: i64, k: i64) -> SuperVector {
        SuperVector::from_coeffs(vec![int(i), int(j), int(k)])
    }

    #[test]
    fn minus_algebra_of_star() {
        let star = fixtures::example_4_1_star();
        let minus = supercommutator(&star, &ScaleConvention::unit()).unwrap();
        let br = minus.binary().unwrap();
        assert_eq!(br.get(1, 2), &v(6, 0, 0));
        assert_eq!(br.get(2, 1), &v(6, 0, 0));
        assert!(br.get(0, 1).is_zero());
        assert!(br.get(0, 0).is_zero());
        let half = supercommutator(&star, &ScaleConvention::new(frac(1, 2)).unwrap()).unwrap();
        assert_eq!(half.binary().unwrap().get(1, 2), &v(3, 0, 0));
    }

    #[test]
    fn plus_algebra_of_star() {
        let star = fixtures::example_4_1_star();
        let plus = super_jordan(&star, &ScaleConvention::unit()).unwrap();
        let p = plus.binary().unwrap();
        assert_eq!(p.get(1, 2), &v(-2, 0, 0));
        assert_eq!(p.get(0, 1), &v(0, 0, 2));
        assert!(check_supercommutative(&plus).unwrap().passed());
        assert!(!check_supercommutative(&star).unwrap().passed());
    }

    #[test]
    fn associator_values() {
        let star = fixtures::example_4_1_star();
        assert!(hom_associator(&star, &e(1), &e(2), &e(2)).unwrap().is_zero());
        assert_eq!(hom_associator(&star, &e(1), &e(1), &e(2)).unwrap(), v(0, 0, -2));
    }

    #[test]
    fn jordan_associator_values() {
        let plus = super_jordan(&fixtures::example_4_1_star(), &ScaleConvention::unit()).unwrap();
        assert_eq!(hom_jordan_associator(&plus, &e(1), &e(1), &e(0)).unwrap(), v(4, 0, 0));
        assert_eq!(hom_jordan_associator(&plus, &e(1), &e(0), &e(1)).unwrap(), v(8, 0, 0));
        let zero = SuperVector::zero(3);
        assert!(hom_jordan_associator(&plus, &zero, &e(1), &e(0)).unwrap().is_zero());
        // The printed "+" form gives a different value on the same triple.
        let printed = hom_jordan_associator_with(&plus, JordanSign::Plus, &e(1), &e(0), &e(1)).unwrap();
        assert_ne!(printed, v(8, 0, 0));
    }

    #[test]
    fn missing_binary() {
        let a = fixtures::example_4_1_star().with_binary(None);
        assert_eq!(supercommutator(&a, &ScaleConvention::unit()).unwrap_err(), Error::MissingBinary);
        assert_eq!(ScaleConvention::new(int(0)).unwrap_err(), Error::ZeroScale);
    }
}
