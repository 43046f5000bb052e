//! The universal container: a superspace with optional binary and ternary
//! products and an optional even twisting map.

use crate::error::Error;
use crate::grading::{basis_tuples, Grading, Parity};
use crate::map::GradedLinearMap;
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalar::Scalar;
use crate::tensor::{BinaryStructure, TernaryStructure};
use crate::vector::SuperVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebraData {
    grading: Grading,
    binary: Option<BinaryStructure>,
    ternary: Option<TernaryStructure>,
    twist: Option<GradedLinearMap>,
}

impl SuperAlgebraData {
    /// Validates dimensions, evenness of the twist and grading compatibility
    /// of both products.
    pub fn new(
        grading: Grading,
        binary: Option<BinaryStructure>,
        ternary: Option<TernaryStructure>,
        twist: Option<GradedLinearMap>,
    ) -> Result<Self, Error> {
        let data = SuperAlgebraData::new_unvalidated(grading, binary, ternary, twist)?;
        if let Some(twist) = &data.twist {
            twist.check_even(&data.grading)?;
        }
        let report = check_grading_compat(&data);
        if !report.passed() {
            let first = report.verdicts.iter().flat_map(|v| &v.counterexamples).next().expect("a failure");
            let labels: Vec<String> = first.tuple.iter().map(|&i| data.grading.label(i)).collect();
            return Err(Error::GradingViolation(format!("product of ({}) has the wrong degree", labels.join(", "))));
        }
        Ok(data)
    }

    /// Checks only that every component has the grading's dimension. An
    /// identity twist is stored as `None`.
    pub fn new_unvalidated(
        grading: Grading,
        binary: Option<BinaryStructure>,
        ternary: Option<TernaryStructure>,
        twist: Option<GradedLinearMap>,
    ) -> Result<Self, Error> {
        let dim = grading.dim();
        let dims = [binary.as_ref().map(|b| b.dim()), ternary.as_ref().map(|t| t.dim()), twist.as_ref().map(|m| m.dim())];
        for found in dims.into_iter().flatten() {
            if found != dim {
                return Err(Error::DimensionMismatch { expected: dim, found });
            }
        }
        let twist = twist.filter(|t| !t.is_identity());
        Ok(SuperAlgebraData { grading, binary, ternary, twist })
    }

    pub fn binary_only(grading: Grading, binary: BinaryStructure) -> Result<Self, Error> {
        SuperAlgebraData::new(grading, Some(binary), None, None)
    }

    pub fn zero(grading: Grading) -> Self {
        let dim = grading.dim();
        SuperAlgebraData {
            grading,
            binary: Some(BinaryStructure::zero(dim)),
            ternary: Some(TernaryStructure::zero(dim)),
            twist: None,
        }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn dim(&self) -> usize {
        self.grading.dim()
    }

    pub fn degree(&self, index: usize) -> Parity {
        self.grading.degree(index)
    }

    pub fn binary(&self) -> Option<&BinaryStructure> {
        self.binary.as_ref()
    }

    pub fn ternary(&self) -> Option<&TernaryStructure> {
        self.ternary.as_ref()
    }

    /// The stored twist; `None` means the identity.
    pub fn twist(&self) -> Option<&GradedLinearMap> {
        self.twist.as_ref()
    }

    pub fn twist_or_identity(&self) -> GradedLinearMap {
        self.twist.clone().unwrap_or_else(|| GradedLinearMap::identity(self.dim()))
    }

    pub fn has_identity_twist(&self) -> bool {
        self.twist.as_ref().is_none_or(GradedLinearMap::is_identity)
    }

    pub fn require_binary(&self) -> Result<&BinaryStructure, Error> {
        self.binary.as_ref().ok_or(Error::MissingBinary)
    }

    pub fn require_ternary(&self) -> Result<&TernaryStructure, Error> {
        self.ternary.as_ref().ok_or(Error::MissingTernary)
    }

    pub fn basis(&self, index: usize) -> SuperVector {
        SuperVector::basis(self.dim(), index)
    }

    pub fn with_binary(mut self, binary: Option<BinaryStructure>) -> Self {
        self.binary = binary;
        self
    }

    pub fn with_ternary(mut self, ternary: Option<TernaryStructure>) -> Self {
        self.ternary = ternary;
        self
    }

    /// Replaces the twist. An identity matrix is normalized to `None`.
    pub fn with_twist(mut self, twist: Option<GradedLinearMap>) -> Result<Self, Error> {
        if let Some(t) = &twist {
            if t.dim() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: t.dim() });
            }
            t.check_even(&self.grading)?;
        }
        self.twist = twist.filter(|t| !t.is_identity());
        Ok(self)
    }

    pub fn with_grading(mut self, grading: Grading) -> Result<Self, Error> {
        if !grading.same_space(&self.grading) {
            return Err(Error::InvalidGrading("relabelling must keep the degrees".into()));
        }
        self.grading = grading;
        Ok(self)
    }

    /// `(λ[,], λ²{,,})` with the same twist.
    pub fn rescaled(&self, lambda: &Scalar) -> Self {
        let lambda2 = lambda * lambda;
        SuperAlgebraData {
            grading: self.grading.clone(),
            binary: self.binary.as_ref().map(|b| b.scaled(lambda)),
            ternary: self.ternary.as_ref().map(|t| t.scaled(&lambda2)),
            twist: self.twist.clone(),
        }
    }

    /// Product structures equal, twists equal after normalizing identity.
    pub fn same_structure(&self, other: &SuperAlgebraData) -> bool {
        self.grading.same_space(&other.grading)
            && self.binary == other.binary
            && self.ternary == other.ternary
            && self.twist_or_identity() == other.twist_or_identity()
    }
}

/// Every nonzero structure constant lands in the degree block predicted by its
/// arguments.
pub fn check_grading_compat(a: &SuperAlgebraData) -> CheckReport {
    let mut report = CheckReport::new("grading");
    let to_ce = |(tuple, residual)| Counterexample { tuple, residual };
    if let Some(b) = a.binary() {
        report.push(AxiomId::GradeBinary, b.grading_violations(a.grading()).into_iter().map(to_ce).collect());
    }
    if let Some(t) = a.ternary() {
        report.push(AxiomId::GradeTernary, t.grading_violations(a.grading()).into_iter().map(to_ce).collect());
    }
    report
}

/// `α(x·y) = α(x)·α(y)` on basis pairs and the ternary analogue on basis triples.
pub fn check_multiplicative(a: &SuperAlgebraData) -> CheckReport {
    let alpha = a.twist_or_identity();
    let mut report = CheckReport::new("multiplicative");
    let dim = a.dim();
    let images: Vec<SuperVector> = (0..dim).map(|i| alpha.apply_unchecked(&a.basis(i))).collect();
    if let Some(b) = a.binary() {
        let mut failures = Vec::new();
        for t in basis_tuples(dim, 2) {
            let lhs = alpha.apply_unchecked(b.get(t[0], t[1]));
            let rhs = b.eval(&images[t[0]], &images[t[1]]).expect("dimensions agree");
            let residual = &lhs - &rhs;
            if !residual.is_zero() {
                failures.push(Counterexample { tuple: t, residual });
            }
        }
        report.push(AxiomId::MultBinary, failures);
    }
    if let Some(tern) = a.ternary() {
        let mut failures = Vec::new();
        for t in basis_tuples(dim, 3) {
            let lhs = alpha.apply_unchecked(tern.get(t[0], t[1], t[2]));
            let rhs = tern.eval(&images[t[0]], &images[t[1]], &images[t[2]]).expect("dimensions agree");
            let residual = &lhs - &rhs;
            if !residual.is_zero() {
                failures.push(Counterexample { tuple: t, residual });
            }
        }
        report.push(AxiomId::MultTernary, failures);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rejects_odd_twist_and_bad_degrees() {
        let g = Grading::from_bits(&[0, 1]).unwrap();
        let swap = GradedLinearMap::from_images(vec![SuperVector::basis(2, 1), SuperVector::basis(2, 0)]).unwrap();
        let err = SuperAlgebraData::new(g.clone(), None, None, Some(swap)).unwrap_err();
        assert!(matches!(err, Error::NotEven { .. }));

        let mut b = BinaryStructure::zero(2);
        b.set(0, 1, SuperVector::basis(2, 0));
        assert!(matches!(SuperAlgebraData::binary_only(g.clone(), b.clone()), Err(Error::GradingViolation(_))));
        let unchecked = SuperAlgebraData::new_unvalidated(g, Some(b), None, None).unwrap();
        let report = check_grading_compat(&unchecked);
        assert_eq!(report.failing(), vec![AxiomId::GradeBinary.to_string()]);
    }

    #[test]
    fn identity_twist_is_multiplicative() {
        let g = Grading::from_bits(&[0, 1]).unwrap();
        let mut b = BinaryStructure::zero(2);
        b.set(1, 1, SuperVector::basis(2, 0).scale(&int(3)));
        let a = SuperAlgebraData::binary_only(g, b).unwrap();
        assert!(check_multiplicative(&a).passed());
        assert!(a.has_identity_twist());
        let a = a.with_twist(Some(GradedLinearMap::identity(2))).unwrap();
        assert!(a.twist().is_none());
    }

    #[test]
    fn zero_algebra_is_compatible() {
        let a = SuperAlgebraData::zero(Grading::from_bits(&[0, 1, 1]).unwrap());
        assert!(check_grading_compat(&a).passed());
    }

    #[test]
    fn dimension_mismatch() {
        let g = Grading::from_bits(&[0, 1]).unwrap();
        let err = SuperAlgebraData::new(g, Some(BinaryStructure::zero(3)), None, None).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }
}
