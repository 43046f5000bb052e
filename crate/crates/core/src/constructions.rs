//! Constructions producing new (Hom-)superalgebras: Bol structures on right
//! (Hom-)alternative superalgebras, Lie supertriple systems on Jordan
//! superalgebras, Yau twists, `βⁿ` twists and derived Hom-superalgebras.
//!
//! Each construction verifies its hypotheses first and fails with the
//! violated one named.

use crate::algebra::{check_multiplicative, SuperAlgebraData};
use crate::error::Error;
use crate::grading::{basis_tuples, koszul, Parity};
use crate::identities::{check_hom_bol_super, check_right_hom_alternative, AltForm};
use crate::map::GradedLinearMap;
use crate::products::{
    check_supercommutative, hom_jordan_associator_with, super_jordan, supercommutator, JordanSign, ScaleConvention,
};
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalar::int;
use crate::tensor::TernaryStructure;
use crate::vector::{degree_of, SuperVector};

fn summarize(report: &CheckReport, a: &SuperAlgebraData) -> String {
    let mut parts = Vec::new();
    for v in report.verdicts.iter().filter(|v| !v.passed()) {
        let first = &v.counterexamples[0];
        let labels: Vec<String> = first.tuple.iter().map(|&i| a.grading().label(i)).collect();
        parts.push(format!(
            "{} fails at ({}) and {} other tuple(s)",
            v.name,
            labels.join(", "),
            v.counterexamples.len() - 1
        ));
    }
    parts.join("; ")
}

/// `(-1)^{|x|(|y|+|z|)} as^J_α(y,z,x)` on every basis triple, times `factor`.
fn jordan_bol_ternary(plus: &SuperAlgebraData, sign: JordanSign, factor: i64) -> Result<TernaryStructure, Error> {
    let dim = plus.dim();
    let mut table = TernaryStructure::zero(dim);
    for t in basis_tuples(dim, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let p = plus.degree(x).times(plus.degree(y) + plus.degree(z));
        let asj = hom_jordan_associator_with(plus, sign, &plus.basis(y), &plus.basis(z), &plus.basis(x))?;
        table.set(x, y, z, asj.scale(&int(factor * koszul(p))));
    }
    Ok(table)
}

/// Supercommutator bracket plus `{x,y,z} = (-1)^{|x|(|y|+|z|)} as^J_α(y,z,x)`,
/// computed in the plus algebra, with twist `α²`.
///
/// The input must be multiplicative and right Hom-alternative.
pub fn bol_from_right_alternative(a: &SuperAlgebraData, c: &ScaleConvention) -> Result<SuperAlgebraData, Error> {
    bol_from_right_alternative_with(a, c, JordanSign::Minus)
}

pub fn bol_from_right_alternative_with(
    a: &SuperAlgebraData,
    c: &ScaleConvention,
    sign: JordanSign,
) -> Result<SuperAlgebraData, Error> {
    let ralt = check_right_hom_alternative(a, AltForm::Eq21)?;
    if !ralt.passed() {
        return Err(Error::NotRightAlternative(summarize(&ralt, a)));
    }
    let mult = check_multiplicative(a);
    if !mult.passed() {
        return Err(Error::NotMultiplicative(summarize(&mult, a)));
    }
    let minus = supercommutator(a, c)?;
    let plus = super_jordan(a, c)?;
    let ternary = jordan_bol_ternary(&plus, sign, 1)?;
    let alpha2 = a.twist_or_identity().power(2);
    minus.with_ternary(Some(ternary)).with_twist(Some(alpha2))
}

/// `[x,y,z] = 2(-1)^{|x|(|y|+|z|)} as^J_α(y,z,x)` on a supercommutative
/// algebra with twist `α`; the result is ternary-only with twist `α²`.
pub fn lie_sts_from_jordan(plus: &SuperAlgebraData) -> Result<SuperAlgebraData, Error> {
    lie_sts_from_jordan_with(plus, JordanSign::Minus)
}

pub fn lie_sts_from_jordan_with(plus: &SuperAlgebraData, sign: JordanSign) -> Result<SuperAlgebraData, Error> {
    require_jordan_input(plus)?;
    let ternary = jordan_bol_ternary(plus, sign, 2)?;
    let alpha2 = plus.twist_or_identity().power(2);
    plus.clone().with_binary(None).with_ternary(Some(ternary)).with_twist(Some(alpha2))
}

fn require_jordan_input(plus: &SuperAlgebraData) -> Result<(), Error> {
    let sc = check_supercommutative(plus)?;
    if !sc.passed() {
        return Err(Error::NotSupercommutative(summarize(&sc, plus)));
    }
    let mult = check_multiplicative(plus);
    if !mult.passed() {
        return Err(Error::NotMultiplicative(summarize(&mult, plus)));
    }
    Ok(())
}

/// `(x,y,z) = (x∘y)∘α(z) + (-1)^{|x||y| + |z|(|x|+|y|)} (z∘y)∘α(x) - (-1)^{|x||y|} α(y)∘(x∘z)`.
pub fn jordan_triple(
    plus: &SuperAlgebraData,
    x: &SuperVector,
    y: &SuperVector,
    z: &SuperVector,
) -> Result<SuperVector, Error> {
    let sc = check_supercommutative(plus)?;
    if !sc.passed() {
        return Err(Error::NotSupercommutative(summarize(&sc, plus)));
    }
    let g = plus.grading();
    let (dx, dy, dz) = (degree_of(x, g)?, degree_of(y, g)?, degree_of(z, g)?);
    let p = plus.require_binary()?;
    let alpha = plus.twist_or_identity();
    let mut out = p.eval(&p.eval(x, y)?, &alpha.apply(z)?)?;
    let s1: Parity = dx.times(dy) + dz.times(dx + dy);
    out.add_scaled(&int(koszul(s1)), &p.eval(&p.eval(z, y)?, &alpha.apply(x)?)?);
    out.add_scaled(&int(-koszul(dx.times(dy))), &p.eval(&alpha.apply(y)?, &p.eval(x, z)?)?);
    Ok(out)
}

/// Product preservation of `f: src → dst` on all basis tuples and the
/// intertwining relation `f ∘ α_src = α_dst ∘ f`.
pub fn check_hom_morphism(
    f: &GradedLinearMap,
    src: &SuperAlgebraData,
    dst: &SuperAlgebraData,
) -> Result<CheckReport, Error> {
    if f.dim() != src.dim() || f.dim() != dst.dim() {
        return Err(Error::DimensionMismatch { expected: src.dim(), found: f.dim() });
    }
    f.check_even(src.grading())?;
    let dim = src.dim();
    let images: Vec<SuperVector> = (0..dim).map(|i| f.apply_unchecked(&src.basis(i))).collect();
    let mut report = CheckReport::new("morphism");
    if let Some(b) = src.binary() {
        let b2 = dst.require_binary()?;
        let mut failures = Vec::new();
        for t in basis_tuples(dim, 2) {
            let residual = &f.apply_unchecked(b.get(t[0], t[1])) - &b2.eval(&images[t[0]], &images[t[1]])?;
            if !residual.is_zero() {
                failures.push(Counterexample { tuple: t, residual });
            }
        }
        report.push(AxiomId::MorphBinary, failures);
    }
    if let Some(tern) = src.ternary() {
        let t2 = dst.require_ternary()?;
        let mut failures = Vec::new();
        for t in basis_tuples(dim, 3) {
            let lhs = f.apply_unchecked(tern.get(t[0], t[1], t[2]));
            let residual = &lhs - &t2.eval(&images[t[0]], &images[t[1]], &images[t[2]])?;
            if !residual.is_zero() {
                failures.push(Counterexample { tuple: t, residual });
            }
        }
        report.push(AxiomId::MorphTernary, failures);
    }
    let (a_src, a_dst) = (src.twist_or_identity(), dst.twist_or_identity());
    let mut failures = Vec::new();
    for (i, image) in images.iter().enumerate() {
        let residual = &f.apply_unchecked(&a_src.apply_unchecked(&src.basis(i))) - &a_dst.apply_unchecked(image);
        if !residual.is_zero() {
            failures.push(Counterexample { tuple: vec![i], residual });
        }
    }
    report.push(AxiomId::MorphTwist, failures);
    Ok(report)
}

/// Bracket and triple preservation only; twists are ignored.
fn require_product_morphism(beta: &GradedLinearMap, a: &SuperAlgebraData) -> Result<(), Error> {
    let untwisted = a.clone().with_twist(None)?;
    let report = check_hom_morphism(beta, &untwisted, &untwisted)?;
    if !report.passed() {
        return Err(Error::NotMorphism(summarize(&report, a)));
    }
    Ok(())
}

/// Yau twist of a Bol superalgebra: `[x,y]_β = β[x,y]`, `{x,y,z}_β = β²{x,y,z}`, twist `β`.
pub fn yau_twist_bts(a: &SuperAlgebraData, beta: &GradedLinearMap) -> Result<SuperAlgebraData, Error> {
    if !a.has_identity_twist() {
        return Err(Error::UnexpectedTwist);
    }
    beta.check_even(a.grading())?;
    require_product_morphism(beta, a)?;
    yau_twist_bts_unchecked(a, beta)
}

/// The Yau twist formulas without the morphism hypothesis. The result need
/// not satisfy any Hom-Bol axiom; this exists to tabulate the formulas.
pub fn yau_twist_bts_unchecked(a: &SuperAlgebraData, beta: &GradedLinearMap) -> Result<SuperAlgebraData, Error> {
    if beta.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: beta.dim() });
    }
    beta.check_even(a.grading())?;
    let beta2 = beta.power(2);
    let binary = a.binary().map(|b| b.map_outputs(beta));
    let ternary = a.ternary().map(|t| t.map_outputs(&beta2));
    a.clone().with_binary(binary).with_ternary(ternary).with_twist(Some(beta.clone()))
}

/// `x *_β y = β(x*y)`, twist `β ∘ α`.
pub fn yau_twist_binary(a: &SuperAlgebraData, beta: &GradedLinearMap) -> Result<SuperAlgebraData, Error> {
    if beta.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: beta.dim() });
    }
    beta.check_even(a.grading())?;
    let b = a.require_binary()?;
    let product_only = a.clone().with_ternary(None).with_twist(None)?;
    let report = check_hom_morphism(beta, &product_only, &product_only)?;
    if !report.passed() {
        return Err(Error::NotMorphism(summarize(&report, a)));
    }
    let twist = beta.compose(&a.twist_or_identity())?;
    a.clone().with_binary(Some(b.map_outputs(beta))).with_twist(Some(twist))
}

/// `[x,y]_{βⁿ} = βⁿ[x,y]`, `{x,y,z}_{βⁿ} = β²ⁿ{x,y,z}`, twist `βⁿ ∘ α`.
///
/// `a` must be Hom-Bol and `β` an even self-morphism commuting with `α`.
pub fn beta_n_twist(a: &SuperAlgebraData, beta: &GradedLinearMap, n: u32) -> Result<SuperAlgebraData, Error> {
    if beta.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: beta.dim() });
    }
    beta.check_even(a.grading())?;
    let hb = check_hom_bol_super(a)?;
    if !hb.passed() {
        return Err(Error::NotHomBol(summarize(&hb, a)));
    }
    require_product_morphism(beta, a)?;
    let alpha = a.twist_or_identity();
    if beta.compose(&alpha)? != alpha.compose(beta)? {
        return Err(Error::NotCommuting("β ∘ α ≠ α ∘ β".into()));
    }
    let bn = beta.power(n);
    let b2n = beta.power(2 * n);
    let binary = a.binary().map(|b| b.map_outputs(&bn));
    let ternary = a.ternary().map(|t| t.map_outputs(&b2n));
    let twist = bn.compose(&alpha)?;
    a.clone().with_binary(binary).with_ternary(ternary).with_twist(Some(twist))
}

/// Largest `n` accepted by [`nth_derived`]; `α^{2^{n+1}}` is computed by repeated products.
pub const MAX_DERIVED: u32 = 16;

/// `x *⁽ⁿ⁾ y = α^{2ⁿ-1}(x*y)`, `{x,y,z}⁽ⁿ⁾ = α^{2ⁿ⁺¹-2}{x,y,z}`, twist `α^{2ⁿ}`.
pub fn nth_derived(a: &SuperAlgebraData, n: u32) -> Result<SuperAlgebraData, Error> {
    if n > MAX_DERIVED {
        return Err(Error::InvalidParam(format!("derived order {n} exceeds {MAX_DERIVED}")));
    }
    let alpha = a.twist_or_identity();
    let binary = a.binary().map(|b| b.map_outputs(&alpha.power((1 << n) - 1)));
    let ternary = a.ternary().map(|t| t.map_outputs(&alpha.power((1 << (n + 1)) - 2)));
    a.clone().with_binary(binary).with_ternary(ternary).with_twist(Some(alpha.power(1 << n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::identities::check_hom_lie_supertriple;
    use crate::scalar::frac;

    fn v(i: i64, j: i64, k: i64) -> SuperVector {
        SuperVector::from_coeffs(vec![int(i), int(j), int(k)])
    }

    #[test]
    fn bol_table_of_star() {
        let bol = bol_from_right_alternative(&fixtures::example_4_1_star(), &ScaleConvention::unit()).unwrap();
        assert!(bol.same_structure(&fixtures::example_4_1_bol()));
        assert!(bol.twist().is_none());
    }

    #[test]
    fn zero_product_gives_zero_bol() {
        let g = fixtures::ijk_grading();
        let zero = SuperAlgebraData::binary_only(g, crate::tensor::BinaryStructure::zero(3)).unwrap();
        let bol = bol_from_right_alternative(&zero, &ScaleConvention::unit()).unwrap();
        assert!(bol.binary().unwrap().is_zero());
        assert!(bol.ternary().unwrap().is_zero());
    }

    #[test]
    fn rejects_non_alternative_input() {
        let mut b = fixtures::example_4_1_star().binary().unwrap().clone();
        b.set(2, 1, v(5, 0, 0));
        let a = SuperAlgebraData::binary_only(fixtures::ijk_grading(), b).unwrap();
        let err = bol_from_right_alternative(&a, &ScaleConvention::unit()).unwrap_err();
        assert!(matches!(err, Error::NotRightAlternative(_)), "{err}");
    }

    #[test]
    fn lie_triple_of_plus_algebra() {
        let plus = super_jordan(&fixtures::example_4_1_star(), &ScaleConvention::unit()).unwrap();
        let lsts = lie_sts_from_jordan(&plus).unwrap();
        assert_eq!(lsts.ternary().unwrap().get(0, 1, 1), &v(8, 0, 0));
        assert!(lsts.binary().is_none());
        assert!(check_hom_lie_supertriple(&lsts).unwrap().passed());
        let star = fixtures::example_4_1_star();
        assert!(matches!(lie_sts_from_jordan(&star), Err(Error::NotSupercommutative(_))));
    }

    #[test]
    fn lie_triple_twist_is_squared() {
        let beta = fixtures::beta(int(2), int(0)).unwrap();
        let twisted = yau_twist_binary(&fixtures::example_4_1_star(), &beta).unwrap();
        let plus = super_jordan(&twisted, &ScaleConvention::unit()).unwrap();
        let lsts = lie_sts_from_jordan(&plus).unwrap();
        assert_eq!(lsts.twist_or_identity(), beta.power(2));
    }

    #[test]
    fn jordan_triple_value() {
        let plus = super_jordan(&fixtures::example_4_1_star(), &ScaleConvention::unit()).unwrap();
        let (i, j) = (plus.basis(0), plus.basis(1));
        assert_eq!(jordan_triple(&plus, &j, &j, &i).unwrap(), v(-8, 0, 0));
        assert!(jordan_triple(&plus, &SuperVector::zero(3), &j, &i).unwrap().is_zero());
    }

    #[test]
    fn yau_binary_values() {
        let beta = fixtures::beta(int(2), int(0)).unwrap();
        let twisted = yau_twist_binary(&fixtures::example_4_1_star(), &beta).unwrap();
        assert_eq!(twisted.binary().unwrap().get(1, 2), &v(4, 0, 0));
        let bad = fixtures::beta(int(2), int(3)).unwrap();
        assert!(matches!(yau_twist_binary(&fixtures::example_4_1_star(), &bad), Err(Error::NotMorphism(_))));
        let same = yau_twist_binary(&fixtures::example_4_1_star(), &GradedLinearMap::identity(3)).unwrap();
        assert!(same.same_structure(&fixtures::example_4_1_star()));
    }

    #[test]
    fn yau_bts_values() {
        let bol = fixtures::example_4_1_bol();
        let beta = fixtures::beta(frac(1, 2), int(0)).unwrap();
        let hb = yau_twist_bts(&bol, &beta).unwrap();
        assert_eq!(hb.binary().unwrap().get(1, 2), &v(3, 0, 0));
        let unchanged = yau_twist_bts(&bol, &GradedLinearMap::identity(3)).unwrap();
        assert!(unchanged.same_structure(&bol));
        let b23 = fixtures::beta(int(2), int(3)).unwrap();
        assert!(matches!(yau_twist_bts(&bol, &b23), Err(Error::NotMorphism(_))));
        let tabulated = yau_twist_bts_unchecked(&bol, &b23).unwrap();
        assert_eq!(tabulated.ternary().unwrap().get(0, 1, 1), &v(16, 0, 0));
    }

    #[test]
    fn beta_n_small_cases() {
        let bol = fixtures::example_4_1_bol();
        let beta = fixtures::beta(int(2), int(0)).unwrap();
        let n0 = beta_n_twist(&bol, &beta, 0).unwrap();
        assert!(n0.same_structure(&bol));
        let n1 = beta_n_twist(&bol, &beta, 1).unwrap();
        assert!(n1.same_structure(&yau_twist_bts(&bol, &beta).unwrap()));
        let hb = fixtures::example_4_1_hom_bol(int(2), int(0)).unwrap();
        let n2 = beta_n_twist(&hb, &beta, 2).unwrap();
        // β⁴ applied to the twisted value β²(4i) = 16i gives 256i.
        assert_eq!(n2.ternary().unwrap().get(0, 1, 1), &v(256, 0, 0));
    }

    #[test]
    fn derived_exponents() {
        let hb = fixtures::example_4_1_hom_bol(int(2), int(0)).unwrap();
        assert!(nth_derived(&hb, 0).unwrap().same_structure(&hb));
        let d1 = nth_derived(&hb, 1).unwrap();
        assert_eq!(d1.binary().unwrap().get(1, 2), &v(24, 0, 0));
        let alpha = hb.twist_or_identity();
        assert_eq!(d1.twist_or_identity(), alpha.power(2));
        assert!(nth_derived(&hb, MAX_DERIVED + 1).is_err());
    }

    #[test]
    fn morphism_checks() {
        let bol = fixtures::example_4_1_bol();
        let id = GradedLinearMap::identity(3);
        assert!(check_hom_morphism(&id, &bol, &bol).unwrap().passed());
        let b23 = fixtures::beta(int(2), int(3)).unwrap();
        let report = check_hom_morphism(&b23, &bol, &bol).unwrap();
        assert_eq!(report.failing(), vec![AxiomId::MorphBinary.to_string()]);
        assert_eq!(report.verdict(AxiomId::MorphBinary).unwrap().failing_tuples(), vec![vec![1, 1]]);
        let star = fixtures::example_4_1_star();
        let report = check_hom_morphism(&b23, &star, &star).unwrap();
        assert_eq!(report.verdict(AxiomId::MorphBinary).unwrap().failing_tuples(), vec![vec![1, 1]]);
    }
}
