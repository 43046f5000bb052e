//! Exhaustive verifiers for the graded identity systems.
//!
//! Every axiom is multilinear in its quantified variables and basis vectors
//! are homogeneous, so checking all basis tuples decides the identity for all
//! homogeneous arguments. [`axiom_residual`] evaluates `LHS - RHS` on arbitrary
//! homogeneous vectors; the checkers run it over every basis tuple.

use std::str::FromStr;

use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::grading::{basis_tuples, koszul, Parity};
use crate::map::GradedLinearMap;
use crate::report::{AxiomId, CheckReport, Counterexample};
use crate::scalar::int;
use crate::vector::{degree_of, SuperVector};

/// Which form of right superalternativity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltForm {
    Eq21,
    Eq22,
    Both,
}

/// Named groups of axioms, as selected by `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    RightAlt,
    LeftAlt,
    Alt,
    Bol,
    HomBol,
    Lsts,
    Hlsts,
    Multiplicative,
    Grading,
    Supercommutative,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::RightAlt,
        Suite::LeftAlt,
        Suite::Alt,
        Suite::Bol,
        Suite::HomBol,
        Suite::Lsts,
        Suite::Hlsts,
        Suite::Multiplicative,
        Suite::Grading,
        Suite::Supercommutative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RightAlt => "right-alt",
            Suite::LeftAlt => "left-alt",
            Suite::Alt => "alt",
            Suite::Bol => "bol",
            Suite::HomBol => "hom-bol",
            Suite::Lsts => "lsts",
            Suite::Hlsts => "hlsts",
            Suite::Multiplicative => "multiplicative",
            Suite::Grading => "grading",
            Suite::Supercommutative => "supercomm",
        }
    }

    pub fn run(self, a: &SuperAlgebraData) -> Result<CheckReport, Error> {
        match self {
            Suite::RightAlt => check_right_hom_alternative(a, AltForm::Both),
            Suite::LeftAlt => check_left_hom_alternative(a),
            Suite::Alt => check_hom_alternative(a),
            Suite::Bol => check_bol_super(a),
            Suite::HomBol => check_hom_bol_super(a),
            Suite::Lsts => check_lie_supertriple(a),
            Suite::Hlsts => check_hom_lie_supertriple(a),
            Suite::Multiplicative => Ok(crate::algebra::check_multiplicative(a)),
            Suite::Grading => Ok(crate::algebra::check_grading_compat(a)),
            Suite::Supercommutative => crate::products::check_supercommutative(a),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown suite {s:?}")))
    }
}

/// Evaluation context: the algebra's products, its twist and the twist's square.
struct Ops<'a> {
    a: &'a SuperAlgebraData,
    alpha: GradedLinearMap,
    alpha2: GradedLinearMap,
}

impl<'a> Ops<'a> {
    fn new(a: &'a SuperAlgebraData) -> Self {
        let alpha = a.twist_or_identity();
        let alpha2 = alpha.power(2);
        Ops { a, alpha, alpha2 }
    }

    fn br(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector, Error> {
        self.a.require_binary()?.eval(x, y)
    }

    fn tr(&self, x: &SuperVector, y: &SuperVector, z: &SuperVector) -> Result<SuperVector, Error> {
        self.a.require_ternary()?.eval(x, y, z)
    }

    fn tw(&self, x: &SuperVector) -> SuperVector {
        self.alpha.apply_unchecked(x)
    }

    fn tw2(&self, x: &SuperVector) -> SuperVector {
        self.alpha2.apply_unchecked(x)
    }

    fn assoc(&self, x: &SuperVector, y: &SuperVector, z: &SuperVector) -> Result<SuperVector, Error> {
        let left = self.br(&self.br(x, y)?, &self.tw(z))?;
        let right = self.br(&self.tw(x), &self.br(y, z)?)?;
        Ok(&left - &right)
    }
}

/// `acc += (-1)^p · v`
fn add_signed(acc: &mut SuperVector, p: Parity, v: &SuperVector) {
    acc.add_scaled(&int(koszul(p)), v);
}

/// `LHS - RHS` of `axiom` at homogeneous arguments `args`.
///
/// The Hom-Lie supertriple axioms read the stored twist as the map that
/// replaces every `α²` of the Hom-Bol axioms.
pub fn axiom_residual(a: &SuperAlgebraData, axiom: AxiomId, args: &[SuperVector]) -> Result<SuperVector, Error> {
    if args.len() != axiom.arity() {
        return Err(Error::InvalidParam(format!("{axiom} takes {} arguments, got {}", axiom.arity(), args.len())));
    }
    let degrees: Vec<Parity> = args.iter().map(|v| degree_of(v, a.grading())).collect::<Result<_, _>>()?;
    let ops = Ops::new(a);
    residual_with_degrees(&ops, axiom, args, &degrees)
}

fn residual_with_degrees(ops: &Ops<'_>, axiom: AxiomId, args: &[SuperVector], d: &[Parity]) -> Result<SuperVector, Error> {
    use AxiomId::*;
    match axiom {
        RightAlt21 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let mut r = ops.assoc(x, y, z)?;
            add_signed(&mut r, d[1].times(d[2]), &ops.assoc(x, z, y)?);
            Ok(r)
        }
        RightAlt22 => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let s = d[1].times(d[2]);
            let mut sym = ops.br(y, z)?;
            add_signed(&mut sym, s, &ops.br(z, y)?);
            let mut r = ops.br(&ops.tw(x), &sym)?;
            r = &r - &ops.br(&ops.br(x, y)?, &ops.tw(z))?;
            add_signed(&mut r, s + Parity::Odd, &ops.br(&ops.br(x, z)?, &ops.tw(y))?);
            Ok(r)
        }
        LeftAlt => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let mut r = ops.assoc(x, y, z)?;
            add_signed(&mut r, d[0].times(d[1]), &ops.assoc(y, x, z)?);
            Ok(r)
        }
        Sb(1) | Shb(3) => {
            let (x, y) = (&args[0], &args[1]);
            let mut r = ops.br(x, y)?;
            add_signed(&mut r, d[0].times(d[1]), &ops.br(y, x)?);
            Ok(r)
        }
        Sb(2) | Shb(4) | Lsts(2) | Hlsts(4) => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let mut r = ops.tr(x, y, z)?;
            add_signed(&mut r, d[0].times(d[1]), &ops.tr(y, x, z)?);
            Ok(r)
        }
        Sb(3) | Shb(5) | Lsts(3) | Hlsts(5) => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            let mut r = ops.tr(x, y, z)?;
            add_signed(&mut r, d[0].times(d[1] + d[2]), &ops.tr(y, z, x)?);
            add_signed(&mut r, d[2].times(d[0] + d[1]), &ops.tr(z, x, y)?);
            Ok(r)
        }
        Sb(4) => bol_binary_compat(ops, args, d, false),
        Shb(6) => bol_binary_compat(ops, args, d, true),
        Sb(5) | Lsts(5) => bol_ternary_compat(ops, args, d, |v| v.clone()),
        Shb(7) => bol_ternary_compat(ops, args, d, |v| ops.tw2(v)),
        Hlsts(7) => bol_ternary_compat(ops, args, d, |v| ops.tw(v)),
        Shb(1) => {
            let (x, y) = (&args[0], &args[1]);
            Ok(&ops.tw(&ops.br(x, y)?) - &ops.br(&ops.tw(x), &ops.tw(y))?)
        }
        Shb(2) | Hlsts(2) => {
            let (x, y, z) = (&args[0], &args[1], &args[2]);
            Ok(&ops.tw(&ops.tr(x, y, z)?) - &ops.tr(&ops.tw(x), &ops.tw(y), &ops.tw(z))?)
        }
        other => Err(Error::InvalidParam(format!("{other} is not an identity of the axiom catalogue"))),
    }
}

/// SB4, or SHB6 when `twisted`:
/// `{αx,αy,[u,v]} = [{x,y,u},α²v] + s₁[α²u,{x,y,v}] + s₂({αu,αv,[x,y]} - [[αu,αv],[αx,αy]])`.
fn bol_binary_compat(ops: &Ops<'_>, args: &[SuperVector], d: &[Parity], twisted: bool) -> Result<SuperVector, Error> {
    let (x, y, u, v) = (&args[0], &args[1], &args[2], &args[3]);
    let t1 = |w: &SuperVector| if twisted { ops.tw(w) } else { w.clone() };
    let t2 = |w: &SuperVector| if twisted { ops.tw2(w) } else { w.clone() };
    let s1 = d[2].times(d[0] + d[1]);
    let s2 = (d[0] + d[1]).times(d[2] + d[3]);

    let lhs = ops.tr(&t1(x), &t1(y), &ops.br(u, v)?)?;
    let mut rhs = ops.br(&ops.tr(x, y, u)?, &t2(v))?;
    add_signed(&mut rhs, s1, &ops.br(&t2(u), &ops.tr(x, y, v)?)?);
    let (au, av) = (t1(u), t1(v));
    let mut inner = ops.tr(&au, &av, &ops.br(x, y)?)?;
    inner = &inner - &ops.br(&ops.br(&au, &av)?, &ops.br(&t1(x), &t1(y))?)?;
    add_signed(&mut rhs, s2, &inner);
    Ok(&lhs - &rhs)
}

/// SB5 (`t` = identity), SHB7 (`t` = α²), or the Hom-Lie supertriple analogue:
/// `{t x, t y, {u,v,w}} = {{x,y,u}, t v, t w} + s₁{t u, {x,y,v}, t w} + s₂{t u, t v, {x,y,w}}`.
fn bol_ternary_compat(
    ops: &Ops<'_>,
    args: &[SuperVector],
    d: &[Parity],
    t: impl Fn(&SuperVector) -> SuperVector,
) -> Result<SuperVector, Error> {
    let (x, y, u, v, w) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
    let s1 = d[2].times(d[0] + d[1]);
    let s2 = (d[0] + d[1]).times(d[2] + d[3]);
    let lhs = ops.tr(&t(x), &t(y), &ops.tr(u, v, w)?)?;
    let mut rhs = ops.tr(&ops.tr(x, y, u)?, &t(v), &t(w))?;
    add_signed(&mut rhs, s1, &ops.tr(&t(u), &ops.tr(x, y, v)?, &t(w))?);
    add_signed(&mut rhs, s2, &ops.tr(&t(u), &t(v), &ops.tr(x, y, w)?)?);
    Ok(&lhs - &rhs)
}

/// Runs each axiom over every basis tuple of its arity.
pub fn check_axioms(a: &SuperAlgebraData, suite: &str, axioms: &[AxiomId]) -> Result<CheckReport, Error> {
    let ops = Ops::new(a);
    let dim = a.dim();
    let basis: Vec<SuperVector> = (0..dim).map(|i| a.basis(i)).collect();
    let mut report = CheckReport::new(suite);
    for &axiom in axioms {
        let mut failures = Vec::new();
        for tuple in basis_tuples(dim, axiom.arity()) {
            let args: Vec<SuperVector> = tuple.iter().map(|&i| basis[i].clone()).collect();
            let degrees: Vec<Parity> = tuple.iter().map(|&i| a.degree(i)).collect();
            let residual = residual_with_degrees(&ops, axiom, &args, &degrees)?;
            if !residual.is_zero() {
                failures.push(Counterexample { tuple, residual });
            }
        }
        report.push(axiom, failures);
    }
    Ok(report)
}

pub fn check_right_hom_alternative(a: &SuperAlgebraData, form: AltForm) -> Result<CheckReport, Error> {
    a.require_binary()?;
    match form {
        AltForm::Eq21 => check_axioms(a, "right-alt", &[AxiomId::RightAlt21]),
        AltForm::Eq22 => check_axioms(a, "right-alt", &[AxiomId::RightAlt22]),
        AltForm::Both => {
            let report = check_axioms(a, "right-alt", &[AxiomId::RightAlt21, AxiomId::RightAlt22])?;
            let first = report.verdicts[0].failing_tuples();
            let second = report.verdicts[1].failing_tuples();
            if first != second {
                return Err(Error::InconsistentForms(format!("{first:?} vs {second:?}")));
            }
            Ok(report)
        }
    }
}

pub fn check_left_hom_alternative(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_binary()?;
    check_axioms(a, "left-alt", &[AxiomId::LeftAlt])
}

/// Right and left Hom-alternativity together.
pub fn check_hom_alternative(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_binary()?;
    check_axioms(a, "alt", &[AxiomId::RightAlt21, AxiomId::LeftAlt])
}

pub fn check_bol_super(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_binary()?;
    a.require_ternary()?;
    if !a.has_identity_twist() {
        return Err(Error::UnexpectedTwist);
    }
    check_axioms(a, "bol", &AxiomId::BOL)
}

pub fn check_hom_bol_super(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_binary()?;
    a.require_ternary()?;
    check_axioms(a, "hom-bol", &AxiomId::HOM_BOL)
}

fn require_zero_binary(a: &SuperAlgebraData) -> Result<(), Error> {
    match a.binary() {
        Some(b) if !b.is_zero() => Err(Error::NonzeroBinary),
        _ => Ok(()),
    }
}

pub fn check_lie_supertriple(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_ternary()?;
    require_zero_binary(a)?;
    if !a.has_identity_twist() {
        return Err(Error::UnexpectedTwist);
    }
    check_axioms(a, "lsts", &AxiomId::LSTS)
}

/// The stored twist plays the role of `α²` in the Hom-Bol axioms.
pub fn check_hom_lie_supertriple(a: &SuperAlgebraData) -> Result<CheckReport, Error> {
    a.require_ternary()?;
    require_zero_binary(a)?;
    check_axioms(a, "hlsts", &AxiomId::HLSTS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::grading::Grading;
    use crate::tensor::{BinaryStructure, TernaryStructure};

    #[test]
    fn star_is_right_alternative() {
        let star = fixtures::example_4_1_star();
        let report = check_right_hom_alternative(&star, AltForm::Both).unwrap();
        assert!(report.passed(), "{}", report.render(star.grading()));
    }

    #[test]
    fn star_is_not_left_alternative() {
        let star = fixtures::example_4_1_star();
        let report = check_left_hom_alternative(&star).unwrap();
        assert!(!report.passed());
        // as(i,j,j) + as(j,i,j) = 4i + 2i
        let failing = report.verdicts[0].failing_tuples();
        assert_eq!(failing, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 2, 1], vec![2, 1, 1]]);
        assert!(!check_hom_alternative(&star).unwrap().passed());
    }

    #[test]
    fn mutated_star_fails_right_alternativity() {
        let mut b = fixtures::example_4_1_star().binary().unwrap().clone();
        b.set(2, 1, SuperVector::basis(3, 0).scale(&int(5)));
        let a = SuperAlgebraData::binary_only(fixtures::ijk_grading(), b).unwrap();
        let report = check_right_hom_alternative(&a, AltForm::Both).unwrap();
        assert!(!report.passed());
        assert_eq!(report.verdicts[0].failing_tuples(), report.verdicts[1].failing_tuples());
    }

    #[test]
    fn residual_forms_are_negatives() {
        let star = fixtures::example_4_1_star();
        let mut b = star.binary().unwrap().clone();
        b.set(0, 2, SuperVector::basis(3, 1));
        let a = SuperAlgebraData::binary_only(star.grading().clone(), b).unwrap();
        let report = check_right_hom_alternative(&a, AltForm::Both).unwrap();
        for (c21, c22) in report.verdicts[0].counterexamples.iter().zip(&report.verdicts[1].counterexamples) {
            assert_eq!(c21.residual, -&c22.residual);
        }
    }

    #[test]
    fn bol_fixtures() {
        assert!(check_bol_super(&fixtures::example_3_1()).unwrap().passed());
        assert!(check_bol_super(&fixtures::example_4_1_bol()).unwrap().passed());
        let printed = check_bol_super(&fixtures::example_3_1_printed()).unwrap();
        let sb1 = printed.verdict(AxiomId::Sb(1)).unwrap();
        assert_eq!(sb1.failing_tuples(), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn twist_guards() {
        let hb = fixtures::example_4_1_hom_bol(int(2), int(0)).unwrap();
        assert_eq!(check_bol_super(&hb).unwrap_err(), Error::UnexpectedTwist);
        assert_eq!(check_lie_supertriple(&fixtures::example_4_1_bol()).unwrap_err(), Error::NonzeroBinary);
        let no_ternary = fixtures::example_4_1_star();
        assert_eq!(check_bol_super(&no_ternary).unwrap_err(), Error::MissingTernary);
    }

    #[test]
    fn zero_odd_part_uses_plain_signs() {
        // A two-dimensional even algebra with a Lie bracket and zero ternary part.
        let g = Grading::from_bits(&[0, 0]).unwrap();
        let mut b = BinaryStructure::zero(2);
        b.set(0, 1, SuperVector::basis(2, 1));
        b.set(1, 0, -&SuperVector::basis(2, 1));
        let a = SuperAlgebraData::new(g, Some(b), Some(TernaryStructure::zero(2)), None).unwrap();
        let report = check_hom_bol_super(&a).unwrap();
        // SB4 needs [[u,v],[x,y]] = 0, which holds in this two-dimensional solvable algebra.
        assert!(report.passed(), "{}", report.render(a.grading()));
    }

    #[test]
    fn symmetric_ternary_breaks_skew_symmetry() {
        let g = Grading::from_bits(&[0, 0]).unwrap();
        let t = TernaryStructure::from_fn(2, |_, _, _| SuperVector::basis(2, 0));
        let a = SuperAlgebraData::new(g, None, Some(t), None).unwrap();
        let report = check_lie_supertriple(&a).unwrap();
        assert!(!report.verdict(AxiomId::Lsts(2)).unwrap().passed());
    }

    #[test]
    fn residual_rejects_mixed_arguments() {
        let a = fixtures::example_4_1_bol();
        let mixed = &a.basis(0) + &a.basis(1);
        let err = axiom_residual(&a, AxiomId::Sb(1), &[mixed, a.basis(1)]).unwrap_err();
        assert_eq!(err, Error::NonHomogeneous);
        assert!(axiom_residual(&a, AxiomId::Sb(1), &[a.basis(0)]).is_err());
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
