use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superbol::dsl::{self, parse_identity, random_identity, DslCheckRequest};
use superbol::grading::Parity;
use superbol::identities::{axiom_residual, check_axioms, check_right_hom_alternative, AltForm};
use superbol::products::{super_jordan, supercommutator};
use superbol::regression::random_binary_algebra;
use superbol::scalar::{frac, int};
use superbol::vector::degree_of;
use superbol::{fixtures, AxiomId, GradedLinearMap, Grading, ScaleConvention, Scalar, SuperAlgebraData, SuperVector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..4).prop_map(|(n, d)| frac(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = SuperVector> {
    proptest::collection::vec(scalar(), dim).prop_map(SuperVector::from_coeffs)
}

fn fixture_algebras() -> Vec<SuperAlgebraData> {
    vec![
        fixtures::example_3_1(),
        fixtures::example_3_1_printed(),
        fixtures::example_4_1_bol(),
        fixtures::example_4_1_hom_bol(int(2), int(3)).unwrap(),
        fixtures::example_4_1_hom_bol(frac(1, 2), int(0)).unwrap(),
    ]
}

/// A homogeneous vector of the given degree, or `None` if that block is empty.
fn homogeneous(g: &Grading, parity: Parity, coeffs: &[Scalar]) -> Option<SuperVector> {
    let mut v = SuperVector::zero(g.dim());
    let mut any = false;
    for (i, c) in g.indices_of(parity).zip(coeffs) {
        v.add_scaled(c, &SuperVector::basis(g.dim(), i));
        any = true;
    }
    any.then_some(v)
}

fn even_map(g: &Grading, entries: &[i64]) -> GradedLinearMap {
    let dim = g.dim();
    let rows = (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| if g.degree(r) == g.degree(c) { int(entries[r * dim + c]) } else { int(0) })
                .collect()
        })
        .collect();
    GradedLinearMap::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binary_products_are_bilinear(seed in 0u64..10_000, x in vector(3), y in vector(3), z in vector(3), c in scalar()) {
        let a = fixtures::mutate(&fixtures::example_4_1_bol(), seed);
        let b = a.binary().unwrap();
        let mut xy = x.clone();
        xy.add_scaled(&c, &y);
        let mut expected = b.eval(&x, &z).unwrap();
        expected.add_scaled(&c, &b.eval(&y, &z).unwrap());
        prop_assert_eq!(b.eval(&xy, &z).unwrap(), expected);
        let mut expected = b.eval(&z, &x).unwrap();
        expected.add_scaled(&c, &b.eval(&z, &y).unwrap());
        prop_assert_eq!(b.eval(&z, &xy).unwrap(), expected);
    }

    #[test]
    fn ternary_products_are_linear_in_the_middle(seed in 0u64..10_000, x in vector(3), y in vector(3), z in vector(3), w in vector(3), c in scalar()) {
        let a = fixtures::mutate(&fixtures::example_3_1(), seed);
        let t = a.ternary().unwrap();
        let mut yw = y.clone();
        yw.add_scaled(&c, &w);
        let mut expected = t.eval(&x, &y, &z).unwrap();
        expected.add_scaled(&c, &t.eval(&x, &w, &z).unwrap());
        prop_assert_eq!(t.eval(&x, &yw, &z).unwrap(), expected);
    }

    #[test]
    fn map_powers_add(entries in proptest::collection::vec(-2i64..3, 9), m in 0u32..4, n in 0u32..4) {
        let g = fixtures::ijk_grading();
        let f = even_map(&g, &entries);
        prop_assert_eq!(f.power(m + n), f.power(m).compose(&f.power(n)).unwrap());
        prop_assert!(f.power(0).is_identity());
    }

    #[test]
    fn even_maps_preserve_degree(entries in proptest::collection::vec(-3i64..4, 9), coeffs in proptest::collection::vec(scalar(), 2), odd in any::<bool>()) {
        let g = fixtures::ijk_grading();
        let f = even_map(&g, &entries);
        prop_assert!(f.is_even(&g));
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let v = homogeneous(&g, parity, &coeffs).unwrap();
        let image = f.apply(&v).unwrap();
        if !image.is_zero() {
            prop_assert_eq!(degree_of(&image, &g).unwrap(), parity);
        }
    }

    #[test]
    fn derived_products_scale_linearly(seed in 0u64..10_000, lambda in scalar().prop_filter("nonzero", |l| *l != int(0))) {
        let star = fixtures::mutate(&fixtures::example_4_1_star(), seed);
        let c = ScaleConvention::new(lambda.clone()).unwrap();
        let unit = ScaleConvention::unit();
        let minus = supercommutator(&star, &c).unwrap();
        let plus = super_jordan(&star, &c).unwrap();
        prop_assert_eq!(minus.binary().unwrap(), &supercommutator(&star, &unit).unwrap().binary().unwrap().scaled(&lambda));
        prop_assert_eq!(plus.binary().unwrap(), &super_jordan(&star, &unit).unwrap().binary().unwrap().scaled(&lambda));
    }

    #[test]
    fn rescaling_preserves_bol_verdicts(seed in 0u64..10_000, which in 0usize..5, lambda in scalar().prop_filter("nonzero", |l| *l != int(0))) {
        let a = fixtures::mutate(&fixture_algebras()[which], seed);
        let base = check_axioms(&a, "hom-bol", &AxiomId::HOM_BOL).unwrap();
        let scaled = check_axioms(&a.rescaled(&lambda), "hom-bol", &AxiomId::HOM_BOL).unwrap();
        prop_assert_eq!(base.verdict_set(), scaled.verdict_set());
    }

    #[test]
    fn residuals_are_multilinear(seed in 0u64..10_000, which in 0usize..5, axiom in 0usize..7, coeffs in proptest::collection::vec(scalar(), 20), degrees in proptest::collection::vec(any::<bool>(), 5)) {
        let a = fixtures::mutate(&fixture_algebras()[which], seed);
        let axiom = AxiomId::HOM_BOL[axiom];
        let g = a.grading().clone();
        let parity = |odd: bool| if odd { Parity::Odd } else { Parity::Even };
        let args: Vec<SuperVector> = (0..axiom.arity())
            .map(|n| homogeneous(&g, parity(degrees[n]), &coeffs[4 * n..4 * n + 2]).unwrap())
            .collect();
        let total = axiom_residual(&a, axiom, &args).unwrap();
        let mut expected = SuperVector::zero(g.dim());
        let first: Vec<usize> = g.indices_of(parity(degrees[0])).collect();
        for (i, c) in first.iter().zip(&coeffs[0..2]) {
            let mut split = args.clone();
            split[0] = SuperVector::basis(g.dim(), *i);
            expected.add_scaled(c, &axiom_residual(&a, axiom, &split).unwrap());
        }
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn right_alternative_forms_agree(seed in 0u64..1_000_000, index in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_binary_algebra(&mut rng, index);
        let r21 = check_right_hom_alternative(&a, AltForm::Eq21).unwrap();
        let r22 = check_right_hom_alternative(&a, AltForm::Eq22).unwrap();
        prop_assert_eq!(r21.passed(), r22.passed());
        prop_assert_eq!(r21.verdicts[0].failing_tuples(), r22.verdicts[0].failing_tuples());
        prop_assert!(check_right_hom_alternative(&a, AltForm::Both).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_identities_parse_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let id = random_identity(&mut rng, 4);
        let text = dsl::print_identity(&id);
        prop_assert_eq!(parse_identity(&text).unwrap(), id);
    }

    #[test]
    fn signs_depend_only_on_degrees(monomials in proptest::collection::vec(proptest::collection::vec(0usize..3, 1..3), 1..4), x in 0usize..3, z in 0usize..3) {
        let names = ["x", "y", "z"];
        let poly: Vec<String> = monomials
            .iter()
            .map(|m| m.iter().map(|&v| format!("|{}|", names[v])).collect::<Vec<_>>().join("*"))
            .collect();
        let text = format!("(-1)^({}) * x + 0 * y + 0 * z == 0", poly.join(" + "));
        let req = DslCheckRequest::new(parse_identity(&text).unwrap(), fixtures::example_4_1_bol()).unwrap();
        // j and k are both odd
        let with_j = dsl::evaluate_identity(&req, &[x, 1, z]).unwrap();
        let with_k = dsl::evaluate_identity(&req, &[x, 2, z]).unwrap();
        prop_assert_eq!(with_j, with_k);
    }
}
