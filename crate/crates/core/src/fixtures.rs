//! Built-in algebras: the three-dimensional Bol example in two sign variants,
//! every stage of the right alternative example, the twisting maps `β(a,b)`
//! and zero algebras. Also a generator of single-cell mutations.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::grading::{basis_tuples, Grading, Parity};
use crate::map::GradedLinearMap;
use crate::scalar::{format_scalar, int, parse_scalar, Scalar};
use crate::tensor::{BinaryStructure, TernaryStructure};
use crate::vector::SuperVector;

const I: usize = 0;
const J: usize = 1;
const K: usize = 2;

fn labelled(bits: &[u8]) -> Grading {
    Grading::from_bits(bits)
        .and_then(|g| g.with_labels(vec!["i".into(), "j".into(), "k".into()]))
        .expect("static grading")
}

/// Example 4.1's superspace: `i` even, `j, k` odd.
pub fn ijk_grading() -> Grading {
    labelled(&[0, 1, 1])
}

/// Example 3.1's superspace: `i, j` even, `k` odd.
pub fn example_3_1_grading() -> Grading {
    labelled(&[0, 0, 1])
}

fn e(k: usize) -> SuperVector {
    SuperVector::basis(3, k)
}

fn ce(c: Scalar, k: usize) -> SuperVector {
    e(k).scale(&c)
}

fn example_3_1_with(k_i: i64) -> SuperAlgebraData {
    let mut b = BinaryStructure::zero(3);
    b.set(I, J, e(J));
    b.set(I, K, e(K));
    b.set(J, I, ce(int(-1), J));
    b.set(K, I, ce(int(k_i), K));
    b.set(K, K, e(J));
    let mut t = TernaryStructure::zero(3);
    t.set(I, J, I, ce(int(-1), J));
    t.set(I, K, I, ce(int(-1), K));
    t.set(J, I, I, e(J));
    t.set(K, I, I, e(K));
    SuperAlgebraData::new(example_3_1_grading(), Some(b), Some(t), None).expect("static fixture")
}

/// Example 3.1 with `[k,i] = -k`.
pub fn example_3_1() -> SuperAlgebraData {
    example_3_1_with(-1)
}

/// Example 3.1 with `[k,i] = k`.
pub fn example_3_1_printed() -> SuperAlgebraData {
    example_3_1_with(1)
}

/// The right alternative superalgebra `(A, *)` of Example 4.1.
pub fn example_4_1_star() -> SuperAlgebraData {
    let mut b = BinaryStructure::zero(3);
    b.set(I, J, e(K));
    b.set(J, I, e(K));
    b.set(J, K, ce(int(2), I));
    b.set(K, J, ce(int(4), I));
    SuperAlgebraData::binary_only(ijk_grading(), b).expect("static fixture")
}

/// The Example 4.1 twisted table with `s₁ = 6a` on brackets and `s₂ = 4a²`
/// on triples; `a = 1` gives the untwisted Bol table.
fn example_4_1_table(bracket: &Scalar, triple: &Scalar) -> (BinaryStructure, TernaryStructure) {
    let mut b = BinaryStructure::zero(3);
    b.set(J, K, ce(int(6) * bracket, I));
    b.set(K, J, ce(int(6) * bracket, I));
    let mut t = TernaryStructure::zero(3);
    t.set(I, J, J, ce(int(4) * triple, I));
    t.set(J, I, J, ce(int(-4) * triple, I));
    t.set(J, J, I, ce(int(-8) * triple, I));
    t.set(J, J, K, ce(int(-8) * triple, K));
    t.set(J, K, J, ce(int(4) * triple, K));
    t.set(K, J, J, ce(int(4) * triple, K));
    (b, t)
}

/// The Bol superalgebra derived from [`example_4_1_star`], as tabulated.
pub fn example_4_1_bol() -> SuperAlgebraData {
    let (b, t) = example_4_1_table(&int(1), &int(1));
    SuperAlgebraData::new(ijk_grading(), Some(b), Some(t), None).expect("static fixture")
}

/// `β(i) = a·i, β(j) = j + b·k, β(k) = a·k`, with `a ≠ 0`.
pub fn beta(a: Scalar, b: Scalar) -> Result<GradedLinearMap, Error> {
    if a.is_zero() {
        return Err(Error::InvalidParam("a must be nonzero".into()));
    }
    GradedLinearMap::from_images(vec![e(I).scale(&a), &e(J) + &e(K).scale(&b), e(K).scale(&a)])
}

/// The tabulated Hom-Bol superalgebra `A_β`: brackets `6a·i`, triples `±4a²`,
/// `±8a²` times `i` or `k`, twist `β(a,b)`.
pub fn example_4_1_hom_bol(a: Scalar, b: Scalar) -> Result<SuperAlgebraData, Error> {
    let twist = beta(a.clone(), b)?;
    let (bracket, triple) = example_4_1_table(&a, &(&a * &a));
    SuperAlgebraData::new(ijk_grading(), Some(bracket), Some(triple), Some(twist))
}

/// Zero binary and ternary products on the given degrees.
pub fn zero(degrees: &[u8]) -> Result<SuperAlgebraData, Error> {
    Ok(SuperAlgebraData::zero(Grading::from_bits(degrees)?))
}

/// Catalogue of named fixtures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureId {
    Example31Printed,
    Example31,
    Example41Star,
    Example41Bol,
    Example41Beta { a: Scalar, b: Scalar },
    Example41HomBol { a: Scalar, b: Scalar },
    Zero { degrees: Vec<u8> },
}

/// A fixture is either an algebra or, for `example-4.1-beta`, a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Algebra(SuperAlgebraData),
    Map(GradedLinearMap),
}

impl FixtureId {
    /// Names accepted by [`FixtureId::parse`], with their parameters.
    pub const CATALOGUE: [(&'static str, &'static str); 7] = [
        ("example-3.1-printed", "Example 3.1 Bol superalgebra with [k,i] = k"),
        ("example-3.1", "Example 3.1 Bol superalgebra with [k,i] = -k"),
        ("example-4.1-star", "Example 4.1 right alternative superalgebra (A, *)"),
        ("example-4.1-bol", "Example 4.1 Bol superalgebra of supercommutators"),
        ("example-4.1-beta", "Example 4.1 even map beta(a, b); params a (nonzero), b"),
        ("example-4.1-hom-bol", "Example 4.1 Yau-twisted Hom-Bol table; params a (nonzero), b"),
        ("zero", "zero products; param degrees, e.g. degrees=0,1,1"),
    ];

    /// Parses a fixture name and `key=value` parameters.
    pub fn parse(name: &str, params: &[(String, String)]) -> Result<Self, Error> {
        let lookup = |key: &str, default: Option<Scalar>| -> Result<Scalar, Error> {
            match params.iter().find(|(k, _)| k == key) {
                Some((_, v)) => parse_scalar(v).map_err(|_| Error::InvalidParam(format!("{key}={v} is not a rational"))),
                None => default.ok_or_else(|| Error::InvalidParam(format!("missing parameter {key}"))),
            }
        };
        for (key, _) in params {
            let allowed: &[&str] = match name {
                "example-4.1-beta" | "example-4.1-hom-bol" => &["a", "b"],
                "zero" => &["degrees"],
                _ => &[],
            };
            if !allowed.contains(&key.as_str()) {
                return Err(Error::InvalidParam(format!("{name} does not take parameter {key}")));
            }
        }
        let id = match name {
            "example-3.1-printed" => FixtureId::Example31Printed,
            "example-3.1" => FixtureId::Example31,
            "example-4.1-star" => FixtureId::Example41Star,
            "example-4.1-bol" => FixtureId::Example41Bol,
            "example-4.1-beta" => FixtureId::Example41Beta { a: lookup("a", Some(int(1)))?, b: lookup("b", Some(int(0)))? },
            "example-4.1-hom-bol" => {
                FixtureId::Example41HomBol { a: lookup("a", Some(int(1)))?, b: lookup("b", Some(int(0)))? }
            }
            "zero" => {
                let raw = params
                    .iter()
                    .find(|(k, _)| k == "degrees")
                    .map(|(_, v)| v.as_str())
                    .ok_or_else(|| Error::InvalidParam("missing parameter degrees".into()))?;
                let degrees = raw
                    .split(',')
                    .map(|d| match d.trim() {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        other => Err(Error::InvalidParam(format!("degree {other:?} is not 0 or 1"))),
                    })
                    .collect::<Result<Vec<u8>, Error>>()?;
                FixtureId::Zero { degrees }
            }
            other => return Err(Error::InvalidParam(format!("unknown fixture {other:?}"))),
        };
        if let FixtureId::Example41Beta { a, .. } | FixtureId::Example41HomBol { a, .. } = &id {
            if a.is_zero() {
                return Err(Error::InvalidParam("a must be nonzero".into()));
            }
        }
        Ok(id)
    }

    pub fn build(&self) -> Result<Fixture, Error> {
        Ok(match self {
            FixtureId::Example31Printed => Fixture::Algebra(example_3_1_printed()),
            FixtureId::Example31 => Fixture::Algebra(example_3_1()),
            FixtureId::Example41Star => Fixture::Algebra(example_4_1_star()),
            FixtureId::Example41Bol => Fixture::Algebra(example_4_1_bol()),
            FixtureId::Example41Beta { a, b } => Fixture::Map(beta(a.clone(), b.clone())?),
            FixtureId::Example41HomBol { a, b } => Fixture::Algebra(example_4_1_hom_bol(a.clone(), b.clone())?),
            FixtureId::Zero { degrees } => Fixture::Algebra(zero(degrees)?),
        })
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Example31Printed => write!(f, "example-3.1-printed"),
            FixtureId::Example31 => write!(f, "example-3.1"),
            FixtureId::Example41Star => write!(f, "example-4.1-star"),
            FixtureId::Example41Bol => write!(f, "example-4.1-bol"),
            FixtureId::Example41Beta { a, b } => {
                write!(f, "example-4.1-beta(a={}, b={})", format_scalar(a), format_scalar(b))
            }
            FixtureId::Example41HomBol { a, b } => {
                write!(f, "example-4.1-hom-bol(a={}, b={})", format_scalar(a), format_scalar(b))
            }
            FixtureId::Zero { degrees } => {
                let d: Vec<String> = degrees.iter().map(u8::to_string).collect();
                write!(f, "zero({})", d.join(","))
            }
        }
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FixtureId::parse(s, &[])
    }
}

/// A structure-constant cell: product arguments and output coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Binary { args: [usize; 2], out: usize },
    Ternary { args: [usize; 3], out: usize },
}

/// Cells whose output degree matches the degree of their arguments.
pub fn compatible_cells(a: &SuperAlgebraData) -> Vec<Cell> {
    let g = a.grading();
    let dim = a.dim();
    let sum = |args: &[usize]| args.iter().fold(Parity::Even, |acc, &i| acc + g.degree(i));
    let mut cells = Vec::new();
    if a.binary().is_some() {
        for t in basis_tuples(dim, 2) {
            for out in g.indices_of(sum(&t)) {
                cells.push(Cell::Binary { args: [t[0], t[1]], out });
            }
        }
    }
    if a.ternary().is_some() {
        for t in basis_tuples(dim, 3) {
            for out in g.indices_of(sum(&t)) {
                cells.push(Cell::Ternary { args: [t[0], t[1], t[2]], out });
            }
        }
    }
    cells
}

/// Changes exactly one grading-compatible structure constant to a different
/// value in `[-5, 5]`, chosen deterministically from `seed`.
///
/// An algebra without products is returned unchanged.
pub fn mutate(a: &SuperAlgebraData, seed: u64) -> SuperAlgebraData {
    let cells = compatible_cells(a);
    if cells.is_empty() {
        return a.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cell = &cells[rng.gen_range(0..cells.len())];
    let current = match cell {
        Cell::Binary { args, out } => a.binary().expect("cell exists").get(args[0], args[1]).coeff(*out).clone(),
        Cell::Ternary { args, out } => {
            a.ternary().expect("cell exists").get(args[0], args[1], args[2]).coeff(*out).clone()
        }
    };
    let fresh = loop {
        let candidate = int(rng.gen_range(-5..=5));
        if candidate != current {
            break candidate;
        }
    };
    match cell {
        Cell::Binary { args, out } => {
            let mut b = a.binary().expect("cell exists").clone();
            b.set_entry(args[0], args[1], *out, fresh);
            a.clone().with_binary(Some(b))
        }
        Cell::Ternary { args, out } => {
            let mut t = a.ternary().expect("cell exists").clone();
            t.set_entry(args[0], args[1], args[2], *out, fresh);
            a.clone().with_ternary(Some(t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_grading_compat;
    use crate::scalar::frac;

    fn differing_cells(x: &SuperAlgebraData, y: &SuperAlgebraData) -> usize {
        let mut n = 0;
        for cell in compatible_cells(x) {
            let (p, q) = match &cell {
                Cell::Binary { args, out } => (
                    x.binary().unwrap().get(args[0], args[1]).coeff(*out).clone(),
                    y.binary().unwrap().get(args[0], args[1]).coeff(*out).clone(),
                ),
                Cell::Ternary { args, out } => (
                    x.ternary().unwrap().get(args[0], args[1], args[2]).coeff(*out).clone(),
                    y.ternary().unwrap().get(args[0], args[1], args[2]).coeff(*out).clone(),
                ),
            };
            if p != q {
                n += 1;
            }
        }
        n
    }

    #[test]
    fn star_table() {
        let star = example_4_1_star();
        let b = star.binary().unwrap();
        let listed: Vec<(usize, usize, String)> =
            b.nonzero().map(|(i, j, v)| (i, j, v.display(star.grading()).to_string())).collect();
        assert_eq!(
            listed,
            vec![(0, 1, "k".into()), (1, 0, "k".into()), (1, 2, "2i".into()), (2, 1, "4i".into())]
        );
        assert_eq!(star.grading().degrees(), &[Parity::Even, Parity::Odd, Parity::Odd]);
    }

    #[test]
    fn hom_bol_at_identity_parameters() {
        let hb = example_4_1_hom_bol(int(1), int(0)).unwrap();
        assert!(hb.twist().is_none());
        assert!(hb.same_structure(&example_4_1_bol()));
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(beta(int(0), int(1)).is_err());
        let params = vec![("a".to_string(), "0".to_string())];
        let err = FixtureId::parse("example-4.1-beta", &params).unwrap_err();
        assert_eq!(err.to_string(), "invalid parameter: a must be nonzero");
    }

    #[test]
    fn parse_catalogue() {
        for (name, _) in FixtureId::CATALOGUE {
            let params = if name == "zero" { vec![("degrees".to_string(), "0,1".to_string())] } else { vec![] };
            assert!(FixtureId::parse(name, &params).unwrap().build().is_ok(), "{name}");
        }
        let params = vec![("a".to_string(), "1/2".to_string()), ("b".to_string(), "-2/3".to_string())];
        let id = FixtureId::parse("example-4.1-hom-bol", &params).unwrap();
        assert_eq!(id, FixtureId::Example41HomBol { a: frac(1, 2), b: frac(-2, 3) });
        assert!(FixtureId::parse("example-4.1-star", &params).is_err());
        assert!("nope".parse::<FixtureId>().is_err());
    }

    #[test]
    fn mutation_changes_one_cell() {
        let star = example_4_1_star();
        for seed in 0..20 {
            let m = mutate(&star, seed);
            assert_eq!(differing_cells(&star, &m), 1, "seed {seed}");
            assert!(check_grading_compat(&m).passed());
            assert_eq!(m, mutate(&star, seed));
        }
    }

    #[test]
    fn mutation_of_empty_algebra_is_identity() {
        let g = Grading::from_bits(&[0]).unwrap();
        let a = SuperAlgebraData::new(g, None, None, None).unwrap();
        assert_eq!(mutate(&a, 3), a);
    }
}
