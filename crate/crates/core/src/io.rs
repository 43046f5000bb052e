//! JSON files for algebras, maps and check reports.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`). Product tables are
//! sparse: only nonzero products are listed and each value maps an output
//! basis index to its coefficient.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::grading::Grading;
use crate::map::GradedLinearMap;
use crate::report::CheckReport;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::tensor::{BinaryStructure, TernaryStructure};
use crate::vector::SuperVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub args: Vec<usize>,
    pub value: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dimension: usize,
    pub degrees: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binary: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ternary: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
}

/// A graded linear map, stored as a dense row-major matrix whose column `j`
/// holds the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub name: String,
    pub dimension: usize,
    pub matrix: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub tuple: Vec<String>,
    pub residual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub axiom: String,
    pub passed: bool,
    pub counterexamples: Vec<CounterexampleRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub suite: String,
    pub algebra: String,
    pub passed: bool,
    pub verdicts: Vec<VerdictRecord>,
}

fn scalar(text: &str) -> Result<Scalar, Error> {
    parse_scalar(text)
}

fn sparse(v: &SuperVector) -> BTreeMap<usize, String> {
    v.support().map(|(k, c)| (k, format_scalar(c))).collect()
}

fn dense(dim: usize, value: &BTreeMap<usize, String>) -> Result<SuperVector, Error> {
    let mut coeffs = vec![Scalar::zero(); dim];
    for (&k, c) in value {
        if k >= dim {
            return Err(Error::Format(format!("output index {k} is not below the dimension {dim}")));
        }
        coeffs[k] = scalar(c)?;
    }
    Ok(SuperVector::from_coeffs(coeffs))
}

fn check_args(entry: &ProductEntry, arity: usize, dim: usize, seen: &mut Vec<Vec<usize>>) -> Result<(), Error> {
    if entry.args.len() != arity {
        return Err(Error::Format(format!("product arguments {:?} should have length {arity}", entry.args)));
    }
    if let Some(&bad) = entry.args.iter().find(|&&i| i >= dim) {
        return Err(Error::Format(format!("argument index {bad} is not below the dimension {dim}")));
    }
    if seen.contains(&entry.args) {
        return Err(Error::Format(format!("product arguments {:?} listed twice", entry.args)));
    }
    seen.push(entry.args.clone());
    Ok(())
}

fn flat_matrix(map: &GradedLinearMap) -> Vec<String> {
    map.rows().flat_map(|row| row.iter().map(format_scalar)).collect()
}

fn matrix_from_flat(dim: usize, flat: &[String]) -> Result<GradedLinearMap, Error> {
    if flat.len() != dim * dim {
        return Err(Error::Format(format!("matrix needs {} entries, found {}", dim * dim, flat.len())));
    }
    let values = flat.iter().map(|s| scalar(s)).collect::<Result<Vec<_>, _>>()?;
    GradedLinearMap::from_rows(values.chunks(dim).map(<[Scalar]>::to_vec).collect())
}

impl AlgebraFile {
    pub fn from_algebra(name: &str, a: &SuperAlgebraData) -> Self {
        let g = a.grading();
        AlgebraFile {
            name: name.to_string(),
            dimension: a.dim(),
            degrees: g.degrees().iter().map(|p| p.bit() as u8).collect(),
            basis_labels: g.labels().map(<[String]>::to_vec),
            binary: a.binary().map(|b| {
                b.nonzero().map(|(i, j, v)| ProductEntry { args: vec![i, j], value: sparse(v) }).collect()
            }),
            ternary: a.ternary().map(|t| {
                t.nonzero().map(|(i, j, l, v)| ProductEntry { args: vec![i, j, l], value: sparse(v) }).collect()
            }),
            alpha: a.twist().map(flat_matrix),
        }
    }

    /// Validates indices, rationals, the grading and the twist.
    pub fn to_algebra(&self) -> Result<SuperAlgebraData, Error> {
        let dim = self.dimension;
        if self.degrees.len() != dim {
            return Err(Error::Format(format!("{} degrees given for dimension {dim}", self.degrees.len())));
        }
        let mut grading = Grading::from_bits(&self.degrees)?;
        if let Some(labels) = &self.basis_labels {
            grading = grading.with_labels(labels.clone())?;
        }
        let binary = match &self.binary {
            None => None,
            Some(entries) => {
                let mut b = BinaryStructure::zero(dim);
                let mut seen = Vec::new();
                for e in entries {
                    check_args(e, 2, dim, &mut seen)?;
                    b.set(e.args[0], e.args[1], dense(dim, &e.value)?);
                }
                Some(b)
            }
        };
        let ternary = match &self.ternary {
            None => None,
            Some(entries) => {
                let mut t = TernaryStructure::zero(dim);
                let mut seen = Vec::new();
                for e in entries {
                    check_args(e, 3, dim, &mut seen)?;
                    t.set(e.args[0], e.args[1], e.args[2], dense(dim, &e.value)?);
                }
                Some(t)
            }
        };
        let twist = self.alpha.as_ref().map(|flat| matrix_from_flat(dim, flat)).transpose()?;
        SuperAlgebraData::new(grading, binary, ternary, twist)
    }
}

impl MorphismFile {
    pub fn from_map(name: &str, map: &GradedLinearMap) -> Self {
        MorphismFile { name: name.to_string(), dimension: map.dim(), matrix: flat_matrix(map) }
    }

    pub fn to_map(&self) -> Result<GradedLinearMap, Error> {
        matrix_from_flat(self.dimension, &self.matrix)
    }
}

impl ReportFile {
    pub fn from_report(algebra: &str, report: &CheckReport, grading: &Grading) -> Self {
        ReportFile {
            suite: report.suite.clone(),
            algebra: algebra.to_string(),
            passed: report.passed(),
            verdicts: report
                .verdicts
                .iter()
                .map(|v| VerdictRecord {
                    axiom: v.name.clone(),
                    passed: v.passed(),
                    counterexamples: v
                        .counterexamples
                        .iter()
                        .map(|c| CounterexampleRecord {
                            tuple: c.tuple.iter().map(|&i| grading.label(i)).collect(),
                            residual: c.residual.coeffs().iter().map(format_scalar).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

/// Canonical text of an algebra file: pretty-printed JSON with a final newline.
pub fn algebra_to_string(name: &str, a: &SuperAlgebraData) -> String {
    to_json(&AlgebraFile::from_algebra(name, a))
}

/// Returns the file's name field and the validated algebra.
pub fn algebra_from_str(text: &str) -> Result<(String, SuperAlgebraData), Error> {
    let file: AlgebraFile = from_json(text)?;
    let a = file.to_algebra()?;
    Ok((file.name, a))
}

pub fn morphism_to_string(name: &str, map: &GradedLinearMap) -> String {
    to_json(&MorphismFile::from_map(name, map))
}

pub fn morphism_from_str(text: &str) -> Result<(String, GradedLinearMap), Error> {
    let file: MorphismFile = from_json(text)?;
    let map = file.to_map()?;
    Ok((file.name, map))
}

pub fn report_to_string(algebra: &str, report: &CheckReport, grading: &Grading) -> String {
    to_json(&ReportFile::from_report(algebra, report, grading))
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<(String, SuperAlgebraData), Error> {
    algebra_from_str(&read(path.as_ref())?)
}

pub fn load_morphism(path: impl AsRef<Path>) -> Result<(String, GradedLinearMap), Error> {
    morphism_from_str(&read(path.as_ref())?)
}

pub fn save_algebra(path: impl AsRef<Path>, name: &str, a: &SuperAlgebraData) -> Result<(), Error> {
    let path = path.as_ref();
    fs::write(path, algebra_to_string(name, a)).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn save_morphism(path: impl AsRef<Path>, name: &str, map: &GradedLinearMap) -> Result<(), Error> {
    let path = path.as_ref();
    fs::write(path, morphism_to_string(name, map)).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn star_file_lists_only_nonzero_products() {
        let text = algebra_to_string("example-4.1-star", &fixtures::example_4_1_star());
        let file: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file.binary.as_ref().unwrap().len(), 4);
        assert!(file.ternary.is_none() && file.alpha.is_none());
        let jk = &file.binary.unwrap()[2];
        assert_eq!(jk.args, vec![1, 2]);
        assert_eq!(jk.value, BTreeMap::from([(0, "2".to_string())]));
    }

    #[test]
    fn round_trips() {
        let algebras = [
            fixtures::example_3_1(),
            fixtures::example_4_1_bol(),
            fixtures::example_4_1_hom_bol(int(2), int(3)).unwrap(),
            fixtures::zero(&[0, 1]).unwrap(),
        ];
        for a in algebras {
            let text = algebra_to_string("x", &a);
            let (name, back) = algebra_from_str(&text).unwrap();
            assert_eq!((name.as_str(), &back), ("x", &a));
            assert_eq!(algebra_to_string("x", &back), text);
        }
        let beta = fixtures::beta(int(2), int(3)).unwrap();
        let (_, back) = morphism_from_str(&morphism_to_string("beta", &beta)).unwrap();
        assert_eq!(back, beta);
    }

    #[test]
    fn rejects_malformed_files() {
        let bad = [
            r#"{"name":"a","dimension":2,"degrees":[0]}"#,
            r#"{"name":"a","dimension":1,"degrees":[2]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"binary":[{"args":[0,1],"value":{}}]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"binary":[{"args":[0],"value":{}}]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"binary":[{"args":[0,0],"value":{"0":"1.5"}}]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"binary":[{"args":[0,0],"value":{"0":"1/0"}}]}"#,
            r#"{"name":"a","dimension":2,"degrees":[0,1],"binary":[{"args":[0,0],"value":{"1":"1"}}]}"#,
            r#"{"name":"a","dimension":2,"degrees":[0,1],"alpha":["0","1","1","0"]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"alpha":["1","0"]}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"extra":1}"#,
            r#"{"name":"a","dimension":1,"degrees":[0],"binary":[{"args":[0,0],"value":{}},{"args":[0,0],"value":{}}]}"#,
            "not json",
        ];
        for text in bad {
            assert!(algebra_from_str(text).is_err(), "{text}");
        }
    }

    #[test]
    fn report_uses_labels() {
        let a = fixtures::example_3_1_printed();
        let report = crate::identities::check_bol_super(&a).unwrap();
        let file = ReportFile::from_report("p", &report, a.grading());
        assert!(!file.passed);
        let sb1 = &file.verdicts[0];
        assert_eq!(sb1.axiom, "SB1");
        let tuples: Vec<&Vec<String>> = sb1.counterexamples.iter().map(|c| &c.tuple).collect();
        assert_eq!(tuples, [&vec!["i".to_string(), "k".to_string()], &vec!["k".to_string(), "i".to_string()]]);
        assert_eq!(sb1.counterexamples[0].residual, ["0", "0", "2"]);
    }
}
