//! Verdicts of exhaustive axiom checks.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::grading::Grading;
use crate::vector::SuperVector;

/// Stable identifiers for every checked identity.
///
/// The Bol axioms are numbered by position (`SB1`..`SB5`, `SHB1`..`SHB7`);
/// the triple-system suites reuse the Bol numbering of the axiom they mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    /// `as(x,y,z) = -(-1)^{|y||z|} as(x,z,y)`
    RightAlt21,
    /// The expanded form of `RightAlt21`.
    RightAlt22,
    /// `as(x,y,z) = -(-1)^{|x||y|} as(y,x,z)`
    LeftAlt,
    Sb(u8),
    Shb(u8),
    /// Lie supertriple system axiom, named after the Bol axiom it mirrors (2, 3 or 5).
    Lsts(u8),
    /// Hom-Lie supertriple system axiom, named after the Hom-Bol axiom it mirrors (2, 4, 5 or 7).
    Hlsts(u8),
    PlusSupercomm,
    MultBinary,
    MultTernary,
    GradeBinary,
    GradeTernary,
    MorphBinary,
    MorphTernary,
    MorphTwist,
}

impl AxiomId {
    pub const BOL: [AxiomId; 5] = [AxiomId::Sb(1), AxiomId::Sb(2), AxiomId::Sb(3), AxiomId::Sb(4), AxiomId::Sb(5)];
    pub const HOM_BOL: [AxiomId; 7] = [
        AxiomId::Shb(1),
        AxiomId::Shb(2),
        AxiomId::Shb(3),
        AxiomId::Shb(4),
        AxiomId::Shb(5),
        AxiomId::Shb(6),
        AxiomId::Shb(7),
    ];
    pub const LSTS: [AxiomId; 3] = [AxiomId::Lsts(2), AxiomId::Lsts(3), AxiomId::Lsts(5)];
    pub const HLSTS: [AxiomId; 4] = [AxiomId::Hlsts(2), AxiomId::Hlsts(4), AxiomId::Hlsts(5), AxiomId::Hlsts(7)];

    /// Number of quantified variables.
    pub fn arity(self) -> usize {
        use AxiomId::*;
        match self {
            Sb(1) | Shb(1) | Shb(3) | PlusSupercomm | MultBinary | GradeBinary | MorphBinary => 2,
            Sb(4) | Shb(6) => 4,
            Sb(5) | Shb(7) | Lsts(5) | Hlsts(7) => 5,
            MorphTwist => 1,
            _ => 3,
        }
    }

    /// The untwisted axiom a Hom-Bol axiom specializes to at `α = Id`.
    pub fn untwisted(self) -> Option<AxiomId> {
        match self {
            AxiomId::Shb(n @ 3..=7) => Some(AxiomId::Sb(n - 2)),
            _ => None,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AxiomId::*;
        match self {
            RightAlt21 => write!(f, "RALT-2.1"),
            RightAlt22 => write!(f, "RALT-2.2"),
            LeftAlt => write!(f, "LALT"),
            Sb(n) => write!(f, "SB{n}"),
            Shb(n) => write!(f, "SHB{n}"),
            Lsts(n) => write!(f, "LSTS-SB{n}"),
            Hlsts(n) => write!(f, "HLSTS-SHB{n}"),
            PlusSupercomm => write!(f, "PLUS-SUPERCOMM"),
            MultBinary => write!(f, "MULT-BIN"),
            MultTernary => write!(f, "MULT-TER"),
            GradeBinary => write!(f, "GRADE-BIN"),
            GradeTernary => write!(f, "GRADE-TER"),
            MorphBinary => write!(f, "MORPH-BIN"),
            MorphTernary => write!(f, "MORPH-TER"),
            MorphTwist => write!(f, "MORPH-TWIST"),
        }
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use AxiomId::*;
        let fixed = [
            RightAlt21,
            RightAlt22,
            LeftAlt,
            PlusSupercomm,
            MultBinary,
            MultTernary,
            GradeBinary,
            GradeTernary,
            MorphBinary,
            MorphTernary,
            MorphTwist,
        ];
        let candidates = fixed
            .into_iter()
            .chain(AxiomId::BOL)
            .chain(AxiomId::HOM_BOL)
            .chain(AxiomId::LSTS)
            .chain(AxiomId::HLSTS);
        for id in candidates {
            if id.to_string() == s {
                return Ok(id);
            }
        }
        Err(Error::Format(format!("unknown axiom id {s:?}")))
    }
}

impl From<AxiomId> for String {
    fn from(id: AxiomId) -> String {
        id.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Counterexample {
    /// Basis indices bound to the quantified variables, in order.
    pub tuple: Vec<usize>,
    /// Exact `LHS - RHS`.
    pub residual: SuperVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// An [`AxiomId`] in text form, or the label of a custom identity.
    pub name: String,
    pub counterexamples: Vec<Counterexample>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn axiom(&self) -> Option<AxiomId> {
        self.name.parse().ok()
    }

    pub fn failing_tuples(&self) -> Vec<Vec<usize>> {
        self.counterexamples.iter().map(|c| c.tuple.clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    pub verdicts: Vec<Verdict>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), verdicts: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, counterexamples: Vec<Counterexample>) {
        self.verdicts.push(Verdict { name: name.into(), counterexamples });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn verdict(&self, name: impl Into<String>) -> Option<&Verdict> {
        let name = name.into();
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn failing(&self) -> Vec<String> {
        self.verdicts.iter().filter(|v| !v.passed()).map(|v| v.name.clone()).collect()
    }

    /// `(name, passed)` pairs in report order.
    pub fn verdict_set(&self) -> Vec<(String, bool)> {
        self.verdicts.iter().map(|v| (v.name.clone(), v.passed())).collect()
    }

    pub fn total_counterexamples(&self) -> usize {
        self.verdicts.iter().map(|v| v.counterexamples.len()).sum()
    }

    /// Appends every verdict of `other`.
    pub fn extend(&mut self, other: CheckReport) {
        self.verdicts.extend(other.verdicts);
    }

    /// Human-readable multi-line rendering using the grading's labels.
    pub fn render(&self, grading: &Grading) -> String {
        let mut out = format!("suite {}: {}\n", self.suite, if self.passed() { "PASS" } else { "FAIL" });
        for v in &self.verdicts {
            if v.passed() {
                out.push_str(&format!("  {:<14} pass\n", v.name));
            } else {
                out.push_str(&format!(
                    "  {:<14} FAIL ({} counterexample{})\n",
                    v.name,
                    v.counterexamples.len(),
                    if v.counterexamples.len() == 1 { "" } else { "s" }
                ));
                for c in &v.counterexamples {
                    let labels: Vec<String> = c.tuple.iter().map(|&i| grading.label(i)).collect();
                    out.push_str(&format!("      ({}) -> {}\n", labels.join(", "), c.residual.display(grading)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_text() {
        let all = [AxiomId::RightAlt22, AxiomId::Sb(4), AxiomId::Shb(7), AxiomId::Lsts(3), AxiomId::Hlsts(7)];
        for id in all {
            assert_eq!(id.to_string().parse::<AxiomId>().unwrap(), id);
        }
        assert_eq!(AxiomId::Hlsts(7).to_string(), "HLSTS-SHB7");
        assert!("SB6".parse::<AxiomId>().is_err());
    }

    #[test]
    fn arities() {
        assert_eq!(AxiomId::Sb(4).arity(), 4);
        assert_eq!(AxiomId::Shb(7).arity(), 5);
        assert_eq!(AxiomId::Shb(1).arity(), 2);
        assert_eq!(AxiomId::Shb(6).untwisted(), Some(AxiomId::Sb(4)));
        assert_eq!(AxiomId::Shb(2).untwisted(), None);
    }

    #[test]
    fn pass_iff_no_counterexamples() {
        let mut r = CheckReport::new("t");
        r.push(AxiomId::Sb(1), vec![]);
        assert!(r.passed());
        r.push(AxiomId::Sb(2), vec![Counterexample { tuple: vec![0, 0, 0], residual: SuperVector::basis(1, 0) }]);
        assert!(!r.passed());
        assert_eq!(r.failing(), vec!["SB2".to_string()]);
    }
}
