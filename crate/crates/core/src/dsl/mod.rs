//! A small language for graded multilinear identities.
//!
//! `[x,y]` is the binary product, `{x,y,z}` the ternary one, `a^k(e)` the
//! stored twist applied `k` times and `(-1)^(|x|*|y|) * e` a Koszul sign
//! read from the degrees of the basis elements bound to `x` and `y`.
//!
//! Identity files (`.idl`) hold one `LABEL: identity` per entry. Lines
//! starting with whitespace continue the previous entry and `#` starts a
//! comment.

mod ast;
mod eval;
mod parser;
mod random;

pub use ast::{print_identity, DegPoly, Expr, Identity, Sign};
pub use eval::{check_identity, evaluate_identity, DslCheckRequest};
pub use parser::{parse_identity, parse_identity_at, ParseError};
pub use random::random_identity;

use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::report::CheckReport;

/// A labelled identity from an `.idl` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdentity {
    pub label: String,
    pub identity: Identity,
}

/// The shipped axiom files, keyed by suite name.
pub const BUILTIN_FILES: [(&str, &str); 6] = [
    ("right-alt", include_str!("../../data/right-alt.idl")),
    ("left-alt", include_str!("../../data/left-alt.idl")),
    ("bol", include_str!("../../data/bol.idl")),
    ("hom-bol", include_str!("../../data/hom-bol.idl")),
    ("lsts", include_str!("../../data/lsts.idl")),
    ("hlsts", include_str!("../../data/hlsts.idl")),
];

pub fn builtin_source(suite: &str) -> Option<&'static str> {
    BUILTIN_FILES.iter().find(|(name, _)| *name == suite).map(|(_, text)| *text)
}

pub fn builtin(suite: &str) -> Option<Vec<NamedIdentity>> {
    builtin_source(suite).map(|text| parse_idl(text).expect("built-in identity files parse"))
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

/// Parses an identity file. Reported positions refer to the file itself.
pub fn parse_idl(text: &str) -> Result<Vec<NamedIdentity>, ParseError> {
    // (label, first line, body with the label blanked out)
    let mut entries: Vec<(String, usize, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            if let Some(entry) = entries.last_mut() {
                entry.2.push('\n');
            }
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            match entries.last_mut() {
                Some(entry) => {
                    entry.2.push('\n');
                    entry.2.push_str(line);
                }
                None => {
                    let column = line.len() - line.trim_start().len() + 1;
                    return Err(ParseError { line: n + 1, column, expected: vec!["a label".into()], found: "a continuation line".into() });
                }
            }
            continue;
        }
        let Some((label, _)) = line.split_once(':') else {
            return Err(ParseError { line: n + 1, column: 1, expected: vec!["'LABEL:'".into()], found: format!("{:?}", line.trim_end()) });
        };
        let label = label.trim();
        if label.is_empty() || label.contains(char::is_whitespace) {
            return Err(ParseError { line: n + 1, column: 1, expected: vec!["a label without spaces".into()], found: format!("{label:?}") });
        }
        let prefix = line.find(':').expect("split succeeded") + 1;
        let body = format!("{}{}", " ".repeat(line[..prefix].chars().count()), &line[prefix..]);
        entries.push((label.to_string(), n + 1, body));
    }
    entries
        .into_iter()
        .map(|(label, first_line, body)| {
            parse_identity_at(&body, first_line).map(|identity| NamedIdentity { label, identity })
        })
        .collect()
}

/// Renders identities back into `.idl` form, one per line.
pub fn print_idl(identities: &[NamedIdentity]) -> String {
    identities.iter().map(|n| format!("{}: {}\n", n.label, n.identity)).collect()
}

/// Checks every identity and collects the verdicts under `suite`.
pub fn check_idl(a: &SuperAlgebraData, suite: &str, identities: &[NamedIdentity]) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new(suite);
    for n in identities {
        let req = DslCheckRequest::new(n.identity.clone(), a.clone())?;
        report.extend(check_identity(&req, &n.label));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_and_round_trip() {
        for (suite, _) in BUILTIN_FILES {
            let ids = builtin(suite).unwrap();
            assert!(!ids.is_empty());
            assert_eq!(parse_idl(&print_idl(&ids)).unwrap(), ids, "{suite}");
        }
        let labels: Vec<String> = builtin("hom-bol").unwrap().into_iter().map(|n| n.label).collect();
        assert_eq!(labels, ["SHB1", "SHB2", "SHB3", "SHB4", "SHB5", "SHB6", "SHB7"]);
    }

    #[test]
    fn positions_point_into_the_file() {
        let text = "# header\nA: [x,y] == 0\nB: {x,y,z}\n    == {x,y}\n";
        let err = parse_idl(text).unwrap_err();
        assert_eq!((err.line, err.column), (4, 12));
        let err = parse_idl("A: [x,y] == q q").unwrap_err();
        assert_eq!((err.line, err.column), (1, 15));
    }

    #[test]
    fn malformed_entries() {
        assert!(parse_idl("  [x,y] == 0").is_err());
        assert!(parse_idl("[x,y] == 0").is_err());
        assert!(parse_idl("two words: x == x").is_err());
    }
}
