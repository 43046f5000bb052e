use std::fmt;

use crate::scalar::{format_scalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A sum of products of degree symbols `|v|`, read in ℤ₂.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegPoly {
    pub monomials: Vec<Vec<String>>,
}

impl DegPoly {
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.monomials.iter().flatten().map(String::as_str)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Zero,
    Var(String),
    /// `a^power(arg)`: the stored twist applied `power` times.
    Twist { power: u32, arg: Box<Expr> },
    Bracket(Box<Expr>, Box<Expr>),
    Triple(Box<Expr>, Box<Expr>, Box<Expr>),
    /// At least two terms; the first is always `Plus`.
    Sum(Vec<(Sign, Expr)>),
    Scaled(Scalar, Box<Expr>),
    KoszulSign(DegPoly, Box<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn twist(power: u32, arg: Expr) -> Expr {
        Expr::Twist { power, arg: Box::new(arg) }
    }

    pub fn bracket(x: Expr, y: Expr) -> Expr {
        Expr::Bracket(Box::new(x), Box::new(y))
    }

    pub fn triple(x: Expr, y: Expr, z: Expr) -> Expr {
        Expr::Triple(Box::new(x), Box::new(y), Box::new(z))
    }

    /// Appends variable names in order of first appearance.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Zero => {}
            Expr::Var(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Expr::Twist { arg, .. } => arg.collect_vars(out),
            Expr::Bracket(x, y) => {
                x.collect_vars(out);
                y.collect_vars(out);
            }
            Expr::Triple(x, y, z) => {
                x.collect_vars(out);
                y.collect_vars(out);
                z.collect_vars(out);
            }
            Expr::Sum(terms) => terms.iter().for_each(|(_, t)| t.collect_vars(out)),
            Expr::Scaled(_, e) | Expr::KoszulSign(_, e) => e.collect_vars(out),
        }
    }

    /// Degree symbols used in sign exponents.
    pub fn collect_degree_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Zero | Expr::Var(_) => {}
            Expr::Twist { arg, .. } => arg.collect_degree_vars(out),
            Expr::Bracket(x, y) => {
                x.collect_degree_vars(out);
                y.collect_degree_vars(out);
            }
            Expr::Triple(x, y, z) => {
                x.collect_degree_vars(out);
                y.collect_degree_vars(out);
                z.collect_degree_vars(out);
            }
            Expr::Sum(terms) => terms.iter().for_each(|(_, t)| t.collect_degree_vars(out)),
            Expr::Scaled(_, e) => e.collect_degree_vars(out),
            Expr::KoszulSign(p, e) => {
                for v in p.variables() {
                    if !out.iter().any(|o| o == v) {
                        out.push(v.to_string());
                    }
                }
                e.collect_degree_vars(out);
            }
        }
    }
}

/// `lhs == rhs`, quantified over every variable it mentions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Identity {
    /// Quantified variables in order of first appearance, left side first.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.lhs.collect_vars(&mut out);
        self.rhs.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for DegPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, mono) in self.monomials.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = mono.iter().map(|v| format!("|{v}|")).collect();
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

fn write_term(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Sum(_) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => write!(f, "0"),
            Expr::Var(name) => write!(f, "{name}"),
            Expr::Twist { power: 1, arg } => write!(f, "a({arg})"),
            Expr::Twist { power, arg } => write!(f, "a^{power}({arg})"),
            Expr::Bracket(x, y) => write!(f, "[{x},{y}]"),
            Expr::Triple(x, y, z) => write!(f, "{{{x},{y},{z}}}"),
            Expr::Sum(terms) => {
                for (n, (sign, term)) in terms.iter().enumerate() {
                    match (n, sign) {
                        (0, Sign::Plus) => {}
                        (0, Sign::Minus) => write!(f, "0 - ")?,
                        (_, Sign::Plus) => write!(f, " + ")?,
                        (_, Sign::Minus) => write!(f, " - ")?,
                    }
                    write_term(term, f)?;
                }
                Ok(())
            }
            Expr::Scaled(c, e) => {
                write!(f, "{} * ", format_scalar(c))?;
                write_term(e, f)
            }
            Expr::KoszulSign(p, e) => {
                write!(f, "(-1)^({p}) * ")?;
                write_term(e, f)
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

/// Renders an identity in the grammar accepted by [`crate::dsl::parse_identity`].
pub fn print_identity(identity: &Identity) -> String {
    identity.to_string()
}
