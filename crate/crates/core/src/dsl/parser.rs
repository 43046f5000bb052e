//! Single-pass recursive descent parser for graded identities.
//!
//! ```text
//! identity := expr "==" expr
//! expr     := term { ("+" | "-") term }
//! term     := { factor "*" } atom
//! factor   := rational | "(-1)^(" degpoly ")"
//! degpoly  := degmono { "+" degmono }
//! degmono  := "|" ident "|" { "*" "|" ident "|" }
//! atom     := ident | "a" ["^" nat] "(" expr ")" | "[" expr "," expr "]"
//!           | "{" expr "," expr "," expr "}" | "(" expr ")" | "0"
//! rational := ["-"] nat ["/" nat]
//! ```
//!
//! A leading `-` on an expression that is not a rational factor is sugar for
//! `0 - term`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use super::ast::{DegPoly, Expr, Identity, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Pipe,
    EqEq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Nat(s) => write!(f, "number {s}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::LBrace => write!(f, "'{{'"),
            Tok::RBrace => write!(f, "'}}'"),
            Tok::Comma => write!(f, "','"),
            Tok::Pipe => write!(f, "'|'"),
            Tok::EqEq => write!(f, "'=='"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (first_line, 1);
    let mut n = 0;
    while n < chars.len() {
        let c = chars[n];
        let (start_line, start_col) = (line, column);
        let advance = |k: usize, n: &mut usize, column: &mut usize| {
            *n += k;
            *column += k;
        };
        if c == '\n' {
            n += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut n, &mut column);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while n < chars.len() && chars[n].is_ascii_digit() {
                s.push(chars[n]);
                advance(1, &mut n, &mut column);
            }
            Tok::Nat(s)
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while n < chars.len() && (chars[n].is_alphanumeric() || chars[n] == '_') {
                s.push(chars[n]);
                advance(1, &mut n, &mut column);
            }
            Tok::Ident(s)
        } else {
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '/' => Some(Tok::Slash),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                ',' => Some(Tok::Comma),
                '|' => Some(Tok::Pipe),
                _ => None,
            };
            match single {
                Some(t) => {
                    advance(1, &mut n, &mut column);
                    t
                }
                None if c == '=' && chars.get(n + 1) == Some(&'=') => {
                    advance(2, &mut n, &mut column);
                    Tok::EqEq
                }
                None => {
                    return Err(ParseError {
                        line: start_line,
                        column: start_col,
                        expected: vec!["a token".into()],
                        found: format!("character {c:?}"),
                    })
                }
            }
        };
        out.push(Spanned { tok, line: start_line, column: start_col });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let n = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[n].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: here.tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn identity(&mut self) -> Result<Identity, ParseError> {
        let lhs = self.expr()?;
        self.expect(Tok::EqEq, "'=='")?;
        let rhs = self.expr()?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(&["'+'", "'-'", "end of input"]));
        }
        Ok(Identity { lhs, rhs })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        if *self.peek() == Tok::Minus && !matches!(self.peek_at(1), Tok::Nat(_)) {
            self.bump();
            terms.push((Sign::Plus, Expr::Zero));
            terms.push((Sign::Minus, self.term()?));
        } else {
            terms.push((Sign::Plus, self.term()?));
        }
        loop {
            let sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
            terms.push((sign, self.term()?));
        }
        if terms.len() == 1 {
            Ok(terms.pop().expect("one term").1)
        } else {
            Ok(Expr::Sum(terms))
        }
    }

    fn at_sign_factor(&self) -> bool {
        *self.peek() == Tok::LParen
            && *self.peek_at(1) == Tok::Minus
            && *self.peek_at(2) == Tok::Nat("1".into())
            && *self.peek_at(3) == Tok::RParen
            && *self.peek_at(4) == Tok::Caret
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        enum Factor {
            Rational(BigRational),
            Sign(DegPoly),
        }
        let mut factors = Vec::new();
        let atom = loop {
            match self.peek() {
                Tok::Nat(_) | Tok::Minus => {
                    let negative = *self.peek() == Tok::Minus;
                    let value = self.rational()?;
                    if *self.peek() == Tok::Star {
                        self.bump();
                        factors.push(Factor::Rational(value));
                    } else if value.is_zero() && !negative {
                        break Expr::Zero;
                    } else {
                        return Err(self.error(&["'*'"]));
                    }
                }
                _ if self.at_sign_factor() => {
                    for _ in 0..5 {
                        self.bump();
                    }
                    self.expect(Tok::LParen, "'('")?;
                    let poly = self.degpoly()?;
                    self.expect(Tok::RParen, "')'")?;
                    self.expect(Tok::Star, "'*'")?;
                    factors.push(Factor::Sign(poly));
                }
                _ => break self.atom()?,
            }
        };
        Ok(factors.into_iter().rev().fold(atom, |inner, factor| match factor {
            Factor::Rational(c) => Expr::Scaled(c, Box::new(inner)),
            Factor::Sign(p) => Expr::KoszulSign(p, Box::new(inner)),
        }))
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Nat(digits) => {
                self.bump();
                Ok(digits.parse().expect("lexer only emits digits"))
            }
            _ => Err(self.error(&["a natural number"])),
        }
    }

    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let numer = self.nat()?;
        let denom = if *self.peek() == Tok::Slash {
            self.bump();
            let d = self.nat()?;
            if d.is_zero() {
                self.pos -= 1;
                return Err(self.error(&["a nonzero denominator"]));
            }
            d
        } else {
            BigInt::from(1)
        };
        let value = BigRational::new(numer, denom);
        Ok(if negative { -value } else { value })
    }

    fn degpoly(&mut self) -> Result<DegPoly, ParseError> {
        let mut monomials = vec![self.degmono()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            monomials.push(self.degmono()?);
        }
        Ok(DegPoly { monomials })
    }

    fn degmono(&mut self) -> Result<Vec<String>, ParseError> {
        let mut vars = vec![self.degsym()?];
        while *self.peek() == Tok::Star {
            self.bump();
            vars.push(self.degsym()?);
        }
        Ok(vars)
    }

    fn degsym(&mut self) -> Result<String, ParseError> {
        self.expect(Tok::Pipe, "'|'")?;
        let name = match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                name
            }
            _ => return Err(self.error(&["a variable name"])),
        };
        self.expect(Tok::Pipe, "'|'")?;
        Ok(name)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "a" && matches!(self.peek_at(1), Tok::LParen | Tok::Caret) => {
                self.bump();
                let power = if *self.peek() == Tok::Caret {
                    self.bump();
                    let n = self.nat()?;
                    u32::try_from(n).map_err(|_| self.error(&["a twist power below 2^32"]))?
                } else {
                    1
                };
                self.expect(Tok::LParen, "'('")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::twist(power, arg))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Var(name))
            }
            Tok::LBracket => {
                self.bump();
                let x = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let y = self.expr()?;
                if *self.peek() == Tok::Comma {
                    return Err(self.error(&["']' (a bracket takes two arguments)"]));
                }
                self.expect(Tok::RBracket, "']'")?;
                Ok(Expr::bracket(x, y))
            }
            Tok::LBrace => {
                self.bump();
                let x = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let y = self.expr()?;
                if *self.peek() == Tok::RBrace {
                    return Err(self.error(&["',' (a triple takes three arguments)"]));
                }
                self.expect(Tok::Comma, "','")?;
                let z = self.expr()?;
                self.expect(Tok::RBrace, "'}'")?;
                Ok(Expr::triple(x, y, z))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(self.error(&["a variable", "'a('", "'['", "'{'", "'('", "'0'", "a rational factor"])),
        }
    }
}

/// Parses one identity. `first_line` offsets reported line numbers.
pub fn parse_identity_at(text: &str, first_line: usize) -> Result<Identity, ParseError> {
    let toks = lex(text, first_line)?;
    let mut parser = Parser { toks, pos: 0 };
    let identity = parser.identity()?;
    let vars = identity.variables();
    let mut degree_vars = Vec::new();
    identity.lhs.collect_degree_vars(&mut degree_vars);
    identity.rhs.collect_degree_vars(&mut degree_vars);
    if let Some(stray) = degree_vars.iter().find(|v| !vars.contains(v)) {
        let (line, column) = locate_degree_symbol(text, stray, first_line);
        return Err(ParseError {
            line,
            column,
            expected: vec!["a degree symbol of a quantified variable".into()],
            found: format!("|{stray}|"),
        });
    }
    Ok(identity)
}

fn locate_degree_symbol(text: &str, name: &str, first_line: usize) -> (usize, usize) {
    let needle = format!("|{name}|");
    for (n, line) in text.lines().enumerate() {
        if let Some(col) = line.find(&needle) {
            return (first_line + n, line[..col].chars().count() + 1);
        }
    }
    (first_line, 1)
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    parse_identity_at(text, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn v(name: &str) -> Expr {
        Expr::var(name)
    }

    #[test]
    fn parses_skew_symmetry() {
        let id = parse_identity("{x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}").unwrap();
        let sign = DegPoly { monomials: vec![vec!["x".into(), "y".into()]] };
        let expected = Identity {
            lhs: Expr::triple(v("x"), v("y"), v("z")),
            rhs: Expr::Sum(vec![
                (Sign::Plus, Expr::Zero),
                (Sign::Minus, Expr::KoszulSign(sign, Box::new(Expr::triple(v("y"), v("x"), v("z"))))),
            ]),
        };
        assert_eq!(id, expected);
    }

    #[test]
    fn trivial_identity() {
        let id = parse_identity("[x,y] == [x,y]").unwrap();
        assert_eq!(id.lhs, id.rhs);
    }

    #[test]
    fn arity_errors() {
        let err = parse_identity("{x,y} == 0").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert!(err.to_string().contains("three arguments"), "{err}");
        assert!(parse_identity("[x,y,z] == 0").is_err());
    }

    #[test]
    fn factors_and_unary_minus() {
        let id = parse_identity("-[x,y] == -1/2 * 3 * a^2(x) + 0").unwrap();
        assert_eq!(
            id.lhs,
            Expr::Sum(vec![(Sign::Plus, Expr::Zero), (Sign::Minus, Expr::bracket(v("x"), v("y")))])
        );
        assert_eq!(
            id.rhs,
            Expr::Sum(vec![
                (
                    Sign::Plus,
                    Expr::Scaled(frac(-1, 2), Box::new(Expr::Scaled(int(3), Box::new(Expr::twist(2, v("x"))))))
                ),
                (Sign::Plus, Expr::Zero),
            ])
        );
    }

    #[test]
    fn positions_and_expected_sets() {
        let err = parse_identity("[x,y]\n  == [x y]").unwrap_err();
        assert_eq!((err.line, err.column), (2, 9));
        assert_eq!(err.expected, vec!["','"]);
        let err = parse_identity("2 [x,y] == 0").unwrap_err();
        assert_eq!(err.expected, vec!["'*'"]);
        let err = parse_identity("x == y + ").unwrap_err();
        assert_eq!(err.found, "end of input");
        assert!(parse_identity("x = y").is_err());
        assert!(parse_identity("1/0 * x == x").is_err());
    }

    #[test]
    fn sign_exponents_must_use_quantified_variables() {
        let err = parse_identity("[x,y] == (-1)^(|x|*|q|) * [y,x]").unwrap_err();
        assert_eq!(err.found, "|q|");
        assert_eq!(err.column, 20);
    }

    #[test]
    fn twist_symbol_needs_parentheses_to_be_a_twist() {
        let id = parse_identity("[a, b] == a(b)").unwrap();
        assert_eq!(id.lhs, Expr::bracket(v("a"), v("b")));
        assert_eq!(id.rhs, Expr::twist(1, v("b")));
    }
}
