use crate::algebra::SuperAlgebraData;
use crate::error::Error;
use crate::grading::{basis_tuples, koszul, Parity};
use crate::map::GradedLinearMap;
use crate::report::{CheckReport, Counterexample};
use crate::scalar::int;
use crate::vector::SuperVector;

use super::ast::{DegPoly, Expr, Identity, Sign};

#[derive(Debug, Clone, Default)]
struct Uses {
    bracket: bool,
    triple: bool,
    max_power: u32,
}

fn uses(e: &Expr, acc: &mut Uses) {
    match e {
        Expr::Zero | Expr::Var(_) => {}
        Expr::Twist { power, arg } => {
            acc.max_power = acc.max_power.max(*power);
            uses(arg, acc);
        }
        Expr::Bracket(x, y) => {
            acc.bracket = true;
            uses(x, acc);
            uses(y, acc);
        }
        Expr::Triple(x, y, z) => {
            acc.triple = true;
            uses(x, acc);
            uses(y, acc);
            uses(z, acc);
        }
        Expr::Sum(terms) => terms.iter().for_each(|(_, t)| uses(t, acc)),
        Expr::Scaled(_, e) | Expr::KoszulSign(_, e) => uses(e, acc),
    }
}

/// An identity paired with the algebra it is checked on.
///
/// `a(..)` is read as the stored twist, so an algebra without a twist
/// evaluates it as the identity map.
#[derive(Debug, Clone)]
pub struct DslCheckRequest {
    ast: Identity,
    algebra: SuperAlgebraData,
    order: Vec<String>,
    powers: Vec<GradedLinearMap>,
}

impl DslCheckRequest {
    /// Binds variables in order of first appearance.
    pub fn new(ast: Identity, algebra: SuperAlgebraData) -> Result<Self, Error> {
        let order = ast.variables();
        DslCheckRequest::with_order(ast, algebra, order)
    }

    /// `order` must list every quantified variable exactly once.
    pub fn with_order(ast: Identity, algebra: SuperAlgebraData, order: Vec<String>) -> Result<Self, Error> {
        let vars = ast.variables();
        for v in &vars {
            if !order.contains(v) {
                return Err(Error::UnboundVariable(v.clone()));
            }
        }
        if order.len() != vars.len() {
            let extra = order.iter().find(|o| !vars.contains(o)).cloned().unwrap_or_default();
            return Err(Error::InvalidParam(format!("binding order names {extra:?} more than once or not at all")));
        }
        let mut used = Uses::default();
        uses(&ast.lhs, &mut used);
        uses(&ast.rhs, &mut used);
        if used.bracket && algebra.binary().is_none() {
            return Err(Error::MissingOperation("a binary product"));
        }
        if used.triple && algebra.ternary().is_none() {
            return Err(Error::MissingOperation("a ternary product"));
        }
        let alpha = algebra.twist_or_identity();
        let mut powers = vec![GradedLinearMap::identity(algebra.dim())];
        for n in 1..=used.max_power as usize {
            let next = alpha.compose(&powers[n - 1]).expect("same dimension");
            powers.push(next);
        }
        Ok(DslCheckRequest { ast, algebra, order, powers })
    }

    pub fn ast(&self) -> &Identity {
        &self.ast
    }

    pub fn algebra(&self) -> &SuperAlgebraData {
        &self.algebra
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }
}

struct Env<'a> {
    req: &'a DslCheckRequest,
    values: Vec<(&'a str, SuperVector, Parity)>,
}

impl Env<'_> {
    fn lookup(&self, name: &str) -> &(&str, SuperVector, Parity) {
        self.values.iter().find(|v| v.0 == name).expect("every variable is bound")
    }

    fn sign(&self, p: &DegPoly) -> Parity {
        p.monomials.iter().fold(Parity::Even, |acc, mono| {
            acc + mono.iter().fold(Parity::Odd, |prod, v| prod.times(self.lookup(v).2))
        })
    }

    fn eval(&self, e: &Expr) -> SuperVector {
        let a = &self.req.algebra;
        match e {
            Expr::Zero => SuperVector::zero(a.dim()),
            Expr::Var(name) => self.lookup(name).1.clone(),
            Expr::Twist { power, arg } => self.req.powers[*power as usize].apply_unchecked(&self.eval(arg)),
            Expr::Bracket(x, y) => {
                let b = a.binary().expect("checked when the request was built");
                b.eval(&self.eval(x), &self.eval(y)).expect("dimensions agree")
            }
            Expr::Triple(x, y, z) => {
                let t = a.ternary().expect("checked when the request was built");
                t.eval(&self.eval(x), &self.eval(y), &self.eval(z)).expect("dimensions agree")
            }
            Expr::Sum(terms) => {
                let mut acc = SuperVector::zero(a.dim());
                for (sign, term) in terms {
                    let c = match sign {
                        Sign::Plus => int(1),
                        Sign::Minus => int(-1),
                    };
                    acc.add_scaled(&c, &self.eval(term));
                }
                acc
            }
            Expr::Scaled(c, e) => self.eval(e).scale(c),
            Expr::KoszulSign(p, e) => self.eval(e).scale(&int(koszul(self.sign(p)))),
        }
    }
}

fn residual(req: &DslCheckRequest, binding: &[usize]) -> SuperVector {
    let a = &req.algebra;
    let values = req
        .order
        .iter()
        .zip(binding)
        .map(|(name, &i)| (name.as_str(), a.basis(i), a.degree(i)))
        .collect();
    let env = Env { req, values };
    &env.eval(&req.ast.lhs) - &env.eval(&req.ast.rhs)
}

/// Exact `LHS - RHS` with each variable bound to the basis element at the
/// matching position of `binding`.
pub fn evaluate_identity(req: &DslCheckRequest, binding: &[usize]) -> Result<SuperVector, Error> {
    if binding.len() != req.order.len() {
        return Err(Error::InvalidParam(format!(
            "the identity quantifies {} variables, got {} basis indices",
            req.order.len(),
            binding.len()
        )));
    }
    if let Some(&bad) = binding.iter().find(|&&i| i >= req.algebra.dim()) {
        return Err(Error::InvalidParam(format!("basis index {bad} out of range")));
    }
    Ok(residual(req, binding))
}

/// Quantifies over every basis binding; one verdict named `name`.
pub fn check_identity(req: &DslCheckRequest, name: &str) -> CheckReport {
    let mut report = CheckReport::new(name);
    let failures = basis_tuples(req.algebra.dim(), req.order.len())
        .filter_map(|tuple| {
            let r = residual(req, &tuple);
            (!r.is_zero()).then_some(Counterexample { tuple, residual: r })
        })
        .collect();
    report.push(name, failures);
    report
}
