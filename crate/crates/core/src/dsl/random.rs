use rand::seq::SliceRandom;
use rand::Rng;

use crate::scalar::frac;

use super::ast::{DegPoly, Expr, Identity, Sign};

const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

fn leaf(rng: &mut impl Rng) -> Expr {
    if rng.gen_ratio(1, 8) {
        Expr::Zero
    } else {
        Expr::var(NAMES.choose(rng).expect("nonempty"))
    }
}

fn expr(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 {
        return leaf(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => leaf(rng),
        1 => Expr::twist(rng.gen_range(0..4), expr(rng, d)),
        2 => Expr::bracket(expr(rng, d), expr(rng, d)),
        3 => Expr::triple(expr(rng, d), expr(rng, d), expr(rng, d)),
        4 => {
            let n = rng.gen_range(2..4);
            let mut terms = vec![(Sign::Plus, expr(rng, d))];
            for _ in 1..n {
                let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
                terms.push((sign, expr(rng, d)));
            }
            Expr::Sum(terms)
        }
        5 => {
            let c = frac(rng.gen_range(-9..10), rng.gen_range(1..5));
            Expr::Scaled(c, Box::new(expr(rng, d)))
        }
        _ => Expr::KoszulSign(DegPoly { monomials: Vec::new() }, Box::new(expr(rng, d))),
    }
}

fn fill_signs(e: &mut Expr, vars: &[String], rng: &mut impl Rng) {
    match e {
        Expr::Zero | Expr::Var(_) => {}
        Expr::Twist { arg, .. } => fill_signs(arg, vars, rng),
        Expr::Bracket(x, y) => {
            fill_signs(x, vars, rng);
            fill_signs(y, vars, rng);
        }
        Expr::Triple(x, y, z) => {
            fill_signs(x, vars, rng);
            fill_signs(y, vars, rng);
            fill_signs(z, vars, rng);
        }
        Expr::Sum(terms) => terms.iter_mut().for_each(|(_, t)| fill_signs(t, vars, rng)),
        Expr::Scaled(_, inner) => fill_signs(inner, vars, rng),
        Expr::KoszulSign(p, inner) => {
            p.monomials = (0..rng.gen_range(1..4))
                .map(|_| (0..rng.gen_range(1..3)).map(|_| vars.choose(rng).expect("nonempty").clone()).collect())
                .collect();
            fill_signs(inner, vars, rng);
        }
    }
}

/// A random well-formed identity whose sides have depth at most `depth`.
///
/// Every sign exponent only mentions variables of the identity, so the
/// result satisfies every invariant the parser enforces.
pub fn random_identity(rng: &mut impl Rng, depth: u32) -> Identity {
    let mut id = Identity { lhs: expr(rng, depth), rhs: expr(rng, depth) };
    if id.variables().is_empty() {
        id.lhs = Expr::Sum(vec![(Sign::Plus, id.lhs), (Sign::Plus, Expr::var("x"))]);
    }
    let vars = id.variables();
    fill_signs(&mut id.lhs, &vars, rng);
    fill_signs(&mut id.rhs, &vars, rng);
    id
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_identity;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_identities_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let id = random_identity(&mut rng, 4);
            let text = id.to_string();
            assert_eq!(parse_identity(&text).unwrap(), id, "{text}");
        }
    }
}
