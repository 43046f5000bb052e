//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Scalar`], an arbitrary precision
//! rational kept in lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^exponent` as a scalar.
pub fn sign(exponent: u32) -> Scalar {
    if exponent.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// Parses the canonical rational-string form `-?[0-9]+(/[1-9][0-9]*)?`.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let bad = || Error::Format(format!("invalid rational string {text:?}"));
    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num_part.strip_prefix('-').unwrap_or(num_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num_part.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_part {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || d.starts_with('0') || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    Ok(BigRational::new(numer, denom))
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `a * b`, skipping the gcd work when an operand is `1` or both are integers.
pub(crate) fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// `acc += x`, with an integer fast path.
pub(crate) fn add_to(acc: &mut Scalar, x: &Scalar) {
    if acc.is_zero() {
        *acc = x.clone();
    } else if acc.is_integer() && x.is_integer() {
        *acc = BigRational::from_integer(acc.numer() + x.numer());
    } else {
        *acc += x;
    }
}

/// `acc -= x`, with an integer fast path.
pub(crate) fn sub_from(acc: &mut Scalar, x: &Scalar) {
    if acc.is_integer() && x.is_integer() {
        *acc = BigRational::from_integer(acc.numer() - x.numer());
    } else {
        *acc -= x;
    }
}

pub fn is_negative(value: &Scalar) -> bool {
    value.is_negative()
}
