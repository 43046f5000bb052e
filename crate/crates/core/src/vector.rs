use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::Error;
use crate::grading::{Grading, Parity};
use crate::scalar::{add_to, format_scalar, mul, one, sub_from, Scalar};

/// Coordinates of an element of a superspace in its standard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperVector {
    coeffs: Vec<Scalar>,
}

impl SuperVector {
    pub fn zero(dim: usize) -> Self {
        SuperVector { coeffs: vec![Scalar::zero(); dim] }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = SuperVector::zero(dim);
        v.coeffs[index] = one();
        v
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        SuperVector { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Scalar {
        &self.coeffs[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        SuperVector { coeffs: self.coeffs.iter().map(|c| mul(c, factor)).collect() }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &SuperVector) {
        debug_assert_eq!(self.dim(), other.dim());
        if factor.is_zero() {
            return;
        }
        let pairs = self.coeffs.iter_mut().zip(&other.coeffs).filter(|(_, b)| !b.is_zero());
        if factor.is_one() {
            pairs.for_each(|(a, b)| add_to(a, b));
        } else if factor.is_integer() && factor.numer() == &BigInt::from(-1) {
            pairs.for_each(|(a, b)| sub_from(a, b));
        } else {
            pairs.for_each(|(a, b)| add_to(a, &mul(factor, b)));
        }
    }

    pub fn check_dim(&self, dim: usize) -> Result<(), Error> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.dim() });
        }
        Ok(())
    }

    /// Renders as e.g. `2i - 1/2k` using the grading's labels.
    pub fn display<'a>(&'a self, grading: &'a Grading) -> impl fmt::Display + 'a {
        Labelled { vector: self, grading }
    }
}

/// Degree of a homogeneous vector; the zero vector counts as even.
pub fn degree_of(v: &SuperVector, grading: &Grading) -> Result<Parity, Error> {
    v.check_dim(grading.dim())?;
    let mut found: Option<Parity> = None;
    for (index, _) in v.support() {
        let d = grading.degree(index);
        match found {
            None => found = Some(d),
            Some(prev) if prev != d => return Err(Error::NonHomogeneous),
            Some(_) => {}
        }
    }
    Ok(found.unwrap_or(Parity::Even))
}

impl Add for &SuperVector {
    type Output = SuperVector;

    fn add(self, rhs: &SuperVector) -> SuperVector {
        let mut out = self.clone();
        out.add_scaled(&one(), rhs);
        out
    }
}

impl Sub for &SuperVector {
    type Output = SuperVector;

    fn sub(self, rhs: &SuperVector) -> SuperVector {
        let mut out = self.clone();
        out.add_scaled(&-one(), rhs);
        out
    }
}

impl Neg for &SuperVector {
    type Output = SuperVector;

    fn neg(self) -> SuperVector {
        self.scale(&-one())
    }
}

struct Labelled<'a> {
    vector: &'a SuperVector,
    grading: &'a Grading,
}

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (index, c) in self.vector.support() {
            let label = self.grading.label(index);
            let (neg, mag) = if c < &Scalar::zero() { (true, -c) } else { (false, c.clone()) };
            let coeff = if mag == one() { String::new() } else { format_scalar(&mag) };
            match (first, neg) {
                (true, true) => write!(f, "-{coeff}{label}")?,
                (true, false) => write!(f, "{coeff}{label}")?,
                (false, true) => write!(f, " - {coeff}{label}")?,
                (false, false) => write!(f, " + {coeff}{label}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn g() -> Grading {
        Grading::from_bits(&[0, 1, 1])
            .unwrap()
            .with_labels(vec!["i".into(), "j".into(), "k".into()])
            .unwrap()
    }

    #[test]
    fn degrees() {
        let g = g();
        assert_eq!(degree_of(&SuperVector::basis(3, 1), &g).unwrap(), Parity::Odd);
        assert_eq!(degree_of(&SuperVector::zero(3), &g).unwrap(), Parity::Even);
        let mixed = &SuperVector::basis(3, 0) + &SuperVector::basis(3, 1);
        assert_eq!(degree_of(&mixed, &g), Err(Error::NonHomogeneous));
        let odd = &SuperVector::basis(3, 1) + &SuperVector::basis(3, 2);
        assert_eq!(degree_of(&odd, &g).unwrap(), Parity::Odd);
        assert!(degree_of(&SuperVector::zero(2), &g).is_err());
    }

    #[test]
    fn renders_with_labels() {
        let g = g();
        let v = SuperVector::from_coeffs(vec![int(2), int(0), frac(-1, 2)]);
        assert_eq!(v.display(&g).to_string(), "2i - 1/2k");
        assert_eq!(SuperVector::zero(3).display(&g).to_string(), "0");
        assert_eq!((-&SuperVector::basis(3, 1)).display(&g).to_string(), "-j");
    }
}
