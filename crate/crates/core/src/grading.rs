//! Superspaces: a basis with a ℤ₂ degree on every element.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A degree in ℤ₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self, Error> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::InvalidGrading(format!("degree {other} is not 0 or 1"))),
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// Product in ℤ₂, the exponent of a Koszul sign `(-1)^(|x||y|)`.
    pub fn times(self, other: Parity) -> Parity {
        if self == Parity::Odd && other == Parity::Odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// `(-1)^p` as a signed integer.
pub fn koszul(p: Parity) -> i64 {
    match p {
        Parity::Even => 1,
        Parity::Odd => -1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<Parity>,
    labels: Option<Vec<String>>,
}

impl Grading {
    pub fn new(degrees: Vec<Parity>) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::InvalidGrading("dimension must be positive".into()));
        }
        Ok(Grading { degrees, labels: None })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self, Error> {
        let degrees = bits.iter().map(|&b| Parity::from_bit(b)).collect::<Result<_, _>>()?;
        Grading::new(degrees)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.degrees.len() {
            return Err(Error::DimensionMismatch { expected: self.degrees.len(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, index: usize) -> Parity {
        self.degrees[index]
    }

    pub fn degrees(&self) -> &[Parity] {
        &self.degrees
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of a basis index, falling back to `e<index>`.
    pub fn label(&self, index: usize) -> String {
        match &self.labels {
            Some(labels) => labels[index].clone(),
            None => format!("e{index}"),
        }
    }

    /// Same degrees, ignoring labels.
    pub fn same_space(&self, other: &Grading) -> bool {
        self.degrees == other.degrees
    }

    pub fn indices_of(&self, parity: Parity) -> impl Iterator<Item = usize> + '_ {
        self.degrees.iter().enumerate().filter(move |(_, &d)| d == parity).map(|(i, _)| i)
    }
}

/// All tuples of basis indices of length `arity`, in lexicographic order.
pub fn basis_tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(arity as u32);
    (0..total).map(move |mut code| {
        let mut tuple = vec![0; arity];
        for slot in tuple.iter_mut().rev() {
            *slot = code % dim;
            code /= dim;
        }
        tuple
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_arithmetic() {
        use Parity::*;
        assert_eq!(Odd + Odd, Even);
        assert_eq!(Odd + Even, Odd);
        assert_eq!(Odd.times(Odd), Odd);
        assert_eq!(Odd.times(Even), Even);
        assert!(Parity::from_bit(2).is_err());
    }

    #[test]
    fn tuples_are_lexicographic() {
        let all: Vec<_> = basis_tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(basis_tuples(3, 5).count(), 243);
    }

    #[test]
    fn rejects_bad_gradings() {
        assert!(Grading::from_bits(&[]).is_err());
        assert!(Grading::from_bits(&[0, 3]).is_err());
        let g = Grading::from_bits(&[0, 1]).unwrap();
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        assert_eq!(g.label(1), "e1");
    }
}
