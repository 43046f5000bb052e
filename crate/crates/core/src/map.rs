use num::{One, Zero};

use crate::error::Error;
use crate::grading::Grading;
use crate::scalar::{add_to, mul, Scalar};
use crate::vector::SuperVector;

/// A square matrix acting on coordinates; column `j` is the image of `e_j`.
///
/// Evenness is not enforced here since odd maps are representable; use
/// [`GradedLinearMap::check_even`] wherever a map must preserve degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedLinearMap {
    dim: usize,
    /// Row-major entries.
    entries: Vec<Scalar>,
}

impl GradedLinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = GradedLinearMap { dim, entries: vec![Scalar::zero(); dim * dim] };
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(GradedLinearMap { dim, entries })
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_images(images: Vec<SuperVector>) -> Result<Self, Error> {
        let dim = images.len();
        let mut entries = vec![Scalar::zero(); dim * dim];
        for (col, image) in images.iter().enumerate() {
            image.check_dim(dim)?;
            for (row, c) in image.coeffs().iter().enumerate() {
                entries[row * dim + col] = c.clone();
            }
        }
        Ok(GradedLinearMap { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        *self == GradedLinearMap::identity(self.dim)
    }

    pub fn apply(&self, x: &SuperVector) -> Result<SuperVector, Error> {
        x.check_dim(self.dim)?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &SuperVector) -> SuperVector {
        let coeffs = self
            .rows()
            .map(|row| {
                x.support().fold(Scalar::zero(), |mut acc, (col, c)| {
                    let m = &row[col];
                    if !m.is_zero() {
                        add_to(&mut acc, &mul(m, c));
                    }
                    acc
                })
            })
            .collect();
        SuperVector::from_coeffs(coeffs)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GradedLinearMap) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let d = self.dim;
        let mut entries = vec![Scalar::zero(); d * d];
        for r in 0..d {
            for c in 0..d {
                let mut acc = Scalar::zero();
                for k in 0..d {
                    let (a, b) = (self.entry(r, k), other.entry(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                entries[r * d + c] = acc;
            }
        }
        Ok(GradedLinearMap { dim: d, entries })
    }

    /// `self^n`, with `self^0` the identity.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = GradedLinearMap::identity(self.dim);
        for _ in 0..n {
            acc = self.compose(&acc).expect("same dimension");
        }
        acc
    }

    pub fn is_even(&self, grading: &Grading) -> bool {
        self.check_even(grading).is_ok()
    }

    /// Fails on the first nonzero entry crossing degree blocks.
    pub fn check_even(&self, grading: &Grading) -> Result<(), Error> {
        if grading.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: grading.dim(), found: self.dim });
        }
        for row in 0..self.dim {
            for col in 0..self.dim {
                if !self.entry(row, col).is_zero() && grading.degree(row) != grading.degree(col) {
                    return Err(Error::NotEven { row, col });
                }
            }
        }
        Ok(())
    }
}

/// `map^n` for an arbitrary matrix; free-function alias of [`GradedLinearMap::power`].
pub fn map_power(map: &GradedLinearMap, n: u32) -> GradedLinearMap {
    map.power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn beta(a: i64, b: i64) -> GradedLinearMap {
        let e = |k| SuperVector::basis(3, k);
        GradedLinearMap::from_images(vec![
            e(0).scale(&int(a)),
            &e(1) + &e(2).scale(&int(b)),
            e(2).scale(&int(a)),
        ])
        .unwrap()
    }

    #[test]
    fn powers_of_beta() {
        let b = beta(2, 3);
        let j = SuperVector::basis(3, 1);
        assert_eq!(b.power(0), GradedLinearMap::identity(3));
        assert_eq!(b.apply(&j).unwrap(), SuperVector::from_coeffs(vec![int(0), int(1), int(3)]));
        // β²(j) = β(j + 3k) = j + 3k + 6k
        assert_eq!(b.power(2).apply(&j).unwrap(), SuperVector::from_coeffs(vec![int(0), int(1), int(9)]));
    }

    #[test]
    fn evenness() {
        let g = Grading::from_bits(&[0, 1, 1]).unwrap();
        assert!(beta(2, 3).is_even(&g));
        assert!(GradedLinearMap::identity(3).is_even(&g));
        let e = |k| SuperVector::basis(3, k);
        let odd = GradedLinearMap::from_images(vec![e(1), e(1), e(2)]).unwrap();
        assert_eq!(odd.check_even(&g), Err(Error::NotEven { row: 1, col: 0 }));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(GradedLinearMap::from_rows(vec![vec![int(1)], vec![int(0), int(1)]]).is_err());
        let m = GradedLinearMap::identity(2);
        assert!(m.compose(&GradedLinearMap::identity(3)).is_err());
        assert!(m.apply(&SuperVector::zero(3)).is_err());
    }
}
