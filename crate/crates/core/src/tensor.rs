//! Dense structure-constant tensors for binary and ternary products.

use num::Zero;

use crate::error::Error;
use crate::grading::{Grading, Parity};
use crate::map::GradedLinearMap;
use crate::scalar::{mul, Scalar};
use crate::vector::SuperVector;

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored as one output vector per basis pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryStructure {
    dim: usize,
    table: Vec<SuperVector>,
}

/// `{e_i, e_j, e_l} = Σ_k t[i][j][l][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryStructure {
    dim: usize,
    table: Vec<SuperVector>,
}

impl BinaryStructure {
    pub fn zero(dim: usize) -> Self {
        BinaryStructure { dim, table: vec![SuperVector::zero(dim); dim * dim] }
    }

    /// Builds the table from a function on basis pairs.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> SuperVector) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.dim(), dim, "product of basis pair has wrong dimension");
                table.push(v);
            }
        }
        BinaryStructure { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperVector {
        &self.table[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: SuperVector) {
        assert_eq!(value.dim(), self.dim);
        self.table[i * self.dim + j] = value;
    }

    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let mut coeffs = self.get(i, j).coeffs().to_vec();
        coeffs[k] = value;
        self.set(i, j, SuperVector::from_coeffs(coeffs));
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(SuperVector::is_zero)
    }

    /// Bilinear extension of the basis table.
    pub fn eval(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        let mut out = SuperVector::zero(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled(&mul(xi, yj), self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Post-composes every product with `map`.
    pub fn map_outputs(&self, map: &GradedLinearMap) -> Self {
        BinaryStructure { dim: self.dim, table: self.table.iter().map(|v| map.apply_unchecked(v)).collect() }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        BinaryStructure { dim: self.dim, table: self.table.iter().map(|v| v.scale(factor)).collect() }
    }

    /// Nonzero products `(i, j, value)` in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &SuperVector)> {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(n, v)| (n / self.dim, n % self.dim, v))
    }

    /// Basis pairs whose product leaves the expected degree block.
    pub fn grading_violations(&self, grading: &Grading) -> Vec<(Vec<usize>, SuperVector)> {
        let mut out = Vec::new();
        for (i, j, v) in self.nonzero() {
            let expected = grading.degree(i) + grading.degree(j);
            let stray = off_block(v, grading, expected);
            if !stray.is_zero() {
                out.push((vec![i, j], stray));
            }
        }
        out
    }
}

impl TernaryStructure {
    pub fn zero(dim: usize) -> Self {
        TernaryStructure { dim, table: vec![SuperVector::zero(dim); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> SuperVector) -> Self {
        let mut table = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    let v = f(i, j, l);
                    assert_eq!(v.dim(), dim, "product of basis triple has wrong dimension");
                    table.push(v);
                }
            }
        }
        TernaryStructure { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.dim + j) * self.dim + l
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &SuperVector {
        &self.table[self.index(i, j, l)]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, value: SuperVector) {
        assert_eq!(value.dim(), self.dim);
        let n = self.index(i, j, l);
        self.table[n] = value;
    }

    pub fn set_entry(&mut self, i: usize, j: usize, l: usize, k: usize, value: Scalar) {
        let mut coeffs = self.get(i, j, l).coeffs().to_vec();
        coeffs[k] = value;
        self.set(i, j, l, SuperVector::from_coeffs(coeffs));
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(SuperVector::is_zero)
    }

    pub fn eval(&self, x: &SuperVector, y: &SuperVector, z: &SuperVector) -> Result<SuperVector, Error> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        z.check_dim(self.dim)?;
        let mut out = SuperVector::zero(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let xy = mul(xi, yj);
                for (l, zl) in z.support() {
                    out.add_scaled(&mul(&xy, zl), self.get(i, j, l));
                }
            }
        }
        Ok(out)
    }

    pub fn map_outputs(&self, map: &GradedLinearMap) -> Self {
        TernaryStructure { dim: self.dim, table: self.table.iter().map(|v| map.apply_unchecked(v)).collect() }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        TernaryStructure { dim: self.dim, table: self.table.iter().map(|v| v.scale(factor)).collect() }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &SuperVector)> {
        let d = self.dim;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(n, v)| (n / (d * d), (n / d) % d, n % d, v))
    }

    pub fn grading_violations(&self, grading: &Grading) -> Vec<(Vec<usize>, SuperVector)> {
        let mut out = Vec::new();
        for (i, j, l, v) in self.nonzero() {
            let expected = grading.degree(i) + grading.degree(j) + grading.degree(l);
            let stray = off_block(v, grading, expected);
            if !stray.is_zero() {
                out.push((vec![i, j, l], stray));
            }
        }
        out
    }
}

/// The part of `v` lying outside the `expected` degree block.
fn off_block(v: &SuperVector, grading: &Grading, expected: Parity) -> SuperVector {
    SuperVector::from_coeffs(
        v.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if grading.degree(k) == expected { Scalar::zero() } else { c.clone() })
            .collect(),
    )
}
