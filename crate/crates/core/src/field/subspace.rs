//! Linear subspaces stored by their reduced row-echelon basis.

use std::fmt;

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector;
use crate::error::{Error, Result};

/// A subspace of `F^ambient`. The basis is the nonzero rows of the reduced echelon
/// form of any spanning set, so two subspaces are equal iff their bases are equal.
#[derive(Clone)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!("spanning vector not in F^{ambient}")));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(vectors)?;
        let ech = m.echelon();
        let basis = (0..ech.pivots.len()).map(|i| ech.reduced.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis, pivots: ech.pivots })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Representative of `v` modulo the subspace that vanishes on every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * b.clone();
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && vector::is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch("intersection of subspaces in different spaces".into()));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let k = self.dim();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| vector::neg(v)));
        let m = Matrix::from_columns(self.ambient, &cols)?;
        let vecs: Vec<Vec<F>> =
            m.kernel().iter().map(|c| vector::combination(self.ambient, &c[..k], &self.basis)).collect();
        Self::span(self.ambient, &vecs)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix<F>) -> Result<Self> {
        let vecs: Vec<Vec<F>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Self::span(m.rows(), &vecs)
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Canonical equality (exact in exact mode, entrywise tolerance in numeric mode).
    pub fn same_as(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.pivots == other.pivots
            && self.basis.iter().zip(&other.basis).all(|(a, b)| vector::approx_eq(a, b))
    }
}

impl<F: Scalar> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl<F: Scalar> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| vector::format(v)).collect();
        write!(f, "span[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::scalar::Qi;

    fn v(xs: &[i64]) -> Vec<Qi> {
        vector::from_ints(xs)
    }

    #[test]
    fn different_spanning_sets_compare_equal() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), Subspace::span(3, &[v(&[0, 1, 0])]).unwrap());
        assert!(a.sum(&b).unwrap().is_whole());
        assert!(a.intersection(&Subspace::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let a = Subspace::span(3, &[v(&[1, 0, 2]), v(&[0, 1, 3])]).unwrap();
        assert_eq!(a.coordinates(&v(&[2, 1, 7])), Some(v(&[2, 1])));
        assert_eq!(a.coordinates(&v(&[0, 0, 1])), None);
    }
}
