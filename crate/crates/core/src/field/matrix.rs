//! Dense matrices over a [`Scalar`] field, row-reduction and the kernels built on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::scalar::Scalar;
use super::vector;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of row reduction: the reduced echelon form and its pivot columns.
#[derive(Clone)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Matrix whose columns are the given vectors, all of length `dim`.
    pub fn from_columns(dim: usize, cols: &[Vec<F>]) -> Result<Self> {
        if cols.iter().any(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(dim, cols.len(), |i, j| cols[j][i].clone()))
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { F::zero() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<F>> = rows.iter().map(|row| row.iter().map(|&x| F::from_int(x)).collect()).collect();
        Self::from_rows(&r).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn try_apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self.apply(v))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// Gauss-Jordan elimination. Exact fields pick the first nonzero pivot; numeric
    /// fields pick the largest entry and treat entries below `eps * max|entry|` as zero.
    pub fn echelon(&self) -> Echelon<F> {
        let mut m = self.clone();
        let scale = self.max_magnitude();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let candidate = if F::EXACT {
                (r..m.rows).find(|&i| !m[(i, c)].is_zero())
            } else {
                (r..m.rows)
                    .filter(|&i| !m[(i, c)].negligible(scale))
                    .max_by(|&a, &b| m[(a, c)].magnitude().total_cmp(&m[(b, c)].magnitude()))
            };
            let Some(p) = candidate else {
                if !F::EXACT {
                    for i in r..m.rows {
                        m[(i, c)] = F::zero();
                    }
                }
                continue;
            };
            m.swap_rows(r, p);
            let inv = F::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
                m[(i, c)] = F::zero();
            }
            pivots.push(c);
            r += 1;
        }
        if !F::EXACT {
            for i in r..m.rows {
                for j in 0..m.cols {
                    m[(i, j)] = F::zero();
                }
            }
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::identity(0));
        }
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| reduced[(i, j + n)].clone()))
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let scale = self.max_magnitude();
        let mut det = F::one();
        for c in 0..n {
            let candidate = if F::EXACT {
                (c..n).find(|&i| !m[(i, c)].is_zero())
            } else {
                (c..n)
                    .filter(|&i| !m[(i, c)].negligible(scale))
                    .max_by(|&a, &b| m[(a, c)].magnitude().total_cmp(&m[(b, c)].magnitude()))
            };
            let Some(p) = candidate else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() / pivot.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - factor.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// `exp(self)` for a nilpotent matrix as the finite sum of `A^k / k!`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("exponential of a non-square matrix".into()));
        }
        let n = self.rows;
        if !self.pow(n).is_zero() {
            return Err(Error::NotNilpotent);
        }
        let mut out = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..n {
            term = (&term * self).scale(&(F::one() / F::from_int(k as i64)));
            if term.is_zero() {
                break;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Matrix exponential: exact for nilpotent input, Pade approximation in numeric mode.
    pub fn exp(&self) -> Result<Self> {
        match self.exp_nilpotent() {
            Ok(e) => Ok(e),
            Err(Error::NotNilpotent) if !F::EXACT => {
                let e = self.to_nalgebra().exp();
                Ok(Self::from_nalgebra(&e).expect("numeric field"))
            }
            Err(e) => Err(e),
        }
    }

    pub fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].to_complex())
    }

    pub fn from_nalgebra(m: &DMatrix<Complex64>) -> Option<Self> {
        let mut data = Vec::with_capacity(m.nrows() * m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                data.push(F::from_complex(m[(i, j)])?);
            }
        }
        Some(Matrix { rows: m.nrows(), cols: m.ncols(), data })
    }

    /// Converts entries into another field through a mapping.
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::<F>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl<F: Scalar> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::add(&self.data, &rhs.data) }
    }
}

impl<F: Scalar> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &rhs.data) }
    }
}

impl<F: Scalar> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x.clone()).collect() }
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::scalar::{Cf, Qi};

    type M = Matrix<Qi>;

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![Qi::int(3), Qi::ratio(-1, 2), Qi::gaussian(0, 1)];
        assert_eq!(M::identity(3).solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn solve_zero_matrix_inconsistent() {
        let b = vec![Qi::int(1), Qi::int(0)];
        assert_eq!(M::zeros(2, 2).solve(&b).unwrap(), None);
        assert!(M::zeros(2, 2).solve(&[Qi::int(1)]).is_err());
    }

    #[test]
    fn kernel_and_rank() {
        let m = M::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = M::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant(), Qi::int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, M::identity(2));
        assert!(M::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn exp_of_nilpotent_examples() {
        assert_eq!(M::zeros(3, 3).exp_nilpotent().unwrap(), M::identity(3));
        let n = M::from_ints(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.exp_nilpotent().unwrap(), M::from_ints(&[&[1, 1], &[0, 1]]));
        assert!(matches!(M::identity(2).exp_nilpotent(), Err(Error::NotNilpotent)));
    }

    #[test]
    fn numeric_exp_matches_scalar_exp() {
        let m = Matrix::<Cf>::diagonal(&[Cf::new(0.5, 0.0), Cf::new(0.0, 1.0)]);
        let e = m.exp().unwrap();
        assert!((e[(0, 0)].0 - Complex64::new(0.5f64.exp(), 0.0)).norm() < 1e-12);
        assert!((e[(1, 1)].0 - Complex64::new(0.0, 1.0).exp()).norm() < 1e-12);
        assert!(Matrix::<Qi>::identity(2).exp().is_err());
    }

    #[test]
    fn numeric_rank_uses_relative_threshold() {
        let m = Matrix::<Cf>::from_rows(&[
            vec![Cf::new(1e6, 0.0), Cf::new(2e6, 0.0)],
            vec![Cf::new(1.0, 0.0), Cf::new(2.0 + 1e-9, 0.0)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }
}
