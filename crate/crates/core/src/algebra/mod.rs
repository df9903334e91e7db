//! Algebras given by structure constants and the left-symmetric identities.

mod construct;
mod io;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::mpoly::{self, MPoly};
use crate::field::{vector, Matrix, Scalar};

pub use construct::UnitalExtension;
pub use io::{algebra_from_json, algebra_to_json, peek_field, FieldMode};

/// A finite-dimensional algebra: `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// Nothing about the product is assumed; the checkers below decide left-symmetry.
#[derive(Clone, PartialEq)]
pub struct Algebra<F> {
    name: String,
    basis: Vec<String>,
    c: Vec<F>,
}

/// A basis triple on which an identity fails, with both sides of the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<F> {
    pub triple: [usize; 3],
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

impl<F: Scalar> Algebra<F> {
    pub fn zero(name: &str, basis: Vec<String>) -> Self {
        let n = basis.len();
        Algebra { name: name.to_string(), basis, c: vec![F::zero(); n * n * n] }
    }

    /// Basis labelled `e0 .. e{n-1}`.
    pub fn zero_dim(n: usize) -> Self {
        Self::zero(&format!("zero{n}"), (0..n).map(|i| format!("e{i}")).collect())
    }

    /// Builds an algebra from `(left, right, [(basis, value)])` entries; omitted products are zero.
    pub fn from_products(name: &str, basis: &[&str], products: &[(usize, usize, Vec<(usize, F)>)]) -> Self {
        let mut a = Self::zero(name, basis.iter().map(|s| s.to_string()).collect());
        for (i, j, terms) in products {
            for (k, v) in terms {
                a.set(*i, *j, *k, v.clone());
            }
        }
        a
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[self.at(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        let idx = self.at(i, j, k);
        self.c[idx] = v;
    }

    /// `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        let start = self.at(i, j, 0);
        &self.c[start..start + self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vec<F> {
        vector::unit(self.dim(), i)
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "product of vectors of lengths {} and {} in dimension {}",
                x.len(),
                y.len(),
                self.dim()
            )));
        }
        Ok(self.mul(x, y))
    }

    /// Bilinear product; panics on length mismatch.
    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "vector length does not match algebra dimension");
        let mut out = vector::zeros::<F>(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi.clone() * yj.clone();
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// `x(yz) - (xy)z`.
    pub fn associator(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        vector::sub(&self.mul(x, &self.mul(y, z)), &self.mul(&self.mul(x, y), z))
    }

    pub fn lie_bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        vector::sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// First basis triple with `(x,y,z) != (y,x,z)`.
    pub fn left_symmetry_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let lhs = self.associator(&x, &y, &z);
                    let rhs = self.associator(&y, &x, &z);
                    if !vector::approx_eq(&lhs, &rhs) {
                        return Some(Violation { triple: [i, j, k], lhs, rhs });
                    }
                }
            }
        }
        None
    }

    pub fn is_left_symmetric(&self) -> bool {
        self.left_symmetry_violation().is_none()
    }

    /// Jacobi identity for the commutator on basis triples.
    pub fn jacobi_violation(&self) -> Option<Violation<F>> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.lie_bracket(&x, &self.lie_bracket(&y, &z));
                    let b = self.lie_bracket(&y, &self.lie_bracket(&z, &x));
                    let c = self.lie_bracket(&z, &self.lie_bracket(&x, &y));
                    let sum = vector::add(&vector::add(&a, &b), &c);
                    if !vector::is_zero(&sum) {
                        return Some(Violation { triple: [i, j, k], lhs: sum, rhs: vector::zeros(n) });
                    }
                }
            }
        }
        None
    }

    pub fn check_lie_admissible(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// Matrix of `y -> xy`.
    pub fn left_operator(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::<F>::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] = m[(k, j)].clone() + xi.clone() * c.clone();
                    }
                }
            }
        }
        m
    }

    /// Matrix of `y -> yx`.
    pub fn right_operator(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::<F>::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in self.basis_product(j, i).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] = m[(k, j)].clone() + xi.clone() * c.clone();
                    }
                }
            }
        }
        m
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        &self.left_operator(x) - &self.right_operator(x)
    }

    /// `L([x,y]) = [L(x), L(y)]` on basis pairs.
    pub fn check_l_representation(&self) -> bool {
        let n = self.dim();
        let ls: Vec<Matrix<F>> = (0..n).map(|i| self.left_operator(&self.unit(i))).collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let br = self.lie_bracket(&self.unit(i), &self.unit(j));
                self.left_operator(&br).approx_eq(&ls[i].commutator(&ls[j]))
            })
        })
    }

    /// `[L(x), R(z)] = R(xz) - R(z)R(x)` on basis pairs.
    pub fn check_lr_identity(&self) -> bool {
        let n = self.dim();
        let ls: Vec<Matrix<F>> = (0..n).map(|i| self.left_operator(&self.unit(i))).collect();
        let rs: Vec<Matrix<F>> = (0..n).map(|i| self.right_operator(&self.unit(i))).collect();
        (0..n).all(|i| {
            (0..n).all(|k| {
                let lhs = ls[i].commutator(&rs[k]);
                let rhs = &self.right_operator(self.basis_product(i, k)) - &(&rs[k] * &rs[i]);
                lhs.approx_eq(&rhs)
            })
        })
    }

    /// `F_x(y) = xy + x`, the affine vector field attached to `x`.
    pub fn affine_field(&self, x: &[F], y: &[F]) -> Vec<F> {
        vector::add(&self.mul(x, y), x)
    }

    /// `P(x) = det(I + R(x))`.
    pub fn right_det_polynomial(&self, x: &[F]) -> F {
        let n = self.dim();
        (&Matrix::identity(n) + &self.right_operator(x)).determinant()
    }

    /// `det(I + sum x_i R(e_i))` as a polynomial in the coordinates `x_i`.
    pub fn right_det_symbolic(&self) -> MPoly<F> {
        let n = self.dim();
        let rs: Vec<Matrix<F>> = (0..n).map(|i| self.right_operator(&self.unit(i))).collect();
        let entries: Vec<Vec<MPoly<F>>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut p = if r == c { MPoly::one(n) } else { MPoly::zero(n) };
                        for (i, m) in rs.iter().enumerate() {
                            if !m[(r, c)].is_zero() {
                                p = p.add(&MPoly::var(n, i).scale(&m[(r, c)]));
                            }
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        mpoly::determinant(n, &entries)
    }

    /// The same structure constants over another field.
    pub fn map_field<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Algebra<G> {
        Algebra { name: self.name.clone(), basis: self.basis.clone(), c: self.c.iter().map(f).collect() }
    }

    /// Largest modulus among the structure constants.
    pub fn constants_magnitude(&self) -> f64 {
        self.c.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// `(i, j)` pairs with a nonzero product.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !vector::is_zero(self.basis_product(i, j)))
            .collect()
    }

    pub fn format_vector(&self, v: &[F]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| if c.is_one() { b.clone() } else { format!("({c}){b}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<F: Scalar> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name, self.dim())?;
        for (i, j) in self.support() {
            writeln!(f, "  {} {} = {}", self.basis[i], self.basis[j], self.format_vector(self.basis_product(i, j)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Qi;

    fn q(n: i64) -> Qi {
        Qi::int(n)
    }

    /// Basis (e-1, e0, e1).
    fn auslander() -> Algebra<Qi> {
        Algebra::from_products(
            "auslander3",
            &["e-1", "e0", "e1"],
            &[
                (1, 2, vec![(2, q(1))]),
                (1, 0, vec![(0, q(-1))]),
                (2, 0, vec![(1, q(1))]),
                (0, 2, vec![(1, q(1))]),
            ],
        )
    }

    fn v(xs: &[i64]) -> Vec<Qi> {
        vector::from_ints(xs)
    }

    #[test]
    fn auslander_products() {
        let a = auslander();
        assert_eq!(a.mul(&v(&[0, 0, 1]), &v(&[1, 0, 0])), v(&[0, 1, 0]));
        assert!(a.is_left_symmetric());
        assert!(a.check_lie_admissible());
        assert!(a.check_l_representation());
        assert!(a.check_lr_identity());
        assert!(a.lie_bracket(&v(&[0, 0, 1]), &v(&[1, 0, 0])).iter().all(Scalar::is_zero));
    }

    #[test]
    fn auslander_associators() {
        let a = auslander();
        let (em, e1) = (v(&[1, 0, 0]), v(&[0, 0, 1]));
        assert_eq!(a.associator(&e1, &em, &e1), v(&[0, 0, -1]));
        assert_eq!(a.associator(&em, &e1, &e1), v(&[0, 0, -1]));
    }

    #[test]
    fn auslander_operators() {
        let a = auslander();
        assert_eq!(a.left_operator(&v(&[0, 1, 0])), Matrix::diagonal(&v(&[-1, 0, 1])));
        let r1 = a.right_operator(&v(&[0, 0, 1]));
        assert_eq!(r1, Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        assert!(!r1.pow(2).is_zero() && r1.pow(3).is_zero());
        assert!(a.left_operator(&v(&[0, 0, 0])).is_zero());
    }

    #[test]
    fn affine_field_is_tangent_form() {
        let a = auslander();
        assert_eq!(a.affine_field(&v(&[0, 1, 0]), &v(&[0, 0, 1])), v(&[0, 1, 1]));
        let (x, y) = (v(&[2, -1, 3]), v(&[1, 4, -2]));
        let tangent = (&Matrix::identity(3) + &a.right_operator(&y)).apply(&x);
        assert_eq!(a.affine_field(&x, &y), tangent);
    }

    #[test]
    fn auslander_symbolic_determinant_is_one() {
        assert_eq!(auslander().right_det_symbolic(), MPoly::one(3));
        assert_eq!(auslander().right_det_polynomial(&v(&[3, 5, -7])), q(1));
    }

    #[test]
    fn idempotent_line_determinant() {
        let a = Algebra::from_products("idempotent1", &["e"], &[(0, 0, vec![(0, q(1))])]);
        assert_eq!(a.right_det_polynomial(&v(&[4])), q(5));
        assert_eq!(a.right_det_symbolic(), MPoly::one(1).add(&MPoly::var(1, 0)));
    }

    #[test]
    fn violation_witness() {
        let mut a = auslander();
        a.set(2, 0, 1, q(2));
        let w = a.left_symmetry_violation().unwrap();
        assert_ne!(w.lhs, w.rhs);
        let [i, j, k] = w.triple;
        assert_ne!(a.associator(&a.unit(i), &a.unit(j), &a.unit(k)), a.associator(&a.unit(j), &a.unit(i), &a.unit(k)));
        assert!(!a.check_l_representation());
    }

    #[test]
    fn multiply_rejects_bad_lengths() {
        assert!(matches!(auslander().multiply(&v(&[1]), &v(&[1, 0, 0])), Err(Error::DimensionMismatch(_))));
    }
}
