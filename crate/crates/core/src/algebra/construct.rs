//! Building new algebras from old: unit adjunction, direct sums, quotients, subalgebras
//! and changes of basis.

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::{vector, Matrix, Scalar, Subspace};

/// `g1 = F 1 + g`; the unit is the last basis vector of `extended`.
#[derive(Clone)]
pub struct UnitalExtension<F> {
    pub base: Algebra<F>,
    pub extended: Algebra<F>,
}

impl<F: Scalar> std::fmt::Debug for UnitalExtension<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(&self.extended, f)
    }
}

impl<F: Scalar> UnitalExtension<F> {
    pub fn new(base: &Algebra<F>) -> Self {
        let n = base.dim();
        let mut labels = base.basis().to_vec();
        labels.push("1".into());
        let mut ext = Algebra::zero(&format!("{}+1", base.name()), labels);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    ext.set(i, j, k, base.constant(i, j, k).clone());
                }
            }
        }
        for i in 0..=n {
            ext.set(n, i, i, F::one());
            ext.set(i, n, i, F::one());
        }
        UnitalExtension { base: base.clone(), extended: ext }
    }

    pub fn unit_index(&self) -> usize {
        self.base.dim()
    }

    pub fn unit(&self) -> Vec<F> {
        self.extended.unit(self.unit_index())
    }

    /// `1 + x` for `x` in the base algebra.
    pub fn lift(&self, x: &[F]) -> Vec<F> {
        let mut v = x.to_vec();
        v.push(F::one());
        v
    }

    /// Embeds `x` from the base algebra with zero unit component.
    pub fn embed(&self, x: &[F]) -> Vec<F> {
        let mut v = x.to_vec();
        v.push(F::zero());
        v
    }

    /// `P1(v) = det R1(v)`.
    pub fn extended_det(&self, v: &[F]) -> F {
        self.extended.right_operator(v).determinant()
    }
}

impl<F: Scalar> Algebra<F> {
    pub fn unital_extension(&self) -> UnitalExtension<F> {
        UnitalExtension::new(self)
    }

    /// `A (+) B` with `A`'s basis first; labels of `B` are primed when they clash.
    pub fn direct_sum(&self, other: &Algebra<F>) -> Algebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.basis().to_vec();
        for l in other.basis() {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let mut out = Algebra::zero(&format!("{}+{}", self.name(), other.name()), labels);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set(i, j, k, self.constant(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    out.set(n + i, n + j, n + k, other.constant(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Quotient by a two-sided ideal. The basis is the images of the standard basis
    /// vectors at the non-pivot columns of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Algebra<F>> {
        let n = self.dim();
        if ideal.ambient() != n {
            return Err(Error::DimensionMismatch("ideal lives in another space".into()));
        }
        for b in ideal.basis() {
            for i in 0..n {
                let e = self.unit(i);
                if !ideal.contains(&self.mul(&e, b)) || !ideal.contains(&self.mul(b, &e)) {
                    return Err(Error::BadParameters("subspace is not a two-sided ideal".into()));
                }
            }
        }
        let pivots: Vec<usize> = ideal.basis().iter().map(|r| r.iter().position(|x| !x.is_zero()).unwrap()).collect();
        let keep: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let labels: Vec<String> = keep.iter().map(|&i| self.basis()[i].clone()).collect();
        let mut out = Algebra::zero(&format!("{}/I", self.name()), labels);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let r = ideal.reduce(self.basis_product(i, j));
                for (k, &col) in keep.iter().enumerate() {
                    out.set(a, b, k, r[col].clone());
                }
            }
        }
        Ok(out)
    }

    /// The subalgebra on a product-closed subspace, in its echelon basis.
    pub fn subalgebra(&self, sub: &Subspace<F>) -> Result<Algebra<F>> {
        let basis = sub.basis();
        let labels: Vec<String> = (0..basis.len()).map(|i| format!("s{i}")).collect();
        let mut out = Algebra::zero(&format!("{}|sub", self.name()), labels);
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let coords = sub
                    .coordinates(&self.mul(x, y))
                    .ok_or_else(|| Error::BadParameters("subspace is not closed under the product".into()))?;
                for (k, c) in coords.into_iter().enumerate() {
                    out.set(a, b, k, c);
                }
            }
        }
        Ok(out)
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>, labels: Vec<String>) -> Result<Algebra<F>> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n || labels.len() != n {
            return Err(Error::DimensionMismatch("change of basis must be square of the algebra's size".into()));
        }
        let inv = p.inverse().ok_or_else(|| Error::BadParameters("change of basis is singular".into()))?;
        let cols: Vec<Vec<F>> = (0..n).map(|j| p.column(j)).collect();
        let mut out = Algebra::zero(self.name(), labels);
        for i in 0..n {
            for j in 0..n {
                let r = inv.apply(&self.mul(&cols[i], &cols[j]));
                for (k, c) in r.into_iter().enumerate() {
                    out.set(i, j, k, c);
                }
            }
        }
        Ok(out)
    }

    /// Whether `x -> p x` is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Algebra<F>, p: &Matrix<F>) -> bool {
        let n = self.dim();
        other.dim() == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let lhs = p.apply(self.basis_product(i, j));
                    let rhs = other.mul(&p.column(i), &p.column(j));
                    vector::approx_eq(&lhs, &rhs)
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Qi;

    fn auslander() -> Algebra<Qi> {
        let q = Qi::int;
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

    #[test]
    fn extension_has_two_sided_unit() {
        let e = auslander().unital_extension();
        assert!(e.extended.is_left_symmetric());
        let one = e.unit();
        for i in 0..4 {
            let x = e.extended.unit(i);
            assert_eq!(e.extended.mul(&one, &x), x);
            assert_eq!(e.extended.mul(&x, &one), x);
        }
        // g * g1 lies in g
        for i in 0..3 {
            for j in 0..4 {
                assert!(e.extended.basis_product(i, j)[3].is_zero());
            }
        }
    }

    #[test]
    fn extended_det_restricts_to_p() {
        let a = auslander();
        let e = a.unital_extension();
        let x = vector::from_ints(&[2, -3, 5]);
        assert_eq!(e.extended_det(&e.lift(&x)), a.right_det_polynomial(&x));
    }

    #[test]
    fn quotient_of_direct_sum() {
        let a = auslander();
        let idem = Algebra::from_products("idempotent1", &["f"], &[(0, 0, vec![(0, Qi::int(1))])]);
        let s = a.direct_sum(&idem);
        let ideal = Subspace::span(4, &[vector::unit(4, 3)]).unwrap();
        let quot = s.quotient(&ideal).unwrap();
        assert_eq!(quot.dim(), 3);
        assert!(quot.is_isomorphism(&a, &Matrix::identity(3)));
        let not_ideal = Subspace::span(4, &[vector::unit(4, 2)]).unwrap();
        assert!(s.quotient(&not_ideal).is_err());
    }

    #[test]
    fn change_of_basis_is_isomorphism() {
        let a = auslander();
        let p = Matrix::<Qi>::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[0, 2, 1]]);
        let b = a.change_basis(&p, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(b.is_left_symmetric());
        assert!(b.is_isomorphism(&a, &p));
    }

    #[test]
    fn subalgebra_of_span_e0() {
        let a = auslander();
        let sub = a.subalgebra(&Subspace::span(3, &[vector::unit(3, 1)]).unwrap()).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.basis_product(0, 0)[0].is_zero());
        assert!(a.subalgebra(&Subspace::span(3, &[vector::unit(3, 0), vector::unit(3, 2)]).unwrap()).is_err());
    }
}
