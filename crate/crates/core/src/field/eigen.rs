//! Eigenvalues inside the field, generalized eigenspaces and the semisimple part of an operator.

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::matrix::Matrix;
use super::poly::{characteristic_polynomial, UPoly};
use super::scalar::{numeric_eps, Cf, Qi, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Distinct eigenvalues of `m` lying in the field, sorted by (re, im).
///
/// Exact mode reports [`Error::NumericFallback`] when the characteristic polynomial keeps
/// a factor without roots in Q(i).
pub fn eigenvalues_in_field<F: Scalar>(m: &Matrix<F>) -> Result<Vec<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("eigenvalues of a non-square matrix".into()));
    }
    let mut vals = F::eigenvalues(m)?;
    vals.sort_by(|a, b| a.sort_cmp(b));
    Ok(vals)
}

pub(crate) fn exact_eigenvalues(m: &Matrix<Qi>) -> Result<Vec<Qi>> {
    let chi = characteristic_polynomial(m);
    let (roots, rest) = gaussian_rational_roots(&chi);
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::NumericFallback { polynomial: rest.to_string() });
    }
    Ok(roots)
}

/// Splits off every root of `p` in Q(i).
///
/// Candidates come from numerically located roots of the squarefree part: if the
/// squarefree part has integer content `d` after clearing denominators, then `d * root`
/// is a Gaussian integer, so rounding `d * z` recovers it. Every candidate is verified by
/// exact evaluation; the returned remainder has no roots in Q(i) that were found.
pub fn gaussian_rational_roots(p: &UPoly<Qi>) -> (Vec<Qi>, UPoly<Qi>) {
    let mut rest = p.squarefree_part();
    let mut roots = Vec::new();
    while let Some(deg) = rest.degree().filter(|&d| d > 0) {
        if deg == 1 {
            let c = rest.coeffs();
            roots.push(-(c[0].clone() / c[1].clone()));
            rest = UPoly::constant(Qi::one());
            break;
        }
        let Some(approx) = numeric_roots(&rest) else { break };
        let denom = rest.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denominator_lcm()));
        let d = denom.to_f64().unwrap_or(f64::INFINITY);
        let found = approx.iter().find_map(|z| {
            let scaled = z * d;
            let re = BigInt::from(scaled.re.round() as i128);
            let im = BigInt::from(scaled.im.round() as i128);
            let cand = Qi::new(
                BigRational::new(re, denom.clone()),
                BigRational::new(im, denom.clone()),
            );
            rest.eval(&cand).is_zero().then_some(cand)
        });
        match found {
            Some(root) => {
                rest = rest.div_rem(&UPoly::linear(root.clone())).0;
                roots.push(root);
            }
            None => break,
        }
    }
    roots.sort();
    (roots, rest)
}

fn numeric_roots(p: &UPoly<Qi>) -> Option<Vec<Complex64>> {
    let monic = p.monic();
    let coeffs: Vec<Complex64> = monic.coeffs().iter().map(Scalar::to_complex).collect();
    let n = coeffs.len() - 1;
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -coeffs[i]
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let schur = Schur::try_new(companion, 1e-14, 10_000)?;
    let vals = schur.eigenvalues()?;
    Some(vals.iter().map(|&z| newton_polish(&coeffs, z)).collect())
}

fn newton_polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (mut v, mut dv) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        if dv.norm() == 0.0 {
            break;
        }
        z -= v / dv;
    }
    z
}

pub(crate) fn numeric_eigenvalues(m: &Matrix<Cf>) -> Result<Vec<Cf>> {
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = m.max_magnitude().max(1.0);
    let fallback = || Error::NumericFallback { polynomial: "numeric Schur decomposition did not converge".into() };
    let schur = Schur::try_new(m.to_nalgebra(), numeric_eps() * 1e-3, 100_000).ok_or_else(fallback)?;
    let vals = schur.eigenvalues().ok_or_else(fallback)?;
    // Defective eigenvalues split by roughly eps^(1/multiplicity); cluster loosely.
    let radius = numeric_eps().sqrt() * scale;
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for &z in vals.iter() {
        match clusters.iter_mut().find(|c| c.iter().any(|w| (w - z).norm() <= radius)) {
            Some(c) => c.push(z),
            None => clusters.push(vec![z]),
        }
    }
    let snap = |x: f64| if x.abs() <= numeric_eps() * scale { 0.0 } else { x };
    Ok(clusters
        .into_iter()
        .map(|c| {
            let mean = c.iter().sum::<Complex64>() / c.len() as f64;
            Cf::new(snap(mean.re), snap(mean.im))
        })
        .collect())
}

/// Kernel of `(m - lambda I)^n`.
pub fn generalized_eigenspace<F: Scalar>(m: &Matrix<F>, lambda: &F) -> Result<Subspace<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("eigenspace of a non-square matrix".into()));
    }
    let n = m.rows();
    let shifted = m - &Matrix::identity(n).scale(lambda);
    Subspace::span(n, &shifted.pow(n).kernel())
}

/// Semisimple part `S` of the Jordan-Chevalley decomposition: `S` commutes with `m`,
/// `m - S` is nilpotent and `S` is a polynomial in `m`.
///
/// Exact mode runs Newton's iteration `S <- S - q(S) q'(S)^-1` on the squarefree part
/// `q` of the characteristic polynomial, so no eigenvalue needs to be representable.
pub fn jordan_chevalley_semisimple<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("semisimple part of a non-square matrix".into()));
    }
    if F::EXACT {
        semisimple_by_newton(m)
    } else {
        semisimple_by_eigenspaces(m)
    }
}

fn semisimple_by_newton<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let q = characteristic_polynomial(m).squarefree_part();
    let dq = q.derivative();
    let mut s = m.clone();
    // Quadratic convergence: the defect's nilpotency index halves every step.
    for _ in 0..=usize::BITS {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            return Ok(s);
        }
        let inv = dq.eval_matrix(&s).inverse().ok_or(Error::NotNilpotent)?;
        s = &s - &(&qs * &inv);
    }
    Err(Error::NotNilpotent)
}

fn semisimple_by_eigenspaces<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.rows();
    let vals = eigenvalues_in_field(m)?;
    let mut cols = Vec::new();
    let mut diag = Vec::new();
    for v in &vals {
        for b in generalized_eigenspace(m, v)?.basis() {
            cols.push(b.clone());
            diag.push(v.clone());
        }
    }
    if cols.len() != n {
        return Err(Error::NumericFallback { polynomial: "generalized eigenspaces do not span".into() });
    }
    let basis = Matrix::from_columns(n, &cols)?;
    let inv = basis.inverse().ok_or(Error::NumericFallback { polynomial: "singular eigenbasis".into() })?;
    Ok(&(&basis * &Matrix::diagonal(&diag)) * &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::vector;

    type M = Matrix<Qi>;

    #[test]
    fn diagonal_eigenvalues() {
        let m = M::diagonal(&vector::from_ints(&[1, -1, 0]));
        assert_eq!(eigenvalues_in_field(&m).unwrap(), vector::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn rotation_has_gaussian_eigenvalues() {
        let m = M::from_ints(&[&[0, -1], &[1, 0]]);
        assert_eq!(eigenvalues_in_field(&m).unwrap(), vec![Qi::gaussian(0, -1), Qi::gaussian(0, 1)]);
    }

    #[test]
    fn sqrt_two_falls_back() {
        // companion matrix of t^2 - 2
        let m = M::from_ints(&[&[0, 2], &[1, 0]]);
        assert!(matches!(eigenvalues_in_field(&m), Err(Error::NumericFallback { .. })));
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (t - 2/3)(t + 5/7)(t - (1/2 + 3/4 i)), expanded exactly
        let r = [Qi::ratio(2, 3), Qi::ratio(-5, 7), Qi::ratio(1, 2) + Qi::ratio(3, 4) * Qi::imag_unit()];
        let p = r.iter().fold(UPoly::constant(Qi::int(1)), |acc, x| acc.mul(&UPoly::linear(x.clone())));
        let (mut roots, rest) = gaussian_rational_roots(&p);
        roots.sort();
        let mut expected = r.to_vec();
        expected.sort();
        assert_eq!(roots, expected);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn generalized_eigenspace_examples() {
        let d = M::diagonal(&vector::from_ints(&[1, 2]));
        assert_eq!(
            generalized_eigenspace(&d, &Qi::int(1)).unwrap(),
            Subspace::span(2, &[vector::from_ints(&[1, 0])]).unwrap()
        );
        let n = M::from_ints(&[&[0, 1], &[0, 0]]);
        assert!(generalized_eigenspace(&n, &Qi::int(0)).unwrap().is_whole());
        assert!(generalized_eigenspace(&d, &Qi::int(5)).unwrap().is_zero());
    }

    #[test]
    fn semisimple_part_examples() {
        let n = M::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(jordan_chevalley_semisimple(&n).unwrap().is_zero());
        let d = M::diagonal(&vector::from_ints(&[3, -1, 2]));
        assert_eq!(jordan_chevalley_semisimple(&d).unwrap(), d);
        let j = M::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(jordan_chevalley_semisimple(&j).unwrap(), M::identity(2));
    }

    #[test]
    fn semisimple_part_without_rational_eigenvalues() {
        // Jordan block of the companion matrix of t^2 - 2: eigenvalues are not in Q(i).
        let c = M::from_ints(&[&[0, 2, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, 2], &[0, 0, 1, 0]]);
        let s = jordan_chevalley_semisimple(&c).unwrap();
        assert!(s.commutator(&c).is_zero());
        assert!((&c - &s).is_nilpotent());
        assert!(!s.is_zero());
    }
}
