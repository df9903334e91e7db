//! Coordinate vectors as plain slices.

use super::scalar::Scalar;

pub fn zeros<F: Scalar>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = zeros(n);
    v[i] = F::one();
    v
}

pub fn add<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<F: Scalar>(a: &[F], s: &F) -> Vec<F> {
    a.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn neg<F: Scalar>(a: &[F]) -> Vec<F> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn is_zero<F: Scalar>(a: &[F]) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn approx_eq<F: Scalar>(a: &[F], b: &[F]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

/// Linear combination `sum coeffs[i] * vectors[i]`.
pub fn combination<F: Scalar>(dim: usize, coeffs: &[F], vectors: &[Vec<F>]) -> Vec<F> {
    let mut out = zeros::<F>(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = o.clone() + c.clone() * x.clone();
        }
    }
    out
}

pub fn from_ints<F: Scalar>(xs: &[i64]) -> Vec<F> {
    xs.iter().map(|&x| F::from_int(x)).collect()
}

pub fn format<F: Scalar>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
