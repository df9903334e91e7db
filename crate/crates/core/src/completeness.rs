//! Completeness of a left-symmetric algebra and the identities around `P(x) = det(I + R(x))`.
//!
//! The decision is linear: the algebra is complete iff `Tr R(e_i) = 0` for every basis
//! vector. The nilpotency, `P = 1` and nonvanishing criteria are evaluated as
//! independent cross-checks.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Algebra, UnitalExtension};
use crate::error::{Error, Result};
use crate::field::mpoly::Exponents;
use crate::field::{eigenvalues_in_field, vector, Matrix, Scalar, UPoly};

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Criterion {
    fn pass() -> Self {
        Criterion { holds: true, witness: None }
    }

    fn fail(witness: String) -> Self {
        Criterion { holds: false, witness: Some(witness) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessReport {
    pub verdict: bool,
    /// `R(x)` nilpotent for all `x`.
    pub nilpotent: Option<Criterion>,
    /// `P(x) = 1` identically.
    pub det_is_one: Option<Criterion>,
    /// `P(x) != 0` for all `x`.
    pub det_nonvanishing: Option<Criterion>,
    /// `Tr R(x) = 0` for all `x`.
    pub trace_zero: Criterion,
    /// `Tr R(e_i)` for each basis vector.
    pub traces: Vec<String>,
}

impl CompletenessReport {
    /// Whether every evaluated criterion agrees with the verdict.
    pub fn consistent(&self) -> bool {
        [&self.nilpotent, &self.det_is_one, &self.det_nonvanishing]
            .iter()
            .all(|c| c.as_ref().is_none_or(|c| c.holds == self.verdict))
    }
}

fn require_left_symmetric<F: Scalar>(a: &Algebra<F>) -> Result<()> {
    match a.left_symmetry_violation() {
        None => Ok(()),
        Some(w) => {
            let [i, j, k] = w.triple;
            let b = a.basis();
            Err(Error::NotLeftSymmetric(format!("associator not symmetric on ({}, {}, {})", b[i], b[j], b[k])))
        }
    }
}

fn right_operators<F: Scalar>(a: &Algebra<F>) -> Vec<Matrix<F>> {
    (0..a.dim()).map(|i| a.right_operator(&a.unit(i))).collect()
}

fn trace_criterion<F: Scalar>(a: &Algebra<F>) -> (Criterion, Vec<String>) {
    let traces: Vec<F> = right_operators(a).iter().map(Matrix::trace).collect();
    let c = match traces.iter().position(|t| !t.is_zero()) {
        Some(i) => Criterion::fail(format!("Tr R({}) = {}", a.basis()[i], traces[i])),
        None => Criterion::pass(),
    };
    (c, traces.iter().map(ToString::to_string).collect())
}

/// Decides completeness by the trace criterion.
pub fn is_complete<F: Scalar>(a: &Algebra<F>) -> Result<CompletenessReport> {
    require_left_symmetric(a)?;
    let (trace_zero, traces) = trace_criterion(a);
    Ok(CompletenessReport {
        verdict: trace_zero.holds,
        nilpotent: None,
        det_is_one: None,
        det_nonvanishing: None,
        trace_zero,
        traces,
    })
}

/// Evaluates all four criteria.
pub fn check_all_criteria<F: Scalar>(a: &Algebra<F>) -> Result<CompletenessReport> {
    let mut report = is_complete(a)?;
    report.nilpotent = Some(nilpotency_criterion(a));
    let p = a.right_det_symbolic();
    report.det_is_one = Some(match p.as_constant() {
        Some(c) if c.is_one() => Criterion::pass(),
        _ => Criterion::fail(format!("P = {}", p.fmt_with(a.basis()))),
    });
    report.det_nonvanishing = Some(nonvanishing_criterion(a, p.as_constant().is_some_and(|c| c.is_one())));
    Ok(report)
}

/// `Tr(R(x)^k)` as coefficients over monomials in the coordinates of `x`, for `k = 1..=n`.
///
/// The coefficient of `x^alpha` in `R(x)^k` is the sum of the words in the `R(e_i)` with
/// content `alpha`, built up one letter at a time.
pub fn power_trace_coefficients<F: Scalar>(a: &Algebra<F>) -> Vec<BTreeMap<Exponents, F>> {
    let n = a.dim();
    let rs = right_operators(a);
    let mut level: BTreeMap<Exponents, Matrix<F>> = BTreeMap::new();
    level.insert(vec![0; n], Matrix::identity(n));
    let mut out = Vec::new();
    for _ in 1..=n {
        let mut next: BTreeMap<Exponents, Matrix<F>> = BTreeMap::new();
        for (alpha, m) in &level {
            for (i, r) in rs.iter().enumerate() {
                let prod = m * r;
                if prod.is_zero() {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[i] += 1;
                match next.get_mut(&beta) {
                    Some(acc) => *acc = &*acc + &prod,
                    None => {
                        next.insert(beta, prod);
                    }
                }
            }
        }
        next.retain(|_, m| !m.is_zero());
        out.push(next.iter().map(|(e, m)| (e.clone(), m.trace())).filter(|(_, t)| !t.is_zero()).collect());
        level = next;
    }
    out
}

fn nilpotency_criterion<F: Scalar>(a: &Algebra<F>) -> Criterion {
    for (k, coeffs) in power_trace_coefficients(a).iter().enumerate() {
        if let Some((alpha, t)) = coeffs.iter().next() {
            let mono: Vec<String> = alpha
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { a.basis()[i].clone() } else { format!("{}^{e}", a.basis()[i]) })
                .collect();
            return Criterion::fail(format!("Tr R(x)^{} has coefficient {t} at {}", k + 1, mono.join("*")));
        }
    }
    Criterion::pass()
}

/// Sample grid for the nonvanishing check: all points with coordinates in `{-1, 0, 1}`
/// when that is small, otherwise the axes and pairwise diagonals.
fn sample_grid<F: Scalar>(n: usize) -> Vec<Vec<F>> {
    if n <= 6 {
        let mut pts = vec![Vec::new()];
        for _ in 0..n {
            pts = pts.into_iter().flat_map(|p: Vec<i64>| [-1, 0, 1].map(|c| [p.clone(), vec![c]].concat())).collect();
        }
        return pts.iter().map(|p| vector::from_ints(p)).collect();
    }
    let mut pts = Vec::new();
    for i in 0..n {
        for s in [-2, -1, 1, 2] {
            let mut p = vec![0; n];
            p[i] = s;
            pts.push(p.clone());
            for j in i + 1..n {
                for t in [-1, 1] {
                    p[j] = t;
                    pts.push(p.clone());
                    p[j] = 0;
                }
            }
        }
    }
    pts.iter().map(|p| vector::from_ints(p)).collect()
}

fn nonvanishing_criterion<F: Scalar>(a: &Algebra<F>, det_is_one: bool) -> Criterion {
    let n = a.dim();
    let grid = sample_grid::<F>(n);
    if let Some(x) = grid.iter().find(|x| a.right_det_polynomial(x).is_zero()) {
        return Criterion::fail(format!("P({}) = 0", a.format_vector(x)));
    }
    if det_is_one {
        return Criterion::pass();
    }
    // P is a nonconstant polynomial, so it vanishes somewhere over C: find a zero on a
    // line t -> t v where it is nonconstant.
    for v in &grid {
        let line = line_polynomial(a, v);
        if line.degree().unwrap_or(0) == 0 {
            continue;
        }
        let monic = line.monic();
        let d = monic.degree().unwrap_or(0);
        let companion = Matrix::from_fn(d, d, |i, j| {
            if j == d - 1 {
                -monic.coeffs()[i].clone()
            } else if i == j + 1 {
                F::one()
            } else {
                F::zero()
            }
        });
        return match eigenvalues_in_field(&companion) {
            Ok(roots) if !roots.is_empty() => {
                let x = vector::scale(v, &roots[0]);
                debug_assert!(a.right_det_polynomial(&x).is_zero());
                Criterion::fail(format!("P({}) = 0", a.format_vector(&x)))
            }
            _ => Criterion::fail(format!("P(t v) = {line} vanishes off Q(i) for v = {}", a.format_vector(v))),
        };
    }
    Criterion::fail("P is nonconstant".into())
}

/// `t -> P(t v)` recovered exactly by interpolation at `t = 0..=n`.
fn line_polynomial<F: Scalar>(a: &Algebra<F>, v: &[F]) -> UPoly<F> {
    let n = a.dim();
    let ts: Vec<F> = (0..=n as i64).map(F::from_int).collect();
    let vander = Matrix::from_fn(n + 1, n + 1, |i, j| (0..j).fold(F::one(), |acc, _| acc * ts[i].clone()));
    let values: Vec<F> = ts.iter().map(|t| a.right_det_polynomial(&vector::scale(v, t))).collect();
    let coeffs = vander.solve(&values).ok().flatten().expect("Vandermonde matrix is invertible");
    UPoly::new(coeffs)
}

fn exp_operator<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if F::EXACT {
        m.exp_nilpotent()
    } else {
        m.exp()
    }
}

/// `R(e^{L(y)} x) = e^{L(y)} R(x) e^{-ad y}` in the unital extension, for `x` in `g1`
/// and `y` in `g`.
pub fn verify_conjugation_identity<F: Scalar>(e: &UnitalExtension<F>, x: &[F], y: &[F]) -> Result<bool> {
    let g1 = &e.extended;
    let y1 = e.embed(y);
    let el = exp_operator(&g1.left_operator(&y1))?;
    let ead = exp_operator(&g1.ad(&vector::neg(&y1)))?;
    let lhs = g1.right_operator(&el.apply(x));
    let rhs = &(&el * &g1.right_operator(x)) * &ead;
    Ok(lhs.approx_eq(&rhs))
}

#[derive(Clone, Debug)]
pub struct EigenfunctionCheck<F> {
    pub holds: bool,
    /// `e^{Tr R(y)}`, the character by which `P1` transforms.
    pub character: F,
}

/// `P1(e^{L(y)} x) = e^{Tr R(y)} P1(x)`.
pub fn verify_eigenfunction<F: Scalar>(e: &UnitalExtension<F>, x: &[F], y: &[F]) -> Result<EigenfunctionCheck<F>> {
    let g1 = &e.extended;
    let el = exp_operator(&g1.left_operator(&e.embed(y)))?;
    let tr = e.base.right_operator(y).trace();
    let character = tr
        .exp()
        .ok_or_else(|| Error::NumericFallback { polynomial: format!("exp({tr}) is not in the exact field") })?;
    let lhs = e.extended_det(&el.apply(x));
    let rhs = character.clone() * e.extended_det(x);
    Ok(EigenfunctionCheck { holds: lhs.approx_eq(&rhs), character })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceInvariants {
    pub holds: bool,
    /// Basis pair with `Tr(R_i R_j) != 0`.
    pub quadratic_violation: Option<(usize, usize)>,
    /// Basis triple with `Tr(R_i R_j R_k) + Tr(R_j R_i R_k) != 0`.
    pub cubic_violation: Option<(usize, usize, usize)>,
}

/// `Tr(R(x)R(y)) = 0` and `Tr(R(x)^2 R(y)) = 0` for all `x, y`, checked on the
/// coefficients of their expansions over basis monomials.
pub fn trace_invariants<F: Scalar>(a: &Algebra<F>) -> Result<TraceInvariants> {
    let report = is_complete(a)?;
    if !report.verdict {
        return Err(Error::NotComplete(report.trace_zero.witness.unwrap_or_default()));
    }
    let n = a.dim();
    let rs = right_operators(a);
    let mut quadratic_violation = None;
    let mut cubic_violation = None;
    'outer: for i in 0..n {
        for j in i..n {
            let rij = &rs[i] * &rs[j];
            if quadratic_violation.is_none() && !rij.trace().is_zero() {
                quadratic_violation = Some((i, j));
            }
            let sym = &rij + &(&rs[j] * &rs[i]);
            for (k, rk) in rs.iter().enumerate() {
                if !(&sym * rk).trace().is_zero() {
                    cubic_violation = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    Ok(TraceInvariants {
        holds: quadratic_violation.is_none() && cubic_violation.is_none(),
        quadratic_violation,
        cubic_violation,
    })
}

/// Nonzero terms `M1[a][b] M2[b][c] ... Mk[z][a]` of the trace of a product of right
/// operators of basis vectors, in index order.
pub fn trace_path_contributions<F: Scalar>(a: &Algebra<F>, word: &[usize]) -> Vec<F> {
    let n = a.dim();
    let ms: Vec<Matrix<F>> = word.iter().map(|&i| a.right_operator(&a.unit(i))).collect();
    let mut out = Vec::new();
    let mut path = vec![0usize; word.len()];
    fn walk<F: Scalar>(ms: &[Matrix<F>], n: usize, path: &mut Vec<usize>, depth: usize, out: &mut Vec<F>) {
        if depth == ms.len() {
            let prod = (0..ms.len()).fold(F::one(), |acc, t| acc * ms[t][(path[t], path[(t + 1) % ms.len()])].clone());
            if !prod.is_zero() {
                out.push(prod);
            }
            return;
        }
        for v in 0..n {
            path[depth] = v;
            walk(ms, n, path, depth + 1, out);
        }
    }
    if !ms.is_empty() {
        walk(&ms, n, &mut path, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::catalog;
    use crate::field::{Cf, Qi};

    #[test]
    fn auslander_is_complete_on_every_criterion() {
        let r = check_all_criteria(&catalog::auslander3()).unwrap();
        assert!(r.verdict && r.consistent());
        assert!(r.nilpotent.unwrap().holds && r.det_is_one.unwrap().holds && r.det_nonvanishing.unwrap().holds);
    }

    #[test]
    fn idempotent_fails_every_criterion() {
        let r = check_all_criteria(&catalog::idempotent1()).unwrap();
        assert!(!r.verdict && r.consistent());
        assert_eq!(r.trace_zero.witness.as_deref(), Some("Tr R(e) = 1"));
        assert_eq!(r.traces, ["1"]);
    }

    #[test]
    fn direct_sum_witness_in_second_summand() {
        let a = catalog::auslander3().direct_sum(&catalog::idempotent1());
        let r = check_all_criteria(&a).unwrap();
        assert!(!r.verdict && r.consistent());
        assert_eq!(r.trace_zero.witness.as_deref(), Some("Tr R(e) = 1"));
    }

    #[test]
    fn not_left_symmetric_is_rejected() {
        assert!(matches!(is_complete(&catalog::simple4_printed()), Err(Error::NotLeftSymmetric(_))));
    }

    #[test]
    fn conjugation_and_eigenfunction_on_auslander() {
        let a = catalog::auslander3();
        let e = a.unital_extension();
        let x = e.embed(&a.unit(1));
        assert!(verify_conjugation_identity(&e, &x, &a.unit(2)).unwrap());
        let chk = verify_eigenfunction(&e, &e.lift(&vector::from_ints(&[1, 2, 3])), &a.unit(2)).unwrap();
        assert!(chk.holds && chk.character.is_one());
        // L(e0) is not nilpotent
        assert!(matches!(verify_conjugation_identity(&e, &x, &a.unit(1)), Err(Error::NotNilpotent)));
    }

    #[test]
    fn idempotent_character_is_exponential() {
        let a = catalog::idempotent1().map_field(|c: &Qi| Cf(c.to_complex()));
        let e = a.unital_extension();
        let t = 0.3;
        let chk = verify_eigenfunction(&e, &[Cf::new(0.7, 0.0), Cf::new(1.0, 0.0)], &[Cf::new(t, 0.0)]).unwrap();
        assert!(chk.holds);
        assert!((chk.character.0.re - t.exp()).abs() < 1e-12);
    }

    #[test]
    fn simple4_trace_cancellation() {
        let a = catalog::simple4();
        // R(e-1)^2 R(e2)
        let mut terms = trace_path_contributions(&a, &[0, 0, 3]);
        terms.sort();
        assert_eq!(terms, vec![Qi::int(-2), Qi::int(2)]);
        assert!(trace_invariants(&a).unwrap().holds);
    }
}
