//! Cartan subalgebras, root decompositions for `ad` and `L`, and the canonical
//! decomposition of a complete algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{Algebra, UnitalExtension};
use crate::completeness;
use crate::error::{Error, Result};
use crate::field::{eigenvalues_in_field, generalized_eigenspace, jordan_chevalley_semisimple};
use crate::field::{numeric_eps, vector, Matrix, Scalar, Subspace};

/// Which representation of the Cartan subalgebra a decomposition diagonalizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    Ad,
    L,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootPart<F: Scalar> {
    /// Values of the root on the Cartan basis.
    pub root: Vec<F>,
    pub space: Subspace<F>,
}

#[derive(Clone, Debug)]
pub struct RootDecomposition<F: Scalar> {
    pub cartan: Subspace<F>,
    pub rep: Rep,
    pub parts: Vec<RootPart<F>>,
}

impl<F: Scalar> RootDecomposition<F> {
    pub fn part(&self, root: &[F]) -> Option<&RootPart<F>> {
        self.parts.iter().find(|p| vector::approx_eq(&p.root, root))
    }

    pub fn zero_part(&self) -> Option<&RootPart<F>> {
        self.part(&vector::zeros(self.cartan.dim()))
    }

    /// Same roots with the same spaces.
    pub fn same_parts(&self, other: &Self) -> bool {
        self.parts.len() == other.parts.len()
            && self.parts.iter().all(|p| other.part(&p.root).is_some_and(|q| q.space == p.space))
    }

    /// `part(a) * part(b)` lies in `part(a + b)`, or is zero when `a + b` is not a root.
    pub fn grading_holds(&self, a: &Algebra<F>) -> bool {
        self.parts.iter().all(|p| {
            self.parts.iter().all(|q| {
                let sum = vector::add(&p.root, &q.root);
                let target = self.part(&sum).map(|t| t.space.clone()).unwrap_or_else(|| Subspace::zero(a.dim()));
                p.space.basis().iter().all(|x| q.space.basis().iter().all(|y| target.contains(&a.mul(x, y))))
            })
        })
    }

    pub fn to_json(&self) -> Value {
        let vecs = |s: &Subspace<F>| -> Vec<Value> {
            s.basis().iter().map(|v| Value::Array(v.iter().map(Scalar::to_json).collect())).collect()
        };
        json!({
            "rep": match self.rep { Rep::Ad => "ad", Rep::L => "L" },
            "cartan": vecs(&self.cartan),
            "parts": self.parts.iter().map(|p| json!({
                "root": p.root.iter().map(Scalar::to_json).collect::<Vec<_>>(),
                "basis": vecs(&p.space),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `[x, y]` spanned over two subspaces.
fn bracket_span<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>, t: &Subspace<F>) -> Subspace<F> {
    let vecs: Vec<Vec<F>> =
        s.basis().iter().flat_map(|x| t.basis().iter().map(move |y| a.lie_bracket(x, y))).collect();
    Subspace::span(a.dim(), &vecs).expect("vectors of the algebra's dimension")
}

/// Derived series of the commutator algebra reaches zero.
pub fn is_solvable<F: Scalar>(a: &Algebra<F>) -> bool {
    let mut d = Subspace::whole(a.dim());
    for _ in 0..=a.dim() {
        if d.is_zero() {
            return true;
        }
        let next = bracket_span(a, &d, &d);
        if next.dim() == d.dim() {
            return false;
        }
        d = next;
    }
    d.is_zero()
}

/// Lower central series of the subalgebra `h` reaches zero.
pub fn is_nilpotent_subalgebra<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> bool {
    let mut c = h.clone();
    for _ in 0..=h.dim() {
        if c.is_zero() {
            return true;
        }
        c = bracket_span(a, h, &c);
    }
    c.is_zero()
}

/// `{x : [x, h] in h}`.
pub fn normalizer<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Subspace<F> {
    let n = a.dim();
    // Column j of the stacked map sends e_j to the residues of [e_j, h_k] modulo h.
    let cols: Vec<Vec<F>> = (0..n)
        .map(|j| h.basis().iter().flat_map(|y| h.reduce(&a.lie_bracket(&a.unit(j), y))).collect())
        .collect();
    if h.is_zero() {
        return Subspace::whole(n);
    }
    let m = Matrix::from_columns(n * h.dim(), &cols).expect("consistent lengths");
    Subspace::span(n, &m.kernel()).expect("kernel vectors")
}

pub fn is_cartan<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> bool {
    let closed = h.basis().iter().all(|x| h.basis().iter().all(|y| h.contains(&a.lie_bracket(x, y))));
    closed && is_nilpotent_subalgebra(a, h) && normalizer(a, h) == *h
}

/// Generalized null space of `ad(x)`.
pub fn engel_subalgebra<F: Scalar>(a: &Algebra<F>, x: &[F]) -> Result<Subspace<F>> {
    generalized_eigenspace(&a.ad(x), &F::zero())
}

const CARTAN_ATTEMPTS: usize = 64;

/// Candidate elements: the seed (or each basis vector when there is none), then
/// perturbations by integer vectors of slowly growing height from a fixed stream.
fn regular_candidates<F: Scalar>(n: usize, seed: Option<&[F]>) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = match seed {
        Some(s) => vec![s.to_vec()],
        None => (0..n).map(|i| vector::unit(n, i)).collect(),
    };
    let base = seed.map(<[F]>::to_vec).unwrap_or_else(|| vector::zeros(n));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..CARTAN_ATTEMPTS {
        let height = 1 + k as i64 / 8;
        let delta: Vec<i64> = (0..n).map(|_| rng.gen_range(-height..=height)).collect();
        out.push(vector::add(&base, &vector::from_ints(&delta)));
    }
    out
}

/// A Cartan subalgebra: the Engel subalgebra of the seed if it is nilpotent and
/// self-normalizing, else of the first deterministic perturbation that is.
pub fn cartan_subalgebra<F: Scalar>(a: &Algebra<F>, seed: Option<&[F]>) -> Result<Subspace<F>> {
    if seed.is_some_and(|s| s.len() != a.dim()) {
        return Err(Error::DimensionMismatch("seed length differs from the algebra's dimension".into()));
    }
    if !is_solvable(a) {
        return Err(Error::NotSolvable);
    }
    for x in regular_candidates(a.dim(), seed) {
        let h = engel_subalgebra(a, &x)?;
        if is_cartan(a, &h) {
            return Ok(h);
        }
    }
    Err(Error::SeedNotRegular)
}

/// Simultaneous generalized eigenspaces of a commuting family on `F^dim`.
pub fn simultaneous_decomposition<F: Scalar>(dim: usize, ops: &[Matrix<F>]) -> Result<Vec<RootPart<F>>> {
    let mut parts = vec![RootPart { root: Vec::new(), space: Subspace::whole(dim) }];
    for op in ops {
        let mut next = Vec::new();
        for part in parts {
            let basis = part.space.basis();
            if basis.is_empty() {
                continue;
            }
            let cols: Vec<Vec<F>> = basis
                .iter()
                .map(|b| {
                    part.space
                        .coordinates(&op.apply(b))
                        .ok_or_else(|| Error::NotCartan("a root space is not invariant".into()))
                })
                .collect::<Result<_>>()?;
            let restricted = Matrix::from_columns(basis.len(), &cols)?;
            for lambda in eigenvalues_in_field(&restricted)? {
                let local = generalized_eigenspace(&restricted, &lambda)?;
                let vecs: Vec<Vec<F>> =
                    local.basis().iter().map(|c| vector::combination(dim, c, basis)).collect();
                let mut root = part.root.clone();
                root.push(lambda);
                next.push(RootPart { root, space: Subspace::span(dim, &vecs)? });
            }
        }
        parts = next;
    }
    let total: usize = parts.iter().map(|p| p.space.dim()).sum();
    if total != dim {
        return Err(Error::NotCartan(format!("root spaces have total dimension {total}, expected {dim}")));
    }
    parts.sort_by(|p, q| {
        p.root.iter().zip(&q.root).map(|(x, y)| x.sort_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(parts)
}

pub fn root_decomposition<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>, rep: Rep) -> Result<RootDecomposition<F>> {
    if !is_cartan(a, h) {
        return Err(Error::NotCartan("subspace is not nilpotent and self-normalizing".into()));
    }
    let ops: Vec<Matrix<F>> = h
        .basis()
        .iter()
        .map(|x| match rep {
            Rep::Ad => a.ad(x),
            Rep::L => a.left_operator(x),
        })
        .collect();
    let parts = simultaneous_decomposition(a.dim(), &ops)?;
    Ok(RootDecomposition { cartan: h.clone(), rep, parts })
}

/// Decomposition of the unital extension under `L(h)`.
pub fn extended_decomposition<F: Scalar>(e: &UnitalExtension<F>, h: &Subspace<F>) -> Result<RootDecomposition<F>> {
    let ops: Vec<Matrix<F>> = h.basis().iter().map(|x| e.extended.left_operator(&e.embed(x))).collect();
    let parts = simultaneous_decomposition(e.extended.dim(), &ops)?;
    Ok(RootDecomposition { cartan: h.clone(), rep: Rep::L, parts })
}

#[derive(Clone, Debug)]
pub struct CanonicalCheck {
    /// `ad` and `L` decompositions coincide.
    pub canonical: bool,
    /// The unit lies in the zero root space of the unital extension.
    pub unit_in_zero_part: bool,
}

pub fn check_canonical<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Result<CanonicalCheck> {
    let ad = root_decomposition(a, h, Rep::Ad)?;
    let l = root_decomposition(a, h, Rep::L)?;
    let e = a.unital_extension();
    let ext = extended_decomposition(&e, h)?;
    let unit_in_zero_part = ext.zero_part().is_some_and(|p| p.space.contains(&e.unit()));
    Ok(CanonicalCheck { canonical: ad.same_parts(&l), unit_in_zero_part })
}

pub fn is_canonical<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Result<bool> {
    Ok(check_canonical(a, h)?.canonical)
}

/// Group element `exp(y1) ... exp(yk)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransportWord<F> {
    pub factors: Vec<Vec<F>>,
}

fn exp_operator<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if F::EXACT {
        m.exp_nilpotent()
    } else {
        m.exp()
    }
}

impl<F: Scalar> TransportWord<F> {
    pub fn empty() -> Self {
        TransportWord { factors: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `e^{L(y1)} ... e^{L(yk)}` on the unital extension.
    pub fn action(&self, e: &UnitalExtension<F>) -> Result<Matrix<F>> {
        let n = e.extended.dim();
        self.factors.iter().try_fold(Matrix::identity(n), |acc, y| {
            Ok(&acc * &exp_operator(&e.extended.left_operator(&e.embed(y)))?)
        })
    }

    /// `Ad(g) = e^{ad y1} ... e^{ad yk}` on the algebra.
    pub fn adjoint(&self, a: &Algebra<F>) -> Result<Matrix<F>> {
        self.factors
            .iter()
            .try_fold(Matrix::identity(a.dim()), |acc, y| Ok(&acc * &exp_operator(&a.ad(y))?))
    }
}

/// Numeric transport gives up after this many steps.
pub const MAX_NUMERIC_STEPS: usize = 50;

/// A word `w` with `w . x = 1` for `x` in `1 + g`.
///
/// Each step solves `(I + R(u)) y = -u` at the current point `1 + u`, which cancels
/// `u` to first order, and moves to `e^{L(y)}(1 + u)`.
pub fn transport_to_unit<F: Scalar>(e: &UnitalExtension<F>, x: &[F]) -> Result<TransportWord<F>> {
    let n = e.base.dim();
    if x.len() != n + 1 {
        return Err(Error::DimensionMismatch("point must lie in the unital extension".into()));
    }
    if !(x[n].clone() - F::one()).is_zero() {
        return Err(Error::BadParameters("point must have unit coefficient 1".into()));
    }
    let report = completeness::is_complete(&e.base)?;
    if !report.verdict {
        return Err(Error::NotComplete(report.trace_zero.witness.unwrap_or_default()));
    }
    let limit = if F::EXACT { 4 * n + 8 } else { MAX_NUMERIC_STEPS };
    let mut point = x.to_vec();
    let mut word = TransportWord::empty();
    for _ in 0..=limit {
        let u = &point[..n];
        let scale = 1.0 + u.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        if u.iter().all(|c| c.negligible(scale) && (F::EXACT || c.magnitude() <= numeric_eps())) {
            return Ok(word);
        }
        let system = &Matrix::identity(n) + &e.base.right_operator(u);
        let y = system
            .solve(&vector::neg(u))?
            .ok_or_else(|| Error::NotComplete("I + R(u) is singular".into()))?;
        point = exp_operator(&e.extended.left_operator(&e.embed(&y)))?.apply(&point);
        word.factors.insert(0, y);
    }
    Err(Error::MaxIterations(limit))
}

#[derive(Clone, Debug)]
pub struct CanonicalDecomposition<F: Scalar> {
    /// The Cartan subalgebra the construction started from.
    pub initial: Subspace<F>,
    /// The point of the zero root space of the unital extension moved to the unit.
    pub point: Vec<F>,
    pub word: TransportWord<F>,
    pub cartan: Subspace<F>,
    pub decomposition: RootDecomposition<F>,
}

/// The canonical Cartan subalgebra, reached from the Cartan subalgebra of `seed`.
pub fn make_canonical<F: Scalar>(a: &Algebra<F>, seed: Option<&[F]>) -> Result<CanonicalDecomposition<F>> {
    let h0 = cartan_subalgebra(a, seed)?;
    make_canonical_from(a, &h0)
}

/// Builds the canonical Cartan subalgebra from any Cartan subalgebra `h0`.
///
/// The unit is moved into the zero root space of the unital extension by
/// exponentials of elements of the nonzero `ad`-root spaces of `h0`, whose left
/// operators are nilpotent: at the point `p = p0 + v'` (zero and nonzero root
/// components) solve `y p0 = -v'` and move to `e^{L(y)} p`. Inverting the product gives
/// a word taking the final point `x` to the unit, and `Ad` of that word carries `h0`
/// to a Cartan subalgebra whose zero root space contains the unit.
pub fn make_canonical_from<F: Scalar>(a: &Algebra<F>, h0: &Subspace<F>) -> Result<CanonicalDecomposition<F>> {
    let report = completeness::is_complete(a)?;
    if !report.verdict {
        return Err(Error::NotComplete(report.trace_zero.witness.unwrap_or_default()));
    }
    let e = a.unital_extension();
    let ext = extended_decomposition(&e, h0)?;
    let n1 = e.extended.dim();
    let mut cols = Vec::new();
    let mut in_zero = Vec::new();
    for p in &ext.parts {
        let zero = vector::is_zero(&p.root);
        for b in p.space.basis() {
            cols.push(b.clone());
            in_zero.push(zero);
        }
    }
    let to_parts = Matrix::from_columns(n1, &cols)?
        .inverse()
        .ok_or_else(|| Error::NotCartan("root spaces do not span the unital extension".into()))?;
    let split = |p: &[F]| -> (Vec<F>, Vec<F>) {
        let coeffs = to_parts.apply(p);
        let pick = |zero: bool| -> Vec<F> {
            let c: Vec<F> =
                coeffs.iter().zip(&in_zero).map(|(c, &z)| if z == zero { c.clone() } else { F::zero() }).collect();
            vector::combination(n1, &c, &cols)
        };
        (pick(true), pick(false))
    };
    let moving: Vec<Vec<F>> = root_decomposition(a, h0, Rep::Ad)?
        .parts
        .iter()
        .filter(|p| !vector::is_zero(&p.root))
        .flat_map(|p| p.space.basis().to_vec())
        .collect();
    let limit = if F::EXACT { 2 * n1 + 4 } else { MAX_NUMERIC_STEPS };
    let mut point = e.unit();
    let mut steps: Vec<Vec<F>> = Vec::new();
    loop {
        let (p0, rest) = split(&point);
        let scale = 1.0 + point.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        if rest.iter().all(|c| c.negligible(scale)) {
            point = p0;
            break;
        }
        if steps.len() == limit {
            return Err(Error::MaxIterations(limit));
        }
        let images: Vec<Vec<F>> = moving.iter().map(|y| e.extended.mul(&e.embed(y), &p0)).collect();
        let c = Matrix::from_columns(n1, &images)?
            .solve(&vector::neg(&rest))?
            .ok_or_else(|| Error::NotCartan("nonzero root spaces do not reach the unit's components".into()))?;
        let y = vector::combination(a.dim(), &c, &moving);
        point = exp_operator(&e.extended.left_operator(&e.embed(&y)))?.apply(&point);
        steps.push(y);
    }
    let word = TransportWord { factors: steps.iter().map(|y| vector::neg(y)).collect() };
    if !vector::approx_eq(&word.action(&e)?.apply(&point), &e.unit()) {
        return Err(Error::NotCanonical);
    }
    let cartan = h0.image(&word.adjoint(a)?)?;
    if !is_canonical(a, &cartan)? {
        return Err(Error::NotCanonical);
    }
    let decomposition = root_decomposition(a, &cartan, Rep::L)?;
    Ok(CanonicalDecomposition { initial: h0.clone(), point, word, cartan, decomposition })
}

fn require_canonical<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Result<()> {
    if is_canonical(a, h)? {
        Ok(())
    } else {
        Err(Error::NotCanonical)
    }
}

/// Semisimple parts of `L(x)` and `ad(x)` coincide for each Cartan basis element.
pub fn semisimple_parts_agree<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Result<bool> {
    require_canonical(a, h)?;
    for x in h.basis() {
        let sl = jordan_chevalley_semisimple(&a.left_operator(x))?;
        let sad = jordan_chevalley_semisimple(&a.ad(x))?;
        if !sl.approx_eq(&sad) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The semisimple part of `L(x)` is a derivation for each Cartan basis element.
pub fn derivation_check<F: Scalar>(a: &Algebra<F>, h: &Subspace<F>) -> Result<bool> {
    require_canonical(a, h)?;
    let n = a.dim();
    for x in h.basis() {
        let s = jordan_chevalley_semisimple(&a.left_operator(x))?;
        for i in 0..n {
            for j in 0..n {
                let (u, v) = (a.unit(i), a.unit(j));
                let lhs = s.apply(a.basis_product(i, j));
                let rhs = vector::add(&a.mul(&s.apply(&u), &v), &a.mul(&u, &s.apply(&v)));
                if !vector::approx_eq(&lhs, &rhs) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::catalog;
    use crate::field::Qi;

    fn v(xs: &[i64]) -> Vec<Qi> {
        vector::from_ints(xs)
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Qi> {
        Subspace::span(n, &vs.iter().map(|x| v(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn auslander_cartan_seeds() {
        let a = catalog::auslander3();
        assert_eq!(cartan_subalgebra(&a, Some(&v(&[0, 1, 0]))).unwrap(), span(3, &[&[0, 1, 0]]));
        assert_eq!(cartan_subalgebra(&a, Some(&v(&[0, 1, 1]))).unwrap(), span(3, &[&[0, 1, 1]]));
        assert!(cartan_subalgebra(&Algebra::<Qi>::zero_dim(3), None).unwrap().is_whole());
    }

    #[test]
    fn auslander_root_decompositions() {
        let a = catalog::auslander3();
        let d = root_decomposition(&a, &span(3, &[&[0, 1, 0]]), Rep::L).unwrap();
        let roots: Vec<Qi> = d.parts.iter().map(|p| p.root[0].clone()).collect();
        assert_eq!(roots, v(&[-1, 0, 1]));
        let h = span(3, &[&[0, 1, 1]]);
        let l = root_decomposition(&a, &h, Rep::L).unwrap();
        assert_eq!(l.part(&v(&[-1])).unwrap().space, span(3, &[&[1, -1, 0]]));
        assert_eq!(l.part(&v(&[0])).unwrap().space, span(3, &[&[0, 1, 0]]));
        let ad = root_decomposition(&a, &h, Rep::Ad).unwrap();
        assert_eq!(ad.part(&v(&[-1])).unwrap().space, span(3, &[&[1, 0, 0]]));
        assert_eq!(ad.part(&v(&[0])).unwrap().space, span(3, &[&[0, 1, 1]]));
        assert!(!is_canonical(&a, &h).unwrap());
        assert!(is_canonical(&a, &span(3, &[&[0, 1, 0]])).unwrap());
        assert!(!check_canonical(&a, &h).unwrap().unit_in_zero_part);
    }

    #[test]
    fn auslander_transport_and_canonical() {
        let a = catalog::auslander3();
        let e = a.unital_extension();
        assert!(transport_to_unit(&e, &e.unit()).unwrap().is_empty());
        let w = transport_to_unit(&e, &v(&[0, 0, -1, 1])).unwrap();
        assert_eq!(w.factors, vec![v(&[0, 0, 1])]);
        let c = make_canonical(&a, Some(&v(&[0, 1, 1]))).unwrap();
        assert_eq!(c.point, v(&[0, 0, -1, 1]));
        assert_eq!(c.word.factors, vec![v(&[0, 0, 1])]);
        assert_eq!(c.cartan, span(3, &[&[0, 1, 0]]));
        assert!(make_canonical(&a, Some(&v(&[0, 1, 0]))).unwrap().word.is_empty());
    }

    #[test]
    fn semisimple_parts_and_derivations() {
        let a = catalog::auslander3();
        let h = span(3, &[&[0, 1, 0]]);
        assert!(semisimple_parts_agree(&a, &h).unwrap());
        assert!(derivation_check(&a, &h).unwrap());
        assert!(matches!(semisimple_parts_agree(&a, &span(3, &[&[0, 1, 1]])), Err(Error::NotCanonical)));
        let z = Algebra::<Qi>::zero_dim(2);
        assert!(semisimple_parts_agree(&z, &Subspace::whole(2)).unwrap());
    }

    #[test]
    fn simple4_transport_from_shifted_point() {
        let a = catalog::simple4();
        let e = a.unital_extension();
        let x = v(&[0, 0, 0, 1, 1]);
        let w = transport_to_unit(&e, &x).unwrap();
        assert!(w.len() <= 4);
        assert_eq!(w.action(&e).unwrap().apply(&x), e.unit());
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&catalog::series(5).unwrap()));
        // sl2 as an algebra with the Lie bracket halved: not solvable
        let q = Qi::int;
        let h = |c: i64| Qi::ratio(c, 2);
        let sl2 = Algebra::from_products(
            "sl2",
            &["e", "h", "f"],
            &[
                (0, 2, vec![(1, h(1))]),
                (2, 0, vec![(1, h(-1))]),
                (1, 0, vec![(0, q(1))]),
                (0, 1, vec![(0, q(-1))]),
                (1, 2, vec![(2, q(-1))]),
                (2, 1, vec![(2, q(1))]),
            ],
        );
        assert!(!is_solvable(&sl2));
        assert!(matches!(cartan_subalgebra(&sl2, None), Err(Error::NotSolvable)));
    }
}
