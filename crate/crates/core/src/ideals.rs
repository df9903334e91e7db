//! Two-sided ideals and simplicity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::decomposition::make_canonical;
use crate::field::{vector, Matrix, Scalar, Subspace};
use crate::graph::RootBasis;

#[derive(Clone, Debug)]
pub struct Ideal<F: Scalar> {
    pub subspace: Subspace<F>,
    pub generators: Vec<Vec<F>>,
}

impl<F: Scalar> Ideal<F> {
    pub fn is_proper(&self) -> bool {
        !self.subspace.is_zero() && !self.subspace.is_whole()
    }
}

/// `xv` and `vx` lie in `s` for every basis vector `x` and every `v` in `s`.
pub fn is_ideal<F: Scalar>(a: &Algebra<F>, s: &Subspace<F>) -> bool {
    s.basis().iter().all(|v| {
        (0..a.dim()).all(|i| {
            let x = a.unit(i);
            s.contains(&a.mul(&x, v)) && s.contains(&a.mul(v, &x))
        })
    })
}

/// The least two-sided ideal containing `generators`.
pub fn ideal_closure<F: Scalar>(a: &Algebra<F>, generators: &[Vec<F>]) -> Ideal<F> {
    let n = a.dim();
    let mut s = Subspace::span(n, generators).expect("generators of the algebra's dimension");
    loop {
        let mut vecs = s.basis().to_vec();
        for v in s.basis() {
            for i in 0..n {
                let x = a.unit(i);
                vecs.push(a.mul(&x, v));
                vecs.push(a.mul(v, &x));
            }
        }
        let next = Subspace::span(n, &vecs).expect("same dimension");
        if next.dim() == s.dim() {
            return Ideal { subspace: s, generators: generators.to_vec() };
        }
        s = next;
    }
}

/// How far a simplicity verdict is proved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// One-dimensional canonical decomposition with distinct roots: every ideal is spanned
    /// by root vectors, and each root vector was tried.
    Exact,
    /// Basis vectors and pseudo-random vectors were tried as generators.
    Generators,
}

#[derive(Clone, Debug)]
pub struct SimplicityReport<F: Scalar> {
    pub simple: bool,
    pub verification: Verification,
    /// A proper ideal, when one was found.
    pub witness: Option<Ideal<F>>,
}

impl<F: Scalar> SimplicityReport<F> {
    /// Human-readable verdict, e.g. "simple (verified generators)".
    pub fn verdict(&self) -> String {
        match (self.simple, self.verification) {
            (true, Verification::Exact) => "simple".into(),
            (true, Verification::Generators) => "simple (verified generators)".into(),
            (false, _) => "not simple (witness)".into(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "simple": self.simple,
            "verification": match self.verification {
                Verification::Exact => "exact",
                Verification::Generators => "generators",
            },
        });
        if let Some(w) = &self.witness {
            v["witness"] =
                json!(w.subspace.basis().iter().map(|b| b.iter().map(Scalar::to_json).collect::<Vec<_>>()).collect::<Vec<_>>());
        }
        v
    }
}

const RANDOM_GENERATORS: usize = 16;

fn first_proper<F: Scalar>(a: &Algebra<F>, gens: impl IntoIterator<Item = Vec<F>>) -> Option<Ideal<F>> {
    gens.into_iter().filter(|g| !vector::is_zero(g)).map(|g| ideal_closure(a, &[g])).find(Ideal::is_proper)
}

/// Root vectors of a one-dimensional canonical decomposition, when there is one.
fn root_vectors<F: Scalar>(a: &Algebra<F>) -> Option<Vec<Vec<F>>> {
    let cd = make_canonical(a, None).ok()?;
    RootBasis::new(a, &cd).ok().map(|b| b.vectors)
}

pub fn is_simple<F: Scalar>(a: &Algebra<F>) -> SimplicityReport<F> {
    let n = a.dim();
    if n == 0 {
        return SimplicityReport { simple: true, verification: Verification::Exact, witness: None };
    }
    if let Some(roots) = root_vectors(a) {
        let witness = first_proper(a, roots);
        return SimplicityReport { simple: witness.is_none(), verification: Verification::Exact, witness };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea1);
    let random: Vec<Vec<F>> = (0..RANDOM_GENERATORS)
        .map(|_| vector::from_ints(&(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>()))
        .collect();
    let witness = first_proper(a, (0..n).map(|i| a.unit(i)).chain(random));
    SimplicityReport { simple: witness.is_none(), verification: Verification::Generators, witness }
}

/// `{x : L(x) = 0}`.
pub fn l_kernel<F: Scalar>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    let cols: Vec<Vec<F>> = (0..n)
        .map(|j| {
            let l = a.left_operator(&a.unit(j));
            (0..n).flat_map(|r| l.row(r).to_vec()).collect()
        })
        .collect();
    if n == 0 {
        return Subspace::zero(0);
    }
    let m = Matrix::from_columns(n * n, &cols).expect("consistent lengths");
    let k = Subspace::span(n, &m.kernel()).expect("kernel vectors");
    debug_assert!(is_ideal(a, &k));
    k
}
