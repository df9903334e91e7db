//! Named algebras: the simple complete algebras of dimension at most five, the
//! truncated series, and non-simple or non-complete controls.
//!
//! Every graded entry uses basis labels `e{root}` sorted by root, with
//! `e0 e_r = r e_r` and right multiplication by `e0` zero.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Qi, Scalar};

pub type Params = BTreeMap<String, Qi>;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Parameter names with their defaults.
    pub params: &'static [(&'static str, i64)],
    pub summary: &'static str,
    /// Expected to be left-symmetric and complete.
    pub complete: bool,
    /// Expected to be simple.
    pub simple: bool,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "auslander3", params: &[], summary: "Auslander's algebra", complete: true, simple: true },
    CatalogEntry {
        name: "simple4",
        params: &[],
        summary: "dimension 4, e2 e-1 = e1, e-1 e2 = 2 e1",
        complete: true,
        simple: true,
    },
    CatalogEntry {
        name: "simple4_printed",
        params: &[],
        summary: "dimension 4 with the printed constants e2 e-1 = 2 e1, e-1 e2 = e1 (not left-symmetric)",
        complete: false,
        simple: false,
    },
    CatalogEntry {
        name: "family5",
        params: &[("lambda", 3)],
        summary: "roots 0, +-1, +-lambda, e_r e_-r = e_-r e_r = e0",
        complete: true,
        simple: true,
    },
    CatalogEntry {
        name: "family5_mod",
        params: &[("alpha", 1), ("beta", 2), ("gamma", 0)],
        summary: "family5(2) with e2 e-1 = alpha e1, e-1 e2 = beta e1, e-1 e-1 = gamma e-2, 2 alpha = beta + gamma",
        complete: true,
        simple: true,
    },
    CatalogEntry {
        name: "series",
        params: &[("n", 5)],
        summary: "e0 e_k = k e_k, e-1 e_k = k e_(k-1), e_k e-1 = e_(k-1), e0 e-1 = -e-1",
        complete: true,
        simple: true,
    },
    CatalogEntry { name: "zero", params: &[("n", 2)], summary: "zero product", complete: true, simple: false },
    CatalogEntry { name: "idempotent1", params: &[], summary: "e e = e", complete: false, simple: true },
    CatalogEntry {
        name: "auslander_plus_idempotent",
        params: &[],
        summary: "Auslander's algebra (+) (e e = e)",
        complete: false,
        simple: false,
    },
    CatalogEntry {
        name: "auslander_squared",
        params: &[],
        summary: "Auslander's algebra (+) Auslander's algebra",
        complete: true,
        simple: false,
    },
    CatalogEntry {
        name: "split3",
        params: &[],
        summary: "only e0 acts, diagonally on e+-1",
        complete: true,
        simple: false,
    },
    CatalogEntry {
        name: "family5_cut",
        params: &[("lambda", 3)],
        summary: "family5 with e_lambda e_-lambda = e_-lambda e_lambda = 0",
        complete: true,
        simple: false,
    },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

fn q(n: i64) -> Qi {
    Qi::int(n)
}

/// Graded algebra on the given roots with `e0 e_r = r e_r` plus the listed products
/// `(left root, right root, coefficient, result root)`.
pub fn graded(name: &str, roots: &[Qi], products: &[(Qi, Qi, Qi, Qi)]) -> Result<Algebra<Qi>> {
    let mut sorted = roots.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != roots.len() {
        return Err(Error::BadParameters(format!("roots of {name} are not distinct")));
    }
    let labels: Vec<String> = sorted.iter().map(|r| format!("e{r}")).collect();
    let mut a = Algebra::zero(name, labels);
    let idx = |r: &Qi| sorted.iter().position(|s| s == r).ok_or_else(|| Error::BadParameters(format!("{r} is not a root")));
    if let Ok(z) = idx(&Qi::zero()) {
        for (i, r) in sorted.iter().enumerate() {
            a.set(z, i, i, r.clone());
        }
    }
    for (l, r, c, t) in products {
        a.set(idx(l)?, idx(r)?, idx(t)?, c.clone());
    }
    Ok(a)
}

fn symmetric_pair(r: &Qi) -> [(Qi, Qi, Qi, Qi); 2] {
    [(r.clone(), -r.clone(), q(1), q(0)), (-r.clone(), r.clone(), q(1), q(0))]
}

fn param(params: &Params, name: &str, default: i64) -> Qi {
    params.get(name).cloned().unwrap_or_else(|| q(default))
}

fn small_int(x: &Qi, what: &str) -> Result<usize> {
    let bad = || Error::BadParameters(format!("{what} must be a nonnegative integer, got {x}"));
    if !x.is_real() || !x.re().is_integer() {
        return Err(bad());
    }
    usize::try_from(x.re().to_integer()).map_err(|_| bad())
}

pub fn auslander3() -> Algebra<Qi> {
    series(3).expect("valid")
}

pub fn simple4() -> Algebra<Qi> {
    series(4).expect("valid").with_name("simple4")
}

pub fn simple4_printed() -> Algebra<Qi> {
    let mut ps = symmetric_pair(&q(1)).to_vec();
    ps.push((q(2), q(-1), q(2), q(1)));
    ps.push((q(-1), q(2), q(1), q(1)));
    graded("simple4_printed", &[q(-1), q(0), q(1), q(2)], &ps).expect("valid")
}

pub fn family5(lambda: &Qi) -> Result<Algebra<Qi>> {
    if lambda.is_zero() || *lambda == q(1) || *lambda == q(-1) {
        return Err(Error::BadParameters(format!("family5 needs lambda outside {{0, 1, -1}}, got {lambda}")));
    }
    let mut ps = symmetric_pair(&q(1)).to_vec();
    ps.extend(symmetric_pair(lambda));
    graded(&format!("family5({lambda})"), &[-lambda.clone(), q(-1), q(0), q(1), lambda.clone()], &ps)
}

pub fn family5_mod(alpha: &Qi, beta: &Qi, gamma: &Qi) -> Result<Algebra<Qi>> {
    if q(2) * alpha.clone() != beta.clone() + gamma.clone() {
        return Err(Error::BadParameters(format!("family5_mod needs 2 alpha = beta + gamma, got ({alpha}, {beta}, {gamma})")));
    }
    Ok(family5_mod_unchecked(alpha, beta, gamma))
}

/// The same table without the constraint, for exploring which triples are left-symmetric.
pub fn family5_mod_unchecked(alpha: &Qi, beta: &Qi, gamma: &Qi) -> Algebra<Qi> {
    let mut ps = symmetric_pair(&q(1)).to_vec();
    ps.extend(symmetric_pair(&q(2)));
    ps.push((q(2), q(-1), alpha.clone(), q(1)));
    ps.push((q(-1), q(2), beta.clone(), q(1)));
    ps.push((q(-1), q(-1), gamma.clone(), q(-2)));
    graded(&format!("family5_mod({alpha},{beta},{gamma})"), &[q(-2), q(-1), q(0), q(1), q(2)], &ps).expect("valid")
}

/// Truncation of the infinite series to roots `-1, 0, 1, ..., n-2`.
pub fn series(n: usize) -> Result<Algebra<Qi>> {
    if n < 3 {
        return Err(Error::BadParameters(format!("series needs n >= 3, got {n}")));
    }
    let top = n as i64 - 2;
    let roots: Vec<Qi> = (-1..=top).map(q).collect();
    let mut ps = Vec::new();
    for k in 1..=top {
        ps.push((q(-1), q(k), q(k), q(k - 1)));
        ps.push((q(k), q(-1), q(1), q(k - 1)));
    }
    let name = match n {
        3 => "auslander3".to_string(),
        _ => format!("series({n})"),
    };
    graded(&name, &roots, &ps)
}

pub fn idempotent1() -> Algebra<Qi> {
    Algebra::from_products("idempotent1", &["e"], &[(0, 0, vec![(0, q(1))])])
}

pub fn split3() -> Algebra<Qi> {
    graded("split3", &[q(-1), q(0), q(1)], &[]).expect("valid")
}

pub fn family5_cut(lambda: &Qi) -> Result<Algebra<Qi>> {
    let mut a = family5(lambda)?;
    let find = |r: &Qi| a.index_of(&format!("e{r}")).expect("root present");
    let (i, j, z) = (find(&-lambda.clone()), find(lambda), find(&Qi::zero()));
    a.set(i, j, z, Qi::zero());
    a.set(j, i, z, Qi::zero());
    Ok(a.with_name(&format!("family5_cut({lambda})")))
}

/// Builds a catalog algebra by name; unknown parameters are rejected.
pub fn catalog(name: &str, params: &Params) -> Result<Algebra<Qi>> {
    let e = entry(name).ok_or_else(|| Error::BadParameters(format!("unknown catalog entry {name:?}")))?;
    for k in params.keys() {
        if !e.params.iter().any(|(p, _)| p == k) {
            return Err(Error::BadParameters(format!("{name} has no parameter {k:?}")));
        }
    }
    match name {
        "auslander3" => Ok(auslander3()),
        "simple4" => Ok(simple4()),
        "simple4_printed" => Ok(simple4_printed()),
        "family5" => family5(&param(params, "lambda", 3)),
        "family5_mod" => family5_mod(&param(params, "alpha", 1), &param(params, "beta", 2), &param(params, "gamma", 0)),
        "series" => series(small_int(&param(params, "n", 5), "n")?),
        "zero" => Ok(Algebra::zero_dim(small_int(&param(params, "n", 2), "n")?)),
        "idempotent1" => Ok(idempotent1()),
        "auslander_plus_idempotent" => Ok(auslander3().direct_sum(&idempotent1()).with_name(name)),
        "auslander_squared" => Ok(auslander3().direct_sum(&auslander3()).with_name(name)),
        "split3" => Ok(split3()),
        "family5_cut" => family5_cut(&param(params, "lambda", 3)),
        _ => unreachable!("every entry has a constructor"),
    }
}

/// Entries expected to be simple and complete, at their default parameters plus a few
/// extra parameter values.
pub fn simple_complete() -> Vec<Algebra<Qi>> {
    let mut out = vec![auslander3(), simple4()];
    for l in [q(3), q(-3), Qi::ratio(1, 2), Qi::gaussian(0, 1), Qi::gaussian(2, 1)] {
        out.push(family5(&l).expect("valid lambda"));
    }
    for (a, b, c) in [(1, 2, 0), (1, 0, 2), (0, 1, -1), (1, 1, 1), (3, 5, 1)] {
        out.push(family5_mod(&q(a), &q(b), &q(c)).expect("constraint holds"));
    }
    out.push(series(5).expect("valid"));
    out
}

/// Complete entries that are not simple.
pub fn complete_controls() -> Vec<Algebra<Qi>> {
    let none = Params::new();
    ["zero", "auslander_squared", "split3", "family5_cut"]
        .iter()
        .map(|n| catalog(n, &none).expect("valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_of_small_entries() {
        let a = auslander3();
        assert_eq!(a.basis(), ["e-1", "e0", "e1"]);
        assert_eq!(a.basis_product(2, 0), [q(0), q(1), q(0)]);
        assert_eq!(a.basis_product(1, 0), [q(-1), q(0), q(0)]);
        let s = simple4();
        // e0 e2 = 2 e2, e2 e-1 = e1, e-1 e2 = 2 e1
        assert_eq!(s.basis_product(1, 3), [q(0), q(0), q(0), q(2)]);
        assert_eq!(s.basis_product(3, 0), [q(0), q(0), q(1), q(0)]);
        assert_eq!(s.basis_product(0, 3), [q(0), q(0), q(2), q(0)]);
    }

    #[test]
    fn every_expected_left_symmetric_entry_is() {
        for e in ENTRIES {
            let a = catalog(e.name, &Params::new()).unwrap();
            assert_eq!(a.is_left_symmetric(), e.name != "simple4_printed", "{}", e.name);
        }
        for a in simple_complete() {
            assert!(a.is_left_symmetric(), "{}", a.name());
        }
    }

    #[test]
    fn printed_table_witness() {
        let w = simple4_printed().left_symmetry_violation().unwrap();
        // (e-1, e2, e-1)
        assert_eq!(w.triple, [0, 3, 0]);
    }

    #[test]
    fn parameter_validation() {
        let mut p = Params::new();
        p.insert("lambda".into(), q(1));
        assert!(catalog("family5", &p).is_err());
        assert!(family5_mod(&q(1), &q(1), &q(0)).is_err());
        p.clear();
        p.insert("bogus".into(), q(1));
        assert!(catalog("auslander3", &p).is_err());
        assert!(catalog("nope", &Params::new()).is_err());
        p.clear();
        p.insert("n".into(), Qi::ratio(7, 2));
        assert!(catalog("series", &p).is_err());
    }

    #[test]
    fn series_four_is_simple4() {
        assert_eq!(series(4).unwrap().with_name("simple4"), simple4());
    }
}
