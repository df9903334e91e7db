//! Acceptance criteria, one PASS/FAIL line each. Runs without the test harness so the
//! lines are always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lsa_core::classification::catalog::{self, Params, ENTRIES};
use lsa_core::classification::{classify, iso_family5};
use lsa_core::completeness::{
    check_all_criteria, is_complete, trace_invariants, trace_path_contributions, verify_conjugation_identity,
    verify_eigenfunction,
};
use lsa_core::decomposition::{derivation_check, make_canonical, semisimple_parts_agree};
use lsa_core::field::{set_numeric_eps, vector, Cf, Matrix, Qi, Scalar, Subspace};
use lsa_core::graph::{analyze, check_properties, check_simple_properties, GraphKind, Property, RootGraph};
use lsa_core::ideals::is_simple;
use lsa_core::Algebra;

type Outcome = Result<String, String>;

fn q(n: i64) -> Qi {
    Qi::int(n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_defaults() -> Vec<Algebra<Qi>> {
    ENTRIES.iter().map(|e| catalog::catalog(e.name, &Params::new()).expect("default parameters")).collect()
}

/// Complete algebras: the simple ones plus the non-simple controls.
fn complete_algebras() -> Vec<Algebra<Qi>> {
    let mut out = catalog::simple_complete();
    out.extend(catalog::complete_controls());
    out
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Qi> {
    loop {
        let p = Matrix::from_fn(n, n, |i, j| q(if i == j { 1 } else { 0 } + rng.gen_range(-1..=1)));
        if p.inverse().is_some() {
            return p;
        }
    }
}

fn identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let base = catalog_defaults();
    let mut tables = base.clone();
    tables.extend(catalog::simple_complete());
    let mut perturbed = 0;
    while perturbed < 100 {
        let a = &base[rng.gen_range(0..base.len())];
        let n = a.dim();
        if n == 0 {
            continue;
        }
        let t = if perturbed % 2 == 0 {
            let mut t = a.clone();
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let delta = [-2, -1, 1, 2][rng.gen_range(0..4)];
            let c = t.constant(i, j, k).clone() + q(delta);
            t.set(i, j, k, c);
            t
        } else {
            let p = random_invertible(&mut rng, n);
            a.change_basis(&p, a.basis().to_vec()).expect("invertible")
        };
        tables.push(t);
        perturbed += 1;
    }
    let mut ls_count = 0;
    for a in &tables {
        let ls = a.is_left_symmetric();
        ensure(ls == a.check_l_representation(), || format!("{}: left symmetry vs L-representation", a.name()))?;
        ensure(ls == a.check_lr_identity(), || format!("{}: left symmetry vs L/R identity", a.name()))?;
        ensure(!ls || a.check_lie_admissible(), || format!("{}: Jacobi fails", a.name()))?;
        ls_count += ls as usize;
    }
    Ok(format!("{} tables, {ls_count} left-symmetric", tables.len()))
}

fn proposition_one() -> Outcome {
    let mut algebras: Vec<Algebra<Qi>> = catalog_defaults().into_iter().filter(Algebra::is_left_symmetric).collect();
    algebras.extend(catalog::simple_complete());
    algebras.push(catalog::simple4().direct_sum(&catalog::idempotent1()));
    algebras.push(catalog::idempotent1().direct_sum(&catalog::idempotent1()));
    for a in &algebras {
        let r = check_all_criteria(a).map_err(|e| format!("{}: {e}", a.name()))?;
        ensure(r.consistent(), || format!("{}: criteria disagree", a.name()))?;
    }
    let p = catalog::auslander3().right_det_symbolic();
    ensure(p.as_constant().is_some_and(|c| c.is_one()), || format!("Auslander P = {p}"))?;
    Ok(format!("{} algebras, Auslander P(x) = 1", algebras.len()))
}

fn lemma_one() -> Outcome {
    let mut exact = 0;
    for a in &complete_algebras() {
        let e = a.unital_extension();
        let n = a.dim();
        let points: Vec<Vec<Qi>> =
            vec![e.unit(), e.lift(&vector::from_ints(&(1..=n as i64).collect::<Vec<_>>())), e.embed(&vec![q(1); n])];
        for i in 0..n {
            let y = a.unit(i);
            let y1 = e.embed(&y);
            if !e.extended.left_operator(&y1).is_nilpotent() || !e.extended.ad(&y1).is_nilpotent() {
                continue;
            }
            for x in &points {
                let conj = verify_conjugation_identity(&e, x, &y).map_err(|err| format!("{}: {err}", a.name()))?;
                ensure(conj, || format!("{}: conjugation identity at y = {}", a.name(), a.basis()[i]))?;
                let eig = verify_eigenfunction(&e, x, &y).map_err(|err| format!("{}: {err}", a.name()))?;
                ensure(eig.holds, || format!("{}: eigenfunction at y = {}", a.name(), a.basis()[i]))?;
                exact += 1;
            }
        }
    }
    set_numeric_eps(1e-10);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let numeric: Vec<Algebra<Cf>> = [catalog::auslander3(), catalog::simple4(), catalog::family5(&q(3)).expect("valid")]
        .iter()
        .map(|a| a.map_field(|c| Cf(c.to_complex())))
        .collect();
    for k in 0..50 {
        let a = &numeric[k % numeric.len()];
        let e = a.unital_extension();
        let n = a.dim();
        let y: Vec<Cf> = (0..n).map(|_| Cf::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3))).collect();
        let x: Vec<Cf> = (0..=n).map(|_| Cf::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let conj = verify_conjugation_identity(&e, &x, &y).map_err(|err| err.to_string())?;
        ensure(conj, || format!("numeric conjugation identity, sample {k}"))?;
        let eig = verify_eigenfunction(&e, &x, &y).map_err(|err| err.to_string())?;
        ensure(eig.holds, || format!("numeric eigenfunction, sample {k}"))?;
    }
    Ok(format!("{exact} exact checks, 50 numeric samples at 1e-10"))
}

/// Canonical Cartan subalgebras from the default seed and random integer seeds.
fn canonical_from_seeds(a: &Algebra<Qi>, rng: &mut ChaCha8Rng) -> Result<Vec<Subspace<Qi>>, String> {
    let n = a.dim();
    let mut out = vec![make_canonical(a, None).map_err(|e| format!("{}: {e}", a.name()))?.cartan];
    let mut tried = 0;
    while out.len() < 4 && tried < 40 {
        tried += 1;
        let seed: Vec<Qi> = (0..n).map(|_| q(rng.gen_range(-3..=3))).collect();
        if let Ok(cd) = make_canonical(a, Some(&seed)) {
            out.push(cd.cartan);
        }
    }
    if out.len() < 3 {
        return Err(format!("{}: only {} seeds succeeded", a.name(), out.len()));
    }
    Ok(out)
}

fn existence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let algebras = complete_algebras();
    for a in &algebras {
        canonical_from_seeds(a, &mut rng)?;
    }
    let a = catalog::auslander3();
    let cd = make_canonical(&a, Some(&vector::from_ints(&[0, 1, 1]))).map_err(|e| e.to_string())?;
    ensure(cd.initial == Subspace::span(3, &[vector::from_ints(&[0, 1, 1])]).expect("span"), || "initial Cartan".into())?;
    ensure(cd.cartan == Subspace::span(3, &[vector::from_ints(&[0, 1, 0])]).expect("span"), || "canonical Cartan".into())?;
    ensure(cd.word.factors == vec![vector::from_ints::<Qi>(&[0, 0, 1])], || format!("word {:?}", cd.word.factors))?;
    Ok(format!("{} algebras from >= 3 seeds; Auslander span(e0+e1) -> span(e0) via [e1]", algebras.len()))
}

fn uniqueness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let algebras = complete_algebras();
    for a in &algebras {
        let all = canonical_from_seeds(a, &mut rng)?;
        ensure(all.iter().all(|h| *h == all[0]), || format!("{}: canonical Cartan depends on the seed", a.name()))?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

fn semisimple_parts() -> Outcome {
    let algebras = complete_algebras();
    for a in &algebras {
        let cd = make_canonical(a, None).map_err(|e| format!("{}: {e}", a.name()))?;
        let agree = semisimple_parts_agree(a, &cd.cartan).map_err(|e| format!("{}: {e}", a.name()))?;
        ensure(agree, || format!("{}: semisimple parts differ", a.name()))?;
        let der = derivation_check(a, &cd.cartan).map_err(|e| format!("{}: {e}", a.name()))?;
        ensure(der, || format!("{}: semisimple part is not a derivation", a.name()))?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

fn edge_pairs(pairs: &[(i64, i64)]) -> Vec<(Qi, Qi)> {
    pairs.iter().map(|&(a, b)| (q(a), q(b))).collect()
}

fn left_edges(a: &Algebra<Qi>) -> Result<BTreeSet<(Qi, Qi)>, String> {
    let cd = make_canonical(a, None).map_err(|e| e.to_string())?;
    let g = analyze(a, &cd).map_err(|e| e.to_string())?;
    Ok(g.left.edges.iter().map(|e| (e.from.clone(), e.to.clone())).collect())
}

fn with_loops(pairs: &[(i64, i64)], loops: &[i64]) -> BTreeSet<(Qi, Qi)> {
    let mut s: BTreeSet<(Qi, Qi)> = edge_pairs(pairs).into_iter().collect();
    s.extend(loops.iter().map(|&v| (q(v), q(v))));
    s
}

fn failed_set<F: Scalar>(r: &lsa_core::graph::PropertyReport<F>) -> BTreeSet<&'static str> {
    r.failed().into_iter().map(Property::name).collect()
}

fn graph(kind: GraphKind, vertices: &[i64], pairs: &[(i64, i64)]) -> RootGraph<Qi> {
    let v: Vec<Qi> = vertices.iter().map(|&x| q(x)).collect();
    RootGraph::new(kind, &v, &edge_pairs(pairs)).expect("valid graph")
}

fn graphs() -> Outcome {
    let dim4 = left_edges(&catalog::simple4())?;
    ensure(dim4 == with_loops(&[(-1, 0), (1, 0), (-1, 1), (2, 1)], &[-1, 1, 2]), || format!("dim 4: {dim4:?}"))?;
    let s5 = left_edges(&catalog::series(5).expect("valid"))?;
    let expected = with_loops(&[(-1, 0), (1, 0), (2, 1), (3, 2), (-1, 1), (-1, 2)], &[-1, 1, 2, 3]);
    ensure(s5 == expected, || format!("series(5): {s5:?}"))?;
    for a in &catalog::simple_complete() {
        let cd = make_canonical(a, None).map_err(|e| e.to_string())?;
        let g = analyze(a, &cd).map_err(|e| e.to_string())?;
        ensure(g.report.all_hold(), || format!("{}: {:?}", a.name(), g.report.failed()))?;
    }
    use GraphKind::{Left, Right};
    let seeded: Vec<(&str, RootGraph<Qi>)> = vec![
        ("l1", graph(Left, &[-1, 0, 1], &[(1, 0), (-1, 0), (-1, -1)])),
        ("l2", graph(Left, &[-1, 0, 1, 3], &[(1, 0), (-1, 0), (1, 1), (-1, -1), (3, 3), (1, 3)])),
        ("l3", graph(Left, &[0, 1], &[(1, 1), (0, 1)])),
        ("l4", graph(Left, &[-1, 0, 1], &[(1, 0), (1, 1), (-1, -1)])),
        ("l5", graph(Left, &[-1, 0, 1, 2], &[(-1, -1), (1, 1), (2, 2), (1, 0), (-1, 0), (1, 2), (2, 1)])),
        (
            "l6",
            graph(Left, &[-2, -1, 0, 1, 2], &[(-2, -2), (-1, -1), (1, 1), (2, 2), (2, 1), (1, -1), (1, 0), (-1, 0)]),
        ),
        ("r1", graph(Right, &[-1, 0, 1], &[(0, 1), (-1, 0), (1, 0)])),
        ("r2", graph(Right, &[-1, 0, 1, 3], &[(-1, 0), (1, 0), (0, 1), (0, -1), (0, 3), (1, 3)])),
        ("r3", graph(Right, &[-1, 0, 1], &[(-1, 0), (1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)])),
        ("r4", graph(Right, &[-1, 0, 1], &[(0, 1), (0, -1), (1, 0)])),
        ("r5", graph(Right, &[-1, 0, 1, 2], &[(0, -1), (0, 1), (0, 2), (2, 1), (1, 0), (-1, 0)])),
    ];
    for (name, g) in &seeded {
        let failed = failed_set(&check_properties(g));
        ensure(failed == BTreeSet::from([*name]), || format!("seeded {name} fails {failed:?}"))?;
    }
    let split = catalog::split3();
    let cut = catalog::family5_cut(&q(3)).expect("valid");
    for (a, expected) in [(&split, vec!["s1", "s2", "s3"]), (&cut, vec!["s1", "s2"])] {
        let cd = make_canonical(a, None).map_err(|e| e.to_string())?;
        let g = analyze(a, &cd).map_err(|e| e.to_string())?;
        let s = check_simple_properties(&g.left, &g.right).map_err(|e| e.to_string())?;
        let failed = failed_set(&g.report);
        ensure(failed == expected.iter().copied().collect(), || format!("{}: fails {failed:?}", a.name()))?;
        ensure(failed_set(&s) == failed, || format!("{}: simple suite", a.name()))?;
    }
    Ok(format!("two figures reproduced; {} seeded graphs and 2 non-simple algebras fail as intended", seeded.len()))
}

fn classification() -> Outcome {
    ensure(classify(2).map_err(|e| e.to_string())?.classes.is_empty(), || "dim 2 not empty".into())?;
    let r3 = classify(3).map_err(|e| e.to_string())?;
    ensure(r3.class_names() == ["auslander3"] && r3.verified(), || format!("dim 3: {:?}", r3.class_names()))?;
    let r4 = classify(4).map_err(|e| e.to_string())?;
    ensure(r4.class_names() == ["simple4"] && r4.verified(), || format!("dim 4: {:?}", r4.class_names()))?;
    let m = &r4.classes[0].members[0];
    let a = &m.samples[0].algebra;
    let c = |l: i64, r: i64| {
        let idx = |v: i64| a.index_of(&format!("e{v}")).expect("root label");
        a.constant(idx(l), idx(r), idx(l + r)).clone()
    };
    // (alpha, beta) = (c(2,-1), c(-1,2)) proportional to (1, 2)
    ensure(c(-1, 2) == q(2) * c(2, -1), || format!("dim 4 constants ({}, {})", c(2, -1), c(-1, 2)))?;
    let w = catalog::simple4_printed().left_symmetry_violation().ok_or("printed table accepted")?;
    let b = catalog::simple4_printed().basis().to_vec();
    let names: Vec<&str> = w.triple.iter().map(|&i| b[i].as_str()).collect();
    ensure(names == ["e-1", "e2", "e-1"], || format!("witness {names:?}"))?;
    let r5 = classify(5).map_err(|e| e.to_string())?;
    ensure(r5.class_names() == ["family5(λ)", "family5_mod", "series(5)"] && r5.verified(), || {
        format!("dim 5: {:?}", r5.class_names())
    })?;
    let t = r5.tally.as_ref().ok_or("no projective line")?;
    let zeros: Vec<&str> = t.points.iter().map(|(z, _)| z.as_str()).collect();
    ensure(t.open == 1 && t.origin && t.constraint_holds && t.points_distinct, || format!("{t:?}"))?;
    ensure(zeros == ["alpha", "beta", "gamma"], || format!("points {zeros:?}"))?;
    let tr = |a: i64, b: i64, c: i64| [q(a), q(b), q(c)];
    ensure(iso_family5(&tr(1, 2, 0), &tr(2, 4, 0)).map_err(|e| e.to_string())?, || "(1,2,0) ~ (2,4,0)".into())?;
    ensure(!iso_family5(&tr(1, 2, 0), &tr(1, 0, 2)).map_err(|e| e.to_string())?, || "(1,2,0) ~ (1,0,2)".into())?;
    Ok("dims 2-5 reproduced, printed dim-4 table rejected at (e-1, e2, e-1)".into())
}

fn traces() -> Outcome {
    let algebras = complete_algebras();
    for a in &algebras {
        let t = trace_invariants(a).map_err(|e| format!("{}: {e}", a.name()))?;
        ensure(t.holds, || format!("{}: {t:?}", a.name()))?;
    }
    let s = catalog::simple4();
    let (m1, two) = (s.index_of("e-1").expect("label"), s.index_of("e2").expect("label"));
    let mut terms = trace_path_contributions(&s, &[m1, m1, two]);
    terms.sort();
    ensure(terms == [q(-2), q(2)], || format!("dim-4 contributions {terms:?}"))?;
    Ok(format!("{} algebras; Tr(R(e-1)^2 R(e2)) = 2 + (-2)", algebras.len()))
}

fn hereditary() -> Outcome {
    let mut quotients = 0;
    for a in &catalog::complete_controls() {
        let r = is_simple(a);
        let Some(ideal) = r.witness else { return Err(format!("{}: no proper ideal", a.name())) };
        let quo = a.quotient(&ideal.subspace).map_err(|e| e.to_string())?;
        let sub = a.subalgebra(&ideal.subspace).map_err(|e| e.to_string())?;
        for b in [&quo, &sub] {
            let c = is_complete(b).map_err(|e| format!("{}: {e}", a.name()))?;
            ensure(c.verdict, || format!("{}: quotient or ideal not complete", a.name()))?;
        }
        quotients += 1;
    }
    let mut zero_parts = 0;
    for a in &complete_algebras() {
        let cd = make_canonical(a, None).map_err(|e| e.to_string())?;
        let z = cd.decomposition.zero_part().ok_or_else(|| format!("{}: no zero part", a.name()))?;
        let sub = a.subalgebra(&z.space).map_err(|e| e.to_string())?;
        ensure(is_complete(&sub).map_err(|e| e.to_string())?.verdict, || format!("{}: zero part", a.name()))?;
        zero_parts += 1;
    }
    Ok(format!("{quotients} quotients, {zero_parts} zero root subalgebras"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("identity equivalence", identities),
        ("completeness criteria agree", proposition_one),
        ("conjugation and eigenfunction identities", lemma_one),
        ("canonical decomposition exists", existence),
        ("canonical decomposition is unique", uniqueness),
        ("semisimple parts agree and are derivations", semisimple_parts),
        ("root graphs and properties", graphs),
        ("classification", classification),
        ("trace invariants", traces),
        ("hereditary completeness", hereditary),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {reason}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
