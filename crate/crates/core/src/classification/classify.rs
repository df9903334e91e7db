//! The end-to-end classification: enumerate graphs, solve for structure constants, verify
//! sample algebras and group the families.

use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::completeness::is_complete;
use crate::decomposition::make_canonical;
use crate::error::{Error, Result};
use crate::field::{Matrix, Qi, Scalar};
use crate::graph::{analyze, RootBasis};
use crate::ideals::is_simple;

use super::catalog::{family5, family5_mod, series};
use super::enumerate::{default_templates, enumerate_graphs, form, GraphCandidate, VertexTemplate};
use super::iso::{collinear, Triple};
use super::solve::{solve_outcome, Family};

/// Values of `λ` at which a symbolic family is verified.
const LAMBDA_SAMPLES: [(i64, i64); 2] = [(3, 0), (2, 1)];

/// Values tried for free unknowns when no reference point is known.
const FREE_VALUES: [i64; 5] = [1, 2, -1, 3, -2];

/// Dimensions without a completeness-of-list claim.
pub const ENUMERATION_ONLY_BANNER: &str = "enumeration only, no completeness-of-list claim";

/// Checks run on one sample algebra.
#[derive(Clone, Debug)]
pub struct SampleCheck {
    pub algebra: Algebra<Qi>,
    pub left_symmetric: bool,
    pub complete: bool,
    pub one_dimensional: bool,
    pub simple: bool,
    pub graph_properties: bool,
    pub notes: Vec<String>,
}

impl SampleCheck {
    pub fn passed(&self) -> bool {
        self.left_symmetric && self.complete && self.one_dimensional && self.simple && self.graph_properties
    }

    fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.name(),
            "left_symmetric": self.left_symmetric,
            "complete": self.complete,
            "one_dimensional": self.one_dimensional,
            "simple": self.simple,
            "graph_properties": self.graph_properties,
            "notes": self.notes,
        })
    }
}

pub fn verify_sample(a: &Algebra<Qi>) -> SampleCheck {
    let mut notes = Vec::new();
    let left_symmetric = a.is_left_symmetric();
    let complete = match is_complete(a) {
        Ok(r) => r.verdict,
        Err(e) => {
            notes.push(format!("completeness: {e}"));
            false
        }
    };
    let (one_dimensional, graph_properties) = match make_canonical(a, None) {
        Ok(cd) => {
            let one = RootBasis::new(a, &cd).is_ok();
            let props = match analyze(a, &cd) {
                Ok(g) => g.report.all_hold(),
                Err(e) => {
                    notes.push(format!("graphs: {e}"));
                    false
                }
            };
            (one, props)
        }
        Err(e) => {
            notes.push(format!("decomposition: {e}"));
            (false, false)
        }
    };
    let simple = is_simple(a).simple;
    SampleCheck { algebra: a.clone(), left_symmetric, complete, one_dimensional, simple, graph_properties, notes }
}

/// One solution family on one candidate graph.
#[derive(Clone, Debug)]
pub struct MemberReport {
    pub template: String,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub family: Family,
    pub samples: Vec<SampleCheck>,
    /// Catalog algebra equal to the first sample, if any.
    pub matches: Option<String>,
    /// `(α, β, γ)` of the first sample, for the `λ = 2` vertex set.
    pub triple: Option<Triple>,
    pub dot: Option<String>,
}

impl MemberReport {
    pub fn verified(&self) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(SampleCheck::passed)
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "template": self.template,
            "vertices": self.vertices,
            "edges": self.edges,
            "constants": self.family.describe(),
            "parameters": self.family.free.iter().map(|&i| self.family.names[i].clone()).collect::<Vec<_>>(),
            "conditions": self.family.conditions(),
            "moduli": self.family.moduli(),
            "verified": self.verified(),
            "samples": self.samples.iter().map(SampleCheck::to_json).collect::<Vec<_>>(),
        });
        if let Some(m) = &self.matches {
            v["matches"] = json!(m);
        }
        if let Some(t) = &self.triple {
            v["triple"] = json!(t.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
        v
    }
}

/// Members grouped under one name.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub name: String,
    pub members: Vec<MemberReport>,
    /// Values of `λ` excluded from a symbolic class.
    pub lambda_excluded: Vec<Qi>,
}

impl ClassReport {
    pub fn verified(&self) -> bool {
        self.members.iter().all(MemberReport::verified)
    }
}

/// The `λ = 2` family as a projective line of triples.
#[derive(Clone, Debug, Default)]
pub struct ProjectiveTally {
    /// Members with one modulus: the open part of the line.
    pub open: usize,
    /// Isolated points, with the coordinate that vanishes.
    pub points: Vec<(String, Triple)>,
    /// Whether the zero triple (the algebra `family5(2)`) occurs.
    pub origin: bool,
    /// Every observed triple satisfies `2α = β + γ`.
    pub constraint_holds: bool,
    /// The isolated points are pairwise non-isomorphic.
    pub points_distinct: bool,
}

impl ProjectiveTally {
    fn to_json(&self) -> Value {
        json!({
            "open": self.open,
            "points": self.points.iter().map(|(z, t)| json!({
                "vanishing": z,
                "triple": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "origin": self.origin,
            "constraint_holds": self.constraint_holds,
            "points_distinct": self.points_distinct,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub dim: usize,
    pub banner: Option<String>,
    pub candidates: usize,
    /// Candidate graphs that carry no algebra.
    pub unsolvable: Vec<String>,
    pub classes: Vec<ClassReport>,
    pub tally: Option<ProjectiveTally>,
}

impl ClassificationReport {
    pub fn verified(&self) -> bool {
        self.classes.iter().all(ClassReport::verified)
    }

    pub fn class_names(&self) -> Vec<&str> {
        self.classes.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn class(&self, name: &str) -> Option<&ClassReport> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "dim": self.dim,
            "candidates": self.candidates,
            "unsolvable": self.unsolvable,
            "verified": self.verified(),
            "classes": self.classes.iter().map(|c| json!({
                "name": c.name,
                "verified": c.verified(),
                "lambda_excluded": c.lambda_excluded.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "members": c.members.iter().map(MemberReport::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        if let Some(b) = &self.banner {
            v["banner"] = json!(b);
        }
        if let Some(t) = &self.tally {
            v["projective_line"] = t.to_json();
        }
        v
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(b) = &self.banner {
            writeln!(f, "NOTE: {b}")?;
        }
        writeln!(f, "dimension {}: {} candidate graphs, {} classes", self.dim, self.candidates, self.classes.len())?;
        for c in &self.classes {
            let ok = if c.verified() { "verified" } else { "NOT verified" };
            writeln!(f, "class {} ({ok})", c.name)?;
            if !c.lambda_excluded.is_empty() {
                let ex: Vec<String> = c.lambda_excluded.iter().map(Qi::to_string).collect();
                writeln!(f, "  λ not in {{{}}}", ex.join(", "))?;
            }
            for m in &c.members {
                writeln!(f, "  graph {}", m.edges.join(", "))?;
                writeln!(f, "    {} (moduli {})", m.family, m.family.moduli())?;
                if let Some(t) = &m.triple {
                    writeln!(f, "    (α, β, γ) = ({}, {}, {})", t[0], t[1], t[2])?;
                }
                if let Some(n) = &m.matches {
                    writeln!(f, "    equals {n}")?;
                }
            }
        }
        if let Some(t) = &self.tally {
            writeln!(
                f,
                "projective line at λ = 2: open part {}, points {}, origin {}, 2α = β+γ {}",
                t.open,
                t.points.iter().map(|(z, _)| format!("{z}=0")).collect::<Vec<_>>().join(" "),
                if t.origin { "yes" } else { "no" },
                if t.constraint_holds { "holds" } else { "FAILS" }
            )?;
        }
        for u in &self.unsolvable {
            writeln!(f, "no algebra on graph {u}")?;
        }
        Ok(())
    }
}

fn q(n: i64) -> Qi {
    Qi::int(n)
}

fn vertex_value(template: &VertexTemplate, lambda: Option<&Qi>) -> impl Fn(&Qi) -> Qi {
    let proxy = template.symbolic.clone();
    let lambda = lambda.cloned();
    move |v: &Qi| match (&proxy, &lambda) {
        (Some(p), Some(l)) => {
            let (a, b) = form(p, v);
            a + b * l.clone()
        }
        _ => v.clone(),
    }
}

/// Coefficient of `e_{a+b}` in `e_a e_b` for a graded algebra labelled by roots.
fn graded_constant(r: &Algebra<Qi>, a: &Qi, b: &Qi) -> Option<Qi> {
    let idx = |v: &Qi| r.index_of(&format!("e{v}"));
    Some(r.constant(idx(a)?, idx(b)?, idx(&(a.clone() + b.clone()))?).clone())
}

/// The family's point that reproduces `reference`, if the reference lies on it.
fn reference_point(
    family: &Family,
    vv: &impl Fn(&Qi) -> Qi,
    lambda: Option<&Qi>,
    reference: &Algebra<Qi>,
) -> Option<Vec<Qi>> {
    let mut point = vec![Qi::one(); family.nvars()];
    for &i in &family.free {
        let (a, b) = &family.unknowns[i];
        point[i] = graded_constant(reference, &vv(a), &vv(b))?;
    }
    if let Some(l) = lambda {
        *point.last_mut().expect("λ variable") = l.clone();
    }
    Some(point)
}

/// Points with free unknowns drawn from small integers, in a fixed order.
fn search_points(family: &Family, lambda: Option<&Qi>, want: usize) -> Vec<Vec<Qi>> {
    let k = family.free.len();
    let mut out = Vec::new();
    let total = FREE_VALUES.len().pow(k as u32);
    for code in 0..total {
        let mut point = vec![Qi::one(); family.nvars()];
        let mut c = code;
        for &i in &family.free {
            point[i] = q(FREE_VALUES[c % FREE_VALUES.len()]);
            c /= FREE_VALUES.len();
        }
        if let Some(l) = lambda {
            *point.last_mut().expect("λ variable") = l.clone();
        }
        if family.instantiate(&point).is_some() {
            out.push(point);
            if out.len() == want {
                break;
            }
        }
    }
    out
}

/// The algebra with roots negated: `f_{-v} = ±e_v`, `f_0 = -e_0`, signs chosen so that
/// `f_v f_{-v} = f_0` whenever `e_{-v} e_v = e_0`. Real roots only.
fn mirror(a: &Algebra<Qi>) -> Result<Algebra<Qi>> {
    let roots: Vec<Qi> = a
        .basis()
        .iter()
        .map(|l| l.strip_prefix('e').and_then(|s| s.parse::<Qi>().ok()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::BadParameters("mirror needs root labels".into()))?;
    let mut targets: Vec<Qi> = roots.iter().map(|r| -r.clone()).collect();
    targets.sort();
    let n = a.dim();
    let p = Matrix::from_fn(n, n, |i, j| {
        let w = &targets[j];
        if roots[i] != -w.clone() {
            Qi::zero()
        } else if w.re().is_positive() {
            q(1)
        } else {
            q(-1)
        }
    });
    let m = a.change_basis(&p, targets.iter().map(|w| format!("e{w}")).collect())?;
    Ok(m.with_name(&format!("mirror of {}", a.name())))
}

fn is_mirrored(family: &Family) -> bool {
    let mirrored = [(q(-2), q(1)), (q(1), q(-2)), (q(1), q(1))];
    family.unknowns.iter().any(|u| mirrored.contains(u))
}

fn triple_of(a: &Algebra<Qi>) -> Option<Triple> {
    Some([
        graded_constant(a, &q(2), &q(-1))?,
        graded_constant(a, &q(-1), &q(2))?,
        graded_constant(a, &q(-1), &q(-1))?,
    ])
}

fn is_lambda_two(template: &VertexTemplate) -> bool {
    template.symbolic.is_none() && template.vertices == [q(-2), q(-1), q(0), q(1), q(2)]
}

fn is_progression(template: &VertexTemplate) -> bool {
    let n = template.vertices.len() as i64;
    template.symbolic.is_none() && template.vertices == (-1..n - 1).map(q).collect::<Vec<_>>()
}

fn series_reference(dim: usize) -> Option<Algebra<Qi>> {
    let s = series(dim).ok()?;
    Some(if dim == 4 { s.with_name("simple4") } else { s })
}

fn same_table(a: &Algebra<Qi>, b: &Algebra<Qi>) -> bool {
    a.clone().with_name(b.name()) == *b
}

fn build_member(candidate: &GraphCandidate, family: Family) -> MemberReport {
    let t = &candidate.template;
    let name = format!("{} {}", t.name, candidate.edge_labels().join(", "));
    let mut samples = Vec::new();
    let mut matches = None;
    let mut triple = None;
    if t.symbolic.is_some() {
        let excluded = t.exceptional_lambdas();
        for (re, im) in LAMBDA_SAMPLES {
            let l = Qi::gaussian(re, im);
            if excluded.contains(&l) {
                continue;
            }
            let vv = vertex_value(t, Some(&l));
            let roots = candidate.left.vertices.clone();
            let reference = family5(&l).ok();
            let point = reference
                .as_ref()
                .and_then(|r| reference_point(&family, &vv, Some(&l), r))
                .filter(|p| family.instantiate(p).is_some())
                .or_else(|| search_points(&family, Some(&l), 1).pop());
            let Some(point) = point else { continue };
            if let Some(a) = family.algebra(&format!("{name} at λ={l}"), &roots, &point, &vv) {
                if matches.is_none() {
                    matches = reference.filter(|r| same_table(&a, r)).map(|r| r.name().to_string());
                }
                samples.push(verify_sample(&a));
            }
        }
    } else {
        let vv = vertex_value(t, None);
        let roots = candidate.left.vertices.clone();
        let reference = if is_progression(t) { series_reference(candidate.dim()) } else { None };
        let mut points: Vec<Vec<Qi>> = reference
            .as_ref()
            .and_then(|r| reference_point(&family, &vv, None, r))
            .filter(|p| family.instantiate(p).is_some())
            .into_iter()
            .collect();
        let want = if family.moduli() > 0 { 2 } else { 1 };
        for p in search_points(&family, None, want + 1) {
            if points.len() < want && !points.contains(&p) {
                points.push(p);
            }
        }
        for (k, p) in points.iter().enumerate() {
            let Some(a) = family.algebra(&format!("{name} #{k}"), &roots, p, &vv) else { continue };
            if k == 0 {
                if let Some(r) = reference.as_ref().filter(|r| same_table(&a, r)) {
                    matches = Some(r.name().to_string());
                }
                if is_lambda_two(t) {
                    let oriented = if is_mirrored(&family) { mirror(&a).ok() } else { Some(a.clone()) };
                    triple = oriented.as_ref().and_then(triple_of);
                    if let (Some(o), Some(tr)) = (&oriented, &triple) {
                        if let Ok(r) = family5_mod(&tr[0], &tr[1], &tr[2]) {
                            if same_table(o, &r) {
                                matches = Some(r.name().to_string());
                            }
                        }
                    }
                }
            }
            samples.push(verify_sample(&a));
        }
    }
    MemberReport {
        template: t.name.clone(),
        vertices: candidate.vertex_labels(),
        edges: candidate.edge_labels(),
        dot: samples.first().and_then(|s| {
            let cd = make_canonical(&s.algebra, None).ok()?;
            Some(analyze(&s.algebra, &cd).ok()?.left.to_dot())
        }),
        family,
        samples,
        matches,
        triple,
    }
}

fn class_name(candidate: &GraphCandidate, member: &MemberReport) -> String {
    let t = &candidate.template;
    if t.symbolic.is_some() {
        "family5(λ)".into()
    } else if is_lambda_two(t) {
        "family5_mod".into()
    } else if let Some(m) = &member.matches {
        m.clone()
    } else {
        format!("{} {}", t.name, candidate.edge_labels().join(", "))
    }
}

fn zero_coordinate(t: &Triple) -> Option<&'static str> {
    let names = ["alpha", "beta", "gamma"];
    let zeros: Vec<usize> = (0..3).filter(|&i| t[i].is_zero()).collect();
    (zeros.len() == 1).then(|| names[zeros[0]])
}

fn tally(class: &ClassReport) -> ProjectiveTally {
    let mut out = ProjectiveTally { constraint_holds: true, points_distinct: true, ..Default::default() };
    for m in &class.members {
        let Some(t) = &m.triple else { continue };
        if q(2) * t[0].clone() != t[1].clone() + t[2].clone() {
            out.constraint_holds = false;
        }
        if t.iter().all(Scalar::is_zero) {
            out.origin = true;
        } else if m.family.moduli() > 0 {
            out.open += 1;
            // every sample of the open part satisfies the constraint too
            for s in &m.samples {
                let oriented = if is_mirrored(&m.family) { mirror(&s.algebra).ok() } else { Some(s.algebra.clone()) };
                match oriented.as_ref().and_then(triple_of) {
                    Some(u) if q(2) * u[0].clone() == u[1].clone() + u[2].clone() => {}
                    _ => out.constraint_holds = false,
                }
            }
        } else if let Some(z) = zero_coordinate(t) {
            out.points.push((z.to_string(), t.clone()));
        }
    }
    out.points.sort_by(|a, b| a.0.cmp(&b.0));
    for (i, a) in out.points.iter().enumerate() {
        for b in &out.points[i + 1..] {
            if collinear(&a.1, &b.1) {
                out.points_distinct = false;
            }
        }
    }
    out
}

/// Runs the pipeline over explicit templates.
pub fn classify_with(dim: usize, templates: &[VertexTemplate]) -> Result<ClassificationReport> {
    let candidates = enumerate_graphs(dim, templates)?;
    let outcomes: Vec<_> = candidates.par_iter().map(solve_outcome).collect();
    let incomplete: Vec<String> = candidates
        .iter()
        .zip(&outcomes)
        .flat_map(|(c, o)| o.incomplete.iter().map(move |s| format!("{}: {s}", c.edge_labels().join(", "))))
        .collect();
    if !incomplete.is_empty() {
        return Err(Error::SolverIncomplete(incomplete.join("; ")));
    }
    let mut unsolvable = Vec::new();
    let mut jobs = Vec::new();
    for (c, o) in candidates.iter().zip(outcomes) {
        if o.families.is_empty() {
            unsolvable.push(format!("{} {}", c.template.name, c.edge_labels().join(", ")));
        }
        jobs.extend(o.families.into_iter().map(|f| (c, f)));
    }
    let members: Vec<(String, MemberReport)> = jobs
        .into_par_iter()
        .map(|(c, f)| {
            let m = build_member(c, f);
            (class_name(c, &m), m)
        })
        .collect();
    let mut classes: Vec<ClassReport> = Vec::new();
    for (name, m) in members {
        match classes.iter_mut().find(|c| c.name == name) {
            Some(c) => c.members.push(m),
            None => classes.push(ClassReport { name, members: vec![m], lambda_excluded: Vec::new() }),
        }
    }
    for c in classes.iter_mut() {
        if c.name == "family5(λ)" {
            if let Some(t) = templates.iter().find(|t| t.symbolic.is_some() && t.vertices.len() == dim) {
                c.lambda_excluded = t.exceptional_lambdas();
            }
        }
    }
    let tally = classes.iter().find(|c| c.name == "family5_mod").map(tally);
    Ok(ClassificationReport {
        dim,
        banner: (dim > 5).then(|| ENUMERATION_ONLY_BANNER.to_string()),
        candidates: candidates.len(),
        unsolvable,
        classes,
        tally,
    })
}

/// Classification over the default templates. Dimension 6 runs with a banner.
pub fn classify(dim: usize) -> Result<ClassificationReport> {
    classify_with(dim, &default_templates(dim)?)
}
