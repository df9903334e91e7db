//! Candidate root graphs over vertex templates, filtered by the graph properties and
//! deduplicated up to rotation and dilation.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Qi, Scalar};
use crate::graph::{check_properties, check_simple_properties, GraphKind, PropertyReport, RootGraph};

/// Largest dimension the templates are meant to cover.
pub const MAX_DIM: usize = 6;

/// A vertex set to search over.
#[derive(Clone, Debug)]
pub struct VertexTemplate {
    pub name: String,
    pub vertices: Vec<Qi>,
    /// Stand-in value for a symbolic `λ`. It is not real, so `p + qλ` with rational `p, q`
    /// determines `(p, q)`, and additive relations among vertices hold for the stand-in
    /// exactly when they hold for every `λ`.
    pub symbolic: Option<Qi>,
}

/// The stand-in for a symbolic `λ`.
pub fn lambda_proxy() -> Qi {
    Qi::new(BigRational::new(5.into(), 3.into()), BigRational::new(7.into(), 5.into()))
}

/// `(p, q)` with `v = p + qλ` for the stand-in `λ`.
pub fn form(proxy: &Qi, v: &Qi) -> (Qi, Qi) {
    let q = Qi::real(v.im() / proxy.im());
    let p = Qi::real(v.re() - q.re() * proxy.re());
    (p, q)
}

fn fmt_form(p: &Qi, q: &Qi) -> String {
    let lam = if q.is_zero() {
        String::new()
    } else if q.is_one() {
        "λ".into()
    } else if *q == Qi::int(-1) {
        "-λ".into()
    } else {
        format!("{q}λ")
    };
    match (p.is_zero(), lam.is_empty()) {
        (_, true) => p.to_string(),
        (true, false) => lam,
        (false, false) if p.re().is_negative() => format!("{lam}{p}"),
        (false, false) => format!("{lam}+{p}"),
    }
}

impl VertexTemplate {
    pub fn concrete(name: &str, vertices: Vec<Qi>) -> Self {
        let mut vertices = vertices;
        vertices.sort();
        VertexTemplate { name: name.into(), vertices, symbolic: None }
    }

    /// Printable name of a vertex (`λ`, `-λ`, `2`, ...).
    pub fn label(&self, v: &Qi) -> String {
        match &self.symbolic {
            Some(proxy) => {
                let (p, q) = form(proxy, v);
                fmt_form(&p, &q)
            }
            None => v.to_string(),
        }
    }

    /// Maps from the vertex set onto equivalent normalized vertex sets.
    fn transforms(&self) -> Vec<Box<dyn Fn(&Qi) -> Qi>> {
        match &self.symbolic {
            Some(proxy) => {
                let mut out: Vec<Box<dyn Fn(&Qi) -> Qi>> = Vec::new();
                for (swap, sign) in [(false, 1), (false, -1), (true, 1), (true, -1)] {
                    let proxy = proxy.clone();
                    out.push(Box::new(move |v: &Qi| {
                        let (p, q) = form(&proxy, v);
                        let (p, q) = if swap { (q, p) } else { (p, q) };
                        (p + q * proxy.clone()) * Qi::int(sign)
                    }));
                }
                out
            }
            None => {
                let nz: Vec<&Qi> = self.vertices.iter().filter(|v| !v.is_zero()).collect();
                let min = nz.iter().map(|v| v.norm_sqr()).min().unwrap_or_else(|| BigRational::from_integer(1.into()));
                nz.into_iter()
                    .filter(|v| v.norm_sqr() == min)
                    .map(|u| {
                        let inv = u.inv().expect("nonzero");
                        Box::new(move |v: &Qi| v.clone() * inv.clone()) as Box<dyn Fn(&Qi) -> Qi>
                    })
                    .collect()
            }
        }
    }

    /// Values of `λ` at which the symbolic vertex set degenerates or gains additive relations.
    pub fn exceptional_lambdas(&self) -> Vec<Qi> {
        let Some(proxy) = &self.symbolic else { return Vec::new() };
        let forms: Vec<(Qi, Qi)> = self.vertices.iter().map(|v| form(proxy, v)).collect();
        let mut sums: Vec<(Qi, Qi)> = forms.clone();
        for a in &forms {
            for b in &forms {
                sums.push((a.0.clone() + b.0.clone(), a.1.clone() + b.1.clone()));
            }
        }
        let mut out: Vec<Qi> = Vec::new();
        for s in &sums {
            for t in &forms {
                // p + q λ = p' + q' λ with q != q'
                if s.1 != t.1 {
                    let l = (t.0.clone() - s.0.clone()) / (s.1.clone() - t.1.clone());
                    if !out.contains(&l) {
                        out.push(l);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// `{0, 1, -1, λ, -λ}` in this order.
fn symmetric5(l: &Qi) -> Vec<Qi> {
    vec![Qi::zero(), Qi::one(), -Qi::one(), l.clone(), -l.clone()]
}

/// Triples `(i, j, k)` with `v_i + v_j = v_k`.
fn additive_pattern(v: &[Qi]) -> BTreeSet<(usize, usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..v.len() {
        for j in 0..v.len() {
            let s = v[i].clone() + v[j].clone();
            if let Some(k) = v.iter().position(|x| *x == s) {
                out.insert((i, j, k));
            }
        }
    }
    out
}

/// Templates for a dimension: unions of symmetric pairs `{0, ±1, ±λ}` (with `λ` symbolic,
/// plus the small Gaussian integers that create extra additive relations) and the
/// progressions `{-1, 0, 1, ..., k}`.
pub fn default_templates(dim: usize) -> Result<Vec<VertexTemplate>> {
    if dim < 2 {
        return Err(Error::BadParameters(format!("dimension must be at least 2, got {dim}")));
    }
    if dim > MAX_DIM {
        return Err(Error::TemplateExhausted(dim));
    }
    let mut out = Vec::new();
    // 0 and a symmetric pair are always present, so nothing fits in dimension 2.
    if dim < 3 {
        return Ok(out);
    }
    match dim {
        3 => out.push(VertexTemplate::concrete("symmetric", vec![Qi::int(-1), Qi::zero(), Qi::one()])),
        5 => {
            let proxy = lambda_proxy();
            let generic = VertexTemplate {
                name: "symmetric(λ)".into(),
                vertices: {
                    let mut v = symmetric5(&proxy);
                    v.sort();
                    v
                },
                symbolic: Some(proxy.clone()),
            };
            let generic_pattern = additive_pattern(&symmetric5(&proxy));
            let mut seen: Vec<Vec<Qi>> = Vec::new();
            for re in (-3..=3).rev() {
                for im in -3..=3 {
                    let l = Qi::gaussian(re, im);
                    if l.norm_sqr() < BigRational::from_integer(1.into()) || l.is_one() || l == Qi::int(-1) {
                        continue;
                    }
                    if additive_pattern(&symmetric5(&l)) == generic_pattern {
                        continue;
                    }
                    let t = VertexTemplate::concrete(&format!("symmetric(λ={l})"), symmetric5(&l));
                    let key = canonical_vertices(&t);
                    if !seen.contains(&key) {
                        seen.push(key);
                        out.push(t);
                    }
                }
            }
            out.insert(0, generic);
        }
        _ => {}
    }
    let top = dim as i64 - 2;
    out.push(VertexTemplate::concrete("progression", (-1..=top).map(Qi::int).collect()));
    Ok(out)
}

fn canonical_vertices(t: &VertexTemplate) -> Vec<Qi> {
    t.transforms()
        .iter()
        .map(|f| {
            let mut v: Vec<Qi> = t.vertices.iter().map(&f).collect();
            v.sort();
            v
        })
        .min()
        .unwrap_or_default()
}

#[derive(Clone, Debug)]
pub struct GraphCandidate {
    pub template: VertexTemplate,
    pub left: RootGraph<Qi>,
    pub right: RootGraph<Qi>,
    /// `l1`–`l6`, `r1`–`r5` and `s1`–`s3`; all hold for an enumerated candidate.
    pub report: PropertyReport<Qi>,
}

impl GraphCandidate {
    pub fn dim(&self) -> usize {
        self.left.vertices.len()
    }

    /// Non-loop left edges, labelled.
    pub fn edge_labels(&self) -> Vec<String> {
        self.left
            .non_loop_edges()
            .map(|e| format!("{} -> {}", self.template.label(&e.from), self.template.label(&e.to)))
            .collect()
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        self.left.vertices.iter().map(|v| self.template.label(v)).collect()
    }

    fn key(&self) -> (Vec<Qi>, Vec<(Qi, Qi)>) {
        self.template
            .transforms()
            .iter()
            .map(|f| {
                let mut v: Vec<Qi> = self.left.vertices.iter().map(&f).collect();
                v.sort();
                let mut e: Vec<(Qi, Qi)> = self.left.non_loop_edges().map(|e| (f(&e.from), f(&e.to))).collect();
                e.sort();
                (v, e)
            })
            .min()
            .expect("at least one transform")
    }
}

fn loops(vertices: &[Qi]) -> Vec<(Qi, Qi)> {
    vertices.iter().filter(|v| !v.is_zero()).map(|v| (v.clone(), v.clone())).collect()
}

/// Non-loop left edges `b -> a + b` with `a, b` nonzero vertices and `a + b` a vertex.
pub fn possible_edges(vertices: &[Qi]) -> Vec<(Qi, Qi)> {
    let mut out = Vec::new();
    for a in vertices.iter().filter(|v| !v.is_zero()) {
        for b in vertices.iter().filter(|v| !v.is_zero()) {
            let s = a.clone() + b.clone();
            if vertices.contains(&s) {
                out.push((b.clone(), s));
            }
        }
    }
    out.sort();
    out
}

const MAX_FREE_EDGES: usize = 22;

/// Left graphs on the template's vertices that, together with their duals, satisfy every
/// graph property.
pub fn candidates_for(template: &VertexTemplate) -> Result<Vec<GraphCandidate>> {
    let possible = possible_edges(&template.vertices);
    if possible.len() > MAX_FREE_EDGES {
        return Err(Error::TemplateExhausted(template.vertices.len()));
    }
    let base = loops(&template.vertices);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << possible.len()) {
        let mut edges = base.clone();
        edges.extend(possible.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()));
        if !quick_filter(&edges) {
            continue;
        }
        let left = RootGraph::new(GraphKind::Left, &template.vertices, &edges)?;
        let lr = check_properties(&left);
        if !lr.all_hold() {
            continue;
        }
        let right = left.dual();
        let rr = check_properties(&right);
        if !rr.all_hold() {
            continue;
        }
        let sr = check_simple_properties(&left, &right)?;
        if !sr.all_hold() {
            continue;
        }
        out.push(GraphCandidate { template: template.clone(), left, right, report: lr.merge(rr).merge(sr) });
    }
    Ok(out)
}

/// Cheap necessary conditions checked before building the graphs: edges into 0 come in
/// symmetric pairs, and some symmetric pair reaches 0.
fn quick_filter(edges: &[(Qi, Qi)]) -> bool {
    let into_zero: Vec<&Qi> = edges.iter().filter(|(_, t)| t.is_zero()).map(|(f, _)| f).collect();
    into_zero.iter().all(|f| into_zero.contains(&&-(*f).clone())) && !into_zero.is_empty()
}

/// Candidates over all templates, deduplicated up to rotation and dilation.
pub fn enumerate_graphs(dim: usize, templates: &[VertexTemplate]) -> Result<Vec<GraphCandidate>> {
    if dim > MAX_DIM {
        return Err(Error::TemplateExhausted(dim));
    }
    let mut out: Vec<GraphCandidate> = Vec::new();
    let mut keys = Vec::new();
    for t in templates.iter().filter(|t| t.vertices.len() == dim) {
        for c in candidates_for(t)? {
            let k = c.key();
            if !keys.contains(&k) {
                keys.push(k);
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(dim: usize) -> Vec<GraphCandidate> {
        enumerate_graphs(dim, &default_templates(dim).unwrap()).unwrap()
    }

    #[test]
    fn nothing_in_dimension_two() {
        assert!(run(2).is_empty());
    }

    #[test]
    fn one_graph_in_dimension_three() {
        let c = run(3);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].edge_labels(), ["-1 -> 0", "1 -> 0"]);
    }

    #[test]
    fn one_graph_in_dimension_four() {
        let c = run(4);
        assert_eq!(c.len(), 1);
        let mut e = c[0].edge_labels();
        e.sort();
        assert_eq!(e, ["-1 -> 0", "-1 -> 1", "1 -> 0", "2 -> 1"]);
    }

    #[test]
    fn forms_and_labels() {
        let p = lambda_proxy();
        let v = Qi::int(2) * p.clone() - Qi::one();
        assert_eq!(form(&p, &v), (Qi::int(-1), Qi::int(2)));
        let t = &default_templates(5).unwrap()[0];
        assert_eq!(t.label(&v), "2λ-1");
        assert_eq!(t.label(&-p.clone()), "-λ");
        let ex = t.exceptional_lambdas();
        for l in [Qi::int(2), Qi::int(-2), Qi::ratio(1, 2), Qi::int(1), Qi::zero()] {
            assert!(ex.contains(&l), "{l}");
        }
    }

    #[test]
    fn only_lambda_two_is_special() {
        let names: Vec<String> = default_templates(5).unwrap().iter().map(|t| t.name.clone()).collect();
        assert_eq!(names, ["symmetric(λ)", "symmetric(λ=2)", "progression"]);
        assert!(matches!(default_templates(7), Err(Error::TemplateExhausted(7))));
    }
}
