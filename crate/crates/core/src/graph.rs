//! Root graphs of a one-dimensional canonical decomposition and their properties.

use std::collections::VecDeque;
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::decomposition::CanonicalDecomposition;
use crate::error::{Error, Result};
use crate::field::{vector, Matrix, Scalar};

/// Basis `e_λ` of root vectors with `e_λ e_μ = c_{λ,μ} e_{λ+μ}`.
#[derive(Clone, Debug)]
pub struct RootBasis<F: Scalar> {
    /// Sorted root values; `e_0` spans the Cartan subalgebra.
    pub roots: Vec<F>,
    /// `vectors[i]` is `e_{roots[i]}` in the coordinates of the original algebra.
    pub vectors: Vec<Vec<F>>,
    c: Vec<Vec<F>>,
}

fn position<F: Scalar>(values: &[F], x: &F) -> Option<usize> {
    values.iter().position(|v| v.approx_eq(x))
}

impl<F: Scalar> RootBasis<F> {
    pub fn new(a: &Algebra<F>, cd: &CanonicalDecomposition<F>) -> Result<Self> {
        let dec = &cd.decomposition;
        if dec.cartan.dim() != 1 {
            return Err(Error::NotOneDimensional { root: "0".into(), dim: dec.cartan.dim() });
        }
        if let Some(p) = dec.parts.iter().find(|p| p.space.dim() != 1) {
            return Err(Error::NotOneDimensional { root: p.root[0].to_string(), dim: p.space.dim() });
        }
        let mut pairs: Vec<(F, Vec<F>)> = dec
            .parts
            .iter()
            .map(|p| {
                let v = if p.root[0].is_zero() { dec.cartan.basis()[0].clone() } else { p.space.basis()[0].clone() };
                (p.root[0].clone(), v)
            })
            .collect();
        pairs.sort_by(|x, y| x.0.sort_cmp(&y.0));
        let (roots, vectors): (Vec<F>, Vec<Vec<F>>) = pairs.into_iter().unzip();
        let n = roots.len();
        let scale = 1.0 + a.constants_magnitude();
        let mut c = vec![vec![F::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = a.mul(&vectors[i], &vectors[j]);
                if prod.iter().all(|x| x.negligible(scale)) {
                    continue;
                }
                let sum = roots[i].clone() + roots[j].clone();
                let k = position(&roots, &sum).ok_or(Error::NotCanonical)?;
                let p = vectors[k].iter().position(|x| !x.is_zero()).expect("nonzero root vector");
                let coef = prod[p].clone() / vectors[k][p].clone();
                if !vector::approx_eq(&prod, &vector::scale(&vectors[k], &coef)) {
                    return Err(Error::NotCanonical);
                }
                c[i][j] = coef;
            }
        }
        let zero = position(&roots, &F::zero()).ok_or(Error::NotCanonical)?;
        if let Some(j) = (0..n).find(|&j| !c[j][zero].is_zero()) {
            return Err(Error::NotComplete(format!("R(e0) e_{} is not zero", roots[j])));
        }
        Ok(RootBasis { roots, vectors, c })
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn index(&self, root: &F) -> Option<usize> {
        position(&self.roots, root)
    }

    /// `c_{λ,μ}`, zero when either argument is not a root.
    pub fn constant(&self, lambda: &F, mu: &F) -> F {
        match (self.index(lambda), self.index(mu)) {
            (Some(i), Some(j)) => self.c[i][j].clone(),
            _ => F::zero(),
        }
    }

    /// The algebra rewritten in the root basis, with labels `e{λ}`.
    pub fn algebra(&self, a: &Algebra<F>) -> Result<Algebra<F>> {
        let p = Matrix::from_columns(a.dim(), &self.vectors)?;
        let labels = self.roots.iter().map(|r| format!("e{r}")).collect();
        a.change_basis(&p, labels)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Left,
    Right,
}

impl GraphKind {
    pub fn flip(self) -> Self {
        match self {
            GraphKind::Left => GraphKind::Right,
            GraphKind::Right => GraphKind::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Left => "left",
            GraphKind::Right => "right",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge<F> {
    pub from: F,
    pub to: F,
    /// The structure constant behind the edge, when the graph came from an algebra.
    pub coefficient: Option<F>,
}

#[derive(Clone, Debug)]
pub struct RootGraph<F> {
    pub kind: GraphKind,
    pub vertices: Vec<F>,
    pub edges: Vec<Edge<F>>,
}

impl<F: Scalar> RootGraph<F> {
    /// A graph without coefficient data. Every endpoint must be listed as a vertex.
    pub fn new(kind: GraphKind, vertices: &[F], edges: &[(F, F)]) -> Result<Self> {
        let edges = edges.iter().map(|(f, t)| Edge { from: f.clone(), to: t.clone(), coefficient: None }).collect();
        let g = Self::assemble(kind, vertices.to_vec(), edges);
        if let Some(e) = g.edges.iter().find(|e| g.index(&e.from).is_none() || g.index(&e.to).is_none()) {
            return Err(Error::BadParameters(format!("edge {} -> {} leaves the vertex set", e.from, e.to)));
        }
        Ok(g)
    }

    fn assemble(kind: GraphKind, mut vertices: Vec<F>, mut edges: Vec<Edge<F>>) -> Self {
        vertices.sort_by(|a, b| a.sort_cmp(b));
        vertices.dedup_by(|a, b| a.approx_eq(b));
        edges.sort_by(|a, b| a.from.sort_cmp(&b.from).then_with(|| a.to.sort_cmp(&b.to)));
        edges.dedup_by(|a, b| a.from.approx_eq(&b.from) && a.to.approx_eq(&b.to));
        RootGraph { kind, vertices, edges }
    }

    /// Whether every edge carries its structure constant.
    pub fn weighted(&self) -> bool {
        self.edges.iter().all(|e| e.coefficient.is_some())
    }

    pub fn index(&self, v: &F) -> Option<usize> {
        position(&self.vertices, v)
    }

    pub fn has_vertex(&self, v: &F) -> bool {
        self.index(v).is_some()
    }

    pub fn edge(&self, from: &F, to: &F) -> Option<&Edge<F>> {
        self.edges.iter().find(|e| e.from.approx_eq(from) && e.to.approx_eq(to))
    }

    pub fn has_edge(&self, from: &F, to: &F) -> bool {
        self.edge(from, to).is_some()
    }

    pub fn is_loop(e: &Edge<F>) -> bool {
        e.from.approx_eq(&e.to)
    }

    pub fn non_loop_edges(&self) -> impl Iterator<Item = &Edge<F>> {
        self.edges.iter().filter(|e| !Self::is_loop(e))
    }

    /// `c_{a,b}` read off the edge it produces; `None` without coefficient data.
    pub fn constant(&self, a: &F, b: &F) -> Option<F> {
        if !self.weighted() {
            return None;
        }
        let target = a.clone() + b.clone();
        let e = match self.kind {
            GraphKind::Left => self.edge(b, &target),
            GraphKind::Right => self.edge(a, &target),
        };
        Some(e.and_then(|e| e.coefficient.clone()).unwrap_or_else(F::zero))
    }

    /// Moves each edge `λ -> μ` to `μ-λ -> μ`, producing the graph of the other kind.
    pub fn dual(&self) -> Self {
        let mut vertices = self.vertices.clone();
        let edges: Vec<Edge<F>> = self
            .edges
            .iter()
            .map(|e| Edge { from: e.to.clone() - e.from.clone(), to: e.to.clone(), coefficient: e.coefficient.clone() })
            .collect();
        vertices.extend(edges.iter().map(|e| e.from.clone()));
        Self::assemble(self.kind.flip(), vertices, edges)
    }

    pub fn same_edges(&self, other: &Self) -> bool {
        self.edges.len() == other.edges.len() && self.edges.iter().all(|e| other.has_edge(&e.from, &e.to))
    }

    pub fn to_dot(&self) -> String {
        let name = match self.kind {
            GraphKind::Left => "gamma_l",
            GraphKind::Right => "gamma_r",
        };
        let mut out = format!("digraph {name} {{\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            match &e.coefficient {
                Some(c) => out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{c}\"];\n", e.from, e.to)),
                None => out.push_str(&format!("  \"{}\" -> \"{}\";\n", e.from, e.to)),
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "vertices": self.vertices.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| {
                let mut v = json!({ "from": e.from.to_json(), "to": e.to.to_json() });
                if let Some(c) = &e.coefficient {
                    v["coefficient"] = c.to_json();
                }
                v
            }).collect::<Vec<_>>(),
        })
    }
}

/// `Γ_l` (edge `λ -> μ` iff `c_{μ-λ,λ} ≠ 0`) or `Γ_r` (iff `c_{λ,μ-λ} ≠ 0`).
pub fn graph_from_basis<F: Scalar>(basis: &RootBasis<F>, kind: GraphKind) -> RootGraph<F> {
    let mut edges = Vec::new();
    for (i, a) in basis.roots.iter().enumerate() {
        for (j, b) in basis.roots.iter().enumerate() {
            let c = &basis.c[i][j];
            if c.is_zero() {
                continue;
            }
            let target = a.clone() + b.clone();
            let from = match kind {
                GraphKind::Left => b.clone(),
                GraphKind::Right => a.clone(),
            };
            edges.push(Edge { from, to: target, coefficient: Some(c.clone()) });
        }
    }
    RootGraph::assemble(kind, basis.roots.clone(), edges)
}

pub fn build_graph<F: Scalar>(a: &Algebra<F>, cd: &CanonicalDecomposition<F>, kind: GraphKind) -> Result<RootGraph<F>> {
    Ok(graph_from_basis(&RootBasis::new(a, cd)?, kind))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    R1,
    R2,
    R3,
    R4,
    R5,
    S1,
    S2,
    S3,
}

impl Property {
    pub const LEFT: [Property; 6] = [Property::L1, Property::L2, Property::L3, Property::L4, Property::L5, Property::L6];
    pub const RIGHT: [Property; 5] = [Property::R1, Property::R2, Property::R3, Property::R4, Property::R5];
    pub const SIMPLE: [Property; 3] = [Property::S1, Property::S2, Property::S3];

    pub fn name(self) -> &'static str {
        match self {
            Property::L1 => "l1",
            Property::L2 => "l2",
            Property::L3 => "l3",
            Property::L4 => "l4",
            Property::L5 => "l5",
            Property::L6 => "l6",
            Property::R1 => "r1",
            Property::R2 => "r2",
            Property::R3 => "r3",
            Property::R4 => "r4",
            Property::R5 => "r5",
            Property::S1 => "s1",
            Property::S2 => "s2",
            Property::S3 => "s3",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Property::L1 => "loop at each nonzero vertex",
            Property::L2 => "edge λ->μ implies vertex μ-λ",
            Property::L3 => "no edge leaves 0",
            Property::L4 => "edge λ->0 implies edge -λ->0",
            Property::L5 => "no cycle",
            Property::L6 => "consecutive edges close to a triangle or parallelogram",
            Property::R1 => "0 is joined to every other vertex",
            Property::R2 => "edge λ->μ implies vertex μ-λ",
            Property::R3 => "no loops",
            Property::R4 => "edge λ->0 implies edge -λ->0",
            Property::R5 => "never exactly one path μ -> μ-2λ -> μ-λ -> μ",
            Property::S1 => "every λ has a parallel left edge and an outgoing right edge",
            Property::S2 => "0 reachable from every vertex in the union",
            Property::S3 => "a symmetric pair with edges to 0 in both graphs",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a property fails.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness<F> {
    Vertex(F),
    Edge(F, F),
    /// A cycle (first vertex repeated at the end) or a pair of consecutive edges.
    Path(Vec<F>),
    /// `μ` and `λ` of the unique path `μ -> μ-2λ -> μ-λ -> μ`.
    Pair { mu: F, lambda: F },
    /// The property fails as a whole.
    Global,
}

impl<F: Scalar> fmt::Display for Witness<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Edge(a, b) => write!(f, "edge {a} -> {b}"),
            Witness::Path(p) => {
                let s: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "path {}", s.join(" -> "))
            }
            Witness::Pair { mu, lambda } => write!(f, "mu = {mu}, lambda = {lambda}"),
            Witness::Global => write!(f, "no witness vertex"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PropertyCheck<F> {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness<F>>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct PropertyReport<F> {
    pub checks: Vec<PropertyCheck<F>>,
}

impl<F: Scalar> PropertyReport<F> {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, p: Property) -> Option<&PropertyCheck<F>> {
        self.checks.iter().find(|c| c.property == p)
    }

    pub fn failed(&self) -> Vec<Property> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.property).collect()
    }

    pub fn merge(mut self, other: PropertyReport<F>) -> Self {
        self.checks.extend(other.checks);
        self
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    let mut v = json!({ "property": c.property.name(), "holds": c.holds });
                    if let Some(w) = &c.witness {
                        v["witness"] = Value::String(w.to_string());
                    }
                    if !c.notes.is_empty() {
                        v["notes"] = json!(c.notes);
                    }
                    v
                })
                .collect(),
        )
    }
}

/// The graphs a property is evaluated on. For `s1`–`s3` both are needed.
pub struct Graphs<'a, F> {
    pub left: Option<&'a RootGraph<F>>,
    pub right: Option<&'a RootGraph<F>>,
}

impl<F> Clone for Graphs<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F> Copy for Graphs<'_, F> {}

impl<'a, F: Scalar> Graphs<'a, F> {
    pub fn single(g: &'a RootGraph<F>) -> Self {
        match g.kind {
            GraphKind::Left => Graphs { left: Some(g), right: None },
            GraphKind::Right => Graphs { left: None, right: Some(g) },
        }
    }

    pub fn pair(left: &'a RootGraph<F>, right: &'a RootGraph<F>) -> Self {
        Graphs { left: Some(left), right: Some(right) }
    }

    fn graph_for(&self, p: Property) -> &'a RootGraph<F> {
        let g = match p {
            Property::L1 | Property::L2 | Property::L3 | Property::L4 | Property::L5 | Property::L6 => self.left,
            Property::R1 | Property::R2 | Property::R3 | Property::R4 | Property::R5 => self.right,
            Property::S1 | Property::S2 | Property::S3 => self.left,
        };
        g.expect("graph of the property's kind")
    }
}

fn closes_l6<F: Scalar>(g: &RootGraph<F>, l: &F, m: &F, nu: &F) -> bool {
    let a = m.clone() - l.clone();
    let b = nu.clone() - m.clone();
    let corner = l.clone() + b.clone();
    if let (Some(c1), Some(c2)) = (g.constant(&b, l), g.constant(&a, &corner)) {
        let parallelogram = !c1.is_zero() && !c2.is_zero();
        let bracket = g.constant(&b, &a).unwrap_or_else(F::zero) - g.constant(&a, &b).unwrap_or_else(F::zero);
        let outer = g.constant(&(nu.clone() - l.clone()), l).unwrap_or_else(F::zero);
        let triangle = !(bracket * outer).is_zero();
        return parallelogram || triangle;
    }
    let parallelogram = g.has_edge(l, &corner) && g.has_edge(&corner, nu);
    let diff = nu.clone() - l.clone();
    let triangle = g.has_edge(l, nu) && (g.has_edge(&a, &diff) || g.has_edge(&b, &diff));
    parallelogram || triangle
}

fn r5_path<F: Scalar>(g: &RootGraph<F>, mu: &F, lambda: &F) -> bool {
    let two = lambda.clone() + lambda.clone();
    let p1 = mu.clone() - two;
    let p2 = mu.clone() - lambda.clone();
    g.has_edge(mu, &p1) && g.has_edge(&p1, &p2) && g.has_edge(&p2, mu)
}

fn r5_count<F: Scalar>(g: &RootGraph<F>, lambda: &F) -> usize {
    g.vertices.iter().filter(|mu| r5_path(g, mu, lambda)).count()
}

/// Vertices from which 0 is reachable along edges of the given graphs.
fn reaching_zero<F: Scalar>(graphs: &[&RootGraph<F>], vertices: &[F]) -> Vec<bool> {
    let mut seen = vec![false; vertices.len()];
    let Some(z) = position(vertices, &F::zero()) else {
        return seen;
    };
    seen[z] = true;
    let mut queue = VecDeque::from([z]);
    while let Some(t) = queue.pop_front() {
        for g in graphs {
            for e in g.edges.iter().filter(|e| e.to.approx_eq(&vertices[t])) {
                if let Some(s) = position(vertices, &e.from) {
                    if !seen[s] {
                        seen[s] = true;
                        queue.push_back(s);
                    }
                }
            }
        }
    }
    seen
}

fn is_cycle<F: Scalar>(g: &RootGraph<F>, path: &[F]) -> bool {
    path.len() >= 3
        && path[0].approx_eq(&path[path.len() - 1])
        && path.windows(2).all(|w| !w[0].approx_eq(&w[1]) && g.has_edge(&w[0], &w[1]))
}

fn find_cycle<F: Scalar>(g: &RootGraph<F>) -> Option<Vec<F>> {
    let n = g.vertices.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            g.non_loop_edges().filter(|e| e.from.approx_eq(&g.vertices[i])).filter_map(|e| g.index(&e.to)).collect()
        })
        .collect();
    // 0 = unvisited, 1 = on the stack, 2 = done
    let mut state = vec![0u8; n];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(v: usize, succ: &[Vec<usize>], state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for &w in &succ[v] {
            if state[w] == 1 {
                let start = stack.iter().position(|&x| x == w).expect("on stack");
                let mut cyc = stack[start..].to_vec();
                cyc.push(w);
                return Some(cyc);
            }
            if state[w] == 0 {
                if let Some(c) = dfs(w, succ, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    for v in 0..n {
        if state[v] == 0 {
            if let Some(c) = dfs(v, &succ, &mut state, &mut stack) {
                return Some(c.into_iter().map(|i| g.vertices[i].clone()).collect());
            }
        }
    }
    None
}

/// Whether `w` exhibits a failure of `p`. Re-evaluates the property locally.
pub fn violated_at<F: Scalar>(p: Property, graphs: Graphs<'_, F>, w: &Witness<F>) -> bool {
    let g = graphs.graph_for(p);
    let zero = F::zero();
    match (p, w) {
        (Property::L1, Witness::Vertex(v)) => g.has_vertex(v) && !v.is_zero() && !g.has_edge(v, v),
        (Property::L2 | Property::R2, Witness::Edge(a, b)) => {
            g.has_edge(a, b) && !g.has_vertex(&(b.clone() - a.clone()))
        }
        (Property::L3, Witness::Edge(a, b)) => a.is_zero() && g.has_edge(a, b),
        (Property::L4 | Property::R4, Witness::Vertex(v)) => g.has_edge(v, &zero) && !g.has_edge(&-v.clone(), &zero),
        (Property::L5, Witness::Path(path)) => is_cycle(g, path),
        (Property::L6, Witness::Path(path)) => {
            path.len() == 3
                && path.windows(2).all(|w| !w[0].approx_eq(&w[1]) && g.has_edge(&w[0], &w[1]))
                && !closes_l6(g, &path[0], &path[1], &path[2])
        }
        (Property::R1, Witness::Vertex(v)) => g.has_vertex(v) && !v.is_zero() && !g.has_edge(&zero, v),
        (Property::R3, Witness::Edge(a, b)) => a.approx_eq(b) && g.has_edge(a, b),
        (Property::R5, Witness::Pair { mu, lambda }) => r5_path(g, mu, lambda) && r5_count(g, lambda) == 1,
        (Property::S1, Witness::Vertex(v)) => {
            let (Some(l), Some(r)) = (graphs.left, graphs.right) else { return false };
            let parallel = l.edges.iter().any(|e| (e.to.clone() - e.from.clone()).approx_eq(v));
            let outgoing = r.edges.iter().any(|e| e.from.approx_eq(v));
            l.has_vertex(v) && !(parallel && outgoing)
        }
        (Property::S2, Witness::Vertex(v)) => {
            let (Some(l), Some(r)) = (graphs.left, graphs.right) else { return false };
            match l.index(v) {
                Some(i) => !reaching_zero(&[l, r], &l.vertices)[i],
                None => false,
            }
        }
        (Property::S3, Witness::Global) => {
            let (Some(l), Some(r)) = (graphs.left, graphs.right) else { return false };
            symmetric_pair(l, r).is_none()
        }
        _ => false,
    }
}

fn symmetric_pair<F: Scalar>(l: &RootGraph<F>, r: &RootGraph<F>) -> Option<F> {
    let zero = F::zero();
    l.vertices
        .iter()
        .rev()
        .filter(|v| !v.is_zero())
        .find(|v| {
            let m = -(*v).clone();
            l.has_edge(v, &zero) && l.has_edge(&m, &zero) && r.has_edge(v, &zero) && r.has_edge(&m, &zero)
        })
        .cloned()
}

/// Candidate witnesses for `p`; the property holds when none of them is violated.
fn candidates<F: Scalar>(p: Property, graphs: Graphs<'_, F>) -> Vec<Witness<F>> {
    let g = graphs.graph_for(p);
    let vertices = || g.vertices.iter().cloned().map(Witness::Vertex).collect::<Vec<_>>();
    let edges = || g.edges.iter().map(|e| Witness::Edge(e.from.clone(), e.to.clone())).collect::<Vec<_>>();
    match p {
        Property::L1 | Property::L4 | Property::R1 | Property::R4 | Property::S1 | Property::S2 => vertices(),
        Property::L2 | Property::L3 | Property::R2 | Property::R3 => edges(),
        Property::L5 => find_cycle(g).map(Witness::Path).into_iter().collect(),
        Property::L6 => {
            let mut out = Vec::new();
            for e in g.non_loop_edges() {
                for f in g.non_loop_edges().filter(|f| f.from.approx_eq(&e.to)) {
                    out.push(Witness::Path(vec![e.from.clone(), e.to.clone(), f.to.clone()]));
                }
            }
            out
        }
        Property::R5 => g
            .vertices
            .iter()
            .flat_map(|lambda| g.vertices.iter().map(move |mu| Witness::Pair { mu: mu.clone(), lambda: lambda.clone() }))
            .collect(),
        Property::S3 => vec![Witness::Global],
    }
}

fn evaluate<F: Scalar>(p: Property, graphs: Graphs<'_, F>) -> PropertyCheck<F> {
    let witness = candidates(p, graphs).into_iter().find(|w| violated_at(p, graphs, w));
    let mut notes = Vec::new();
    if p == Property::L6 {
        let g = graphs.graph_for(p);
        for w in candidates(p, graphs) {
            if let Witness::Path(path) = w {
                let first = path[1].clone() - path[0].clone();
                let second = path[2].clone() - path[1].clone();
                if first.approx_eq(&second) && closes_l6(g, &path[0], &path[1], &path[2]) {
                    notes.push(format!("degenerate parallelogram at {} -> {} -> {}", path[0], path[1], path[2]));
                }
            }
        }
        if !g.weighted() {
            notes.push("checked on edges only".into());
        }
    }
    if p == Property::S3 {
        let (l, r) = (graphs.left.expect("left graph"), graphs.right.expect("right graph"));
        if let Some(v) = symmetric_pair(l, r) {
            notes.push(format!("pair ±{v}"));
        }
    }
    PropertyCheck { property: p, holds: witness.is_none(), witness, notes }
}

/// `l1`–`l6` for a left graph, `r1`–`r5` for a right one.
pub fn check_properties<F: Scalar>(g: &RootGraph<F>) -> PropertyReport<F> {
    let props: &[Property] = match g.kind {
        GraphKind::Left => &Property::LEFT,
        GraphKind::Right => &Property::RIGHT,
    };
    let graphs = Graphs::single(g);
    PropertyReport { checks: props.iter().map(|&p| evaluate(p, graphs)).collect() }
}

/// `s1`–`s3`, which hold for simple algebras.
pub fn check_simple_properties<F: Scalar>(left: &RootGraph<F>, right: &RootGraph<F>) -> Result<PropertyReport<F>> {
    if left.kind != GraphKind::Left || right.kind != GraphKind::Right {
        return Err(Error::BadParameters("expected a left graph and a right graph".into()));
    }
    let graphs = Graphs::pair(left, right);
    Ok(PropertyReport { checks: Property::SIMPLE.iter().map(|&p| evaluate(p, graphs)).collect() })
}

/// Both graphs of an algebra with every property checked.
#[derive(Clone, Debug)]
pub struct GraphAnalysis<F: Scalar> {
    pub basis: RootBasis<F>,
    pub left: RootGraph<F>,
    pub right: RootGraph<F>,
    pub report: PropertyReport<F>,
}

pub fn analyze<F: Scalar>(a: &Algebra<F>, cd: &CanonicalDecomposition<F>) -> Result<GraphAnalysis<F>> {
    let basis = RootBasis::new(a, cd)?;
    let left = graph_from_basis(&basis, GraphKind::Left);
    let right = graph_from_basis(&basis, GraphKind::Right);
    let report = check_properties(&left).merge(check_properties(&right)).merge(check_simple_properties(&left, &right)?);
    Ok(GraphAnalysis { basis, left, right, report })
}
