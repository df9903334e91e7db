//! Structure constants on the support of a candidate graph.
//!
//! The unknowns are `c_{a,b}` for the non-loop left edges `b -> a+b`; `c_{0,b} = b` and
//! `c_{a,0} = 0` are fixed. Left symmetry on basis triples gives a polynomial system in
//! nonzero unknowns, solved by elimination with case splits.

use std::fmt;

use crate::algebra::Algebra;
use crate::classification::enumerate::{form, GraphCandidate};
use crate::error::{Error, Result};
use crate::field::{eigen::gaussian_rational_roots, Matrix, MPoly, Qi, Scalar, UPoly};

type P = MPoly<Qi>;

/// A quotient of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn {
    pub num: P,
    pub den: P,
}

impl RatFn {
    fn poly(p: P) -> Self {
        let n = p.nvars();
        RatFn { num: p, den: P::one(n) }
    }

    fn mul(&self, o: &Self) -> Self {
        RatFn { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }.tidy()
    }

    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFn { num: self.num.add(&o.num), den: self.den.clone() }.tidy();
        }
        RatFn { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }.tidy()
    }

    fn inv(&self) -> Self {
        RatFn { num: self.den.clone(), den: self.num.clone() }.tidy()
    }

    /// Makes the denominator monic, and a polynomial when it is a monomial.
    fn tidy(self) -> Self {
        let RatFn { mut num, mut den } = self;
        if den.is_monomial() {
            let (e, c) = den.terms().next().map(|(e, c)| (e.clone(), c.clone())).expect("one term");
            let inv = Qi::one() / c;
            for (v, &k) in e.iter().enumerate() {
                num = num.shift(v, -k);
            }
            num = num.scale(&inv);
            den = P::one(num.nvars());
        } else {
            let lc = den.monic();
            let scale = num_div(&lc, &den);
            num = num.scale(&scale);
            den = lc;
        }
        RatFn { num, den }
    }

    pub fn eval(&self, point: &[Qi]) -> Option<Qi> {
        let d = self.den.eval(point);
        (!d.is_zero()).then(|| self.num.eval(point) / d)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let n = self.num.fmt_with(names);
        match self.den.as_constant() {
            Some(c) if c.is_one() => n,
            _ => format!("({n}) / ({})", self.den.fmt_with(names)),
        }
    }
}

/// `a / b` for proportional polynomials.
fn num_div(a: &P, b: &P) -> Qi {
    let (ea, ca) = a.terms().last().expect("nonzero");
    let cb = b.terms().find(|(e, _)| *e == ea).map(|(_, c)| c.clone()).expect("same support");
    ca.clone() / cb
}

fn eval_rat(p: &P, values: &[RatFn]) -> RatFn {
    let n = p.nvars();
    let mut acc = RatFn::poly(P::zero(n));
    for (e, c) in p.terms() {
        let mut t = RatFn::poly(P::constant(n, c.clone()));
        for (v, &k) in e.iter().enumerate() {
            let base = if k < 0 { values[v].inv() } else { values[v].clone() };
            for _ in 0..k.unsigned_abs() {
                t = t.mul(&base);
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// One solution family of a candidate.
#[derive(Clone, Debug)]
pub struct Family {
    /// `(a, b)` for each unknown `c_{a,b}`.
    pub unknowns: Vec<(Qi, Qi)>,
    /// Variable names: the unknowns, then `λ` when the candidate is symbolic.
    pub names: Vec<String>,
    /// Each unknown in terms of the free ones (and `λ`).
    pub values: Vec<RatFn>,
    /// Unknowns left free.
    pub free: Vec<usize>,
    /// Unknowns set to one by rescaling basis vectors.
    pub normalized: Vec<usize>,
    /// Polynomials that must not vanish.
    pub nonzero: Vec<P>,
    /// Polynomials in `λ` alone that must not vanish.
    pub lambda_nonzero: Vec<P>,
    /// Free unknowns that a further rescaling could set to one: the family modulo
    /// isomorphism has this many fewer parameters.
    pub residual_scaling: usize,
}

impl Family {
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn symbolic(&self) -> bool {
        self.names.len() > self.unknowns.len()
    }

    /// Parameters of the family modulo rescaling.
    pub fn moduli(&self) -> usize {
        self.free.len() - self.residual_scaling
    }

    pub fn describe(&self) -> Vec<String> {
        self.unknowns
            .iter()
            .enumerate()
            .map(|(i, _)| {
                let v = self.values[i].fmt_with(&self.names);
                if v == self.names[i] {
                    format!("{} free", self.names[i])
                } else {
                    format!("{} = {v}", self.names[i])
                }
            })
            .collect()
    }

    pub fn conditions(&self) -> Vec<String> {
        self.nonzero
            .iter()
            .chain(&self.lambda_nonzero)
            .filter(|p| !p.is_monomial())
            .map(|p| format!("{} != 0", p.fmt_with(&self.names)))
            .collect()
    }

    /// The values of the unknowns at a point of the free variables and `λ`, or `None`
    /// when the point violates a condition.
    pub fn instantiate(&self, point: &[Qi]) -> Option<Vec<Qi>> {
        if self.nonzero.iter().chain(&self.lambda_nonzero).any(|p| p.eval(point).is_zero()) {
            return None;
        }
        let vals: Option<Vec<Qi>> = self.values.iter().map(|v| v.eval(point)).collect();
        vals.filter(|v| v.iter().all(|x| !x.is_zero()))
    }

    /// The algebra at a point, on roots `vertex_value`.
    pub fn algebra(&self, name: &str, roots: &[Qi], point: &[Qi], vertex_value: impl Fn(&Qi) -> Qi) -> Option<Algebra<Qi>> {
        let vals = self.instantiate(point)?;
        let roots_v: Vec<Qi> = roots.iter().map(&vertex_value).collect();
        let mut products: Vec<(Qi, Qi, Qi, Qi)> = Vec::new();
        for ((a, b), c) in self.unknowns.iter().zip(vals) {
            let (a, b) = (vertex_value(a), vertex_value(b));
            products.push((a.clone(), b.clone(), c, a + b));
        }
        super::catalog::graded(name, &roots_v, &products).ok()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe().join(", "))?;
        let c = self.conditions();
        if !c.is_empty() {
            write!(f, " where {}", c.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOutcome {
    pub families: Vec<Family>,
    /// Branches the elimination could not finish.
    pub incomplete: Vec<String>,
    /// Branches that only have solutions for special values of `λ`.
    pub lambda_special: Vec<String>,
}

struct Problem {
    unknowns: Vec<(Qi, Qi)>,
    names: Vec<String>,
    nvars: usize,
    lambda: Option<usize>,
}

#[derive(Clone)]
struct Branch {
    eqs: Vec<P>,
    /// `(var, num, den)`: `var = num / den`, in the variables not yet eliminated.
    steps: Vec<(usize, P, P)>,
    nonzero: Vec<P>,
    lambda_nonzero: Vec<P>,
}

enum Pick {
    Linear { eq: usize, var: usize, a: P, b: P },
    Univariate { eq: usize, var: usize },
}

impl Problem {
    fn is_unknown(&self, v: usize) -> bool {
        Some(v) != self.lambda
    }

    fn lambda_only(&self, p: &P) -> bool {
        p.variables().iter().all(|&v| !self.is_unknown(v))
    }

    /// Whether `p` cannot vanish on the branch: a nonzero constant times a monomial in
    /// nonzero variables.
    fn unit(&self, p: &P) -> bool {
        p.is_monomial()
    }

    fn pick(&self, eqs: &[P]) -> Option<Pick> {
        let mut order: Vec<usize> = (0..eqs.len()).collect();
        order.sort_by_key(|&i| (eqs[i].term_count(), eqs[i].total_degree().unwrap_or(0)));
        let mut fallback = None;
        for &i in &order {
            for v in eqs[i].variables() {
                if !self.is_unknown(v) || eqs[i].max_degree(v) != Some(1) {
                    continue;
                }
                let co = eqs[i].coefficients_in(v);
                let a = co.get(&1).cloned().expect("degree one");
                let b = co.get(&0).cloned().unwrap_or_else(|| P::zero(self.nvars));
                if self.unit(&a) || self.lambda_only(&a) {
                    return Some(Pick::Linear { eq: i, var: v, a, b });
                }
                if fallback.is_none() {
                    fallback = Some(Pick::Linear { eq: i, var: v, a, b });
                }
            }
        }
        if fallback.is_some() {
            return fallback;
        }
        order.into_iter().find_map(|i| {
            let vars = eqs[i].variables();
            (vars.len() == 1).then(|| *vars.iter().next().expect("one")).filter(|&v| self.is_unknown(v)).map(|v| Pick::Univariate { eq: i, var: v })
        })
    }

    fn substitute(&self, b: &mut Branch, var: usize, num: &P, den: &P) {
        for e in b.eqs.iter_mut() {
            *e = e.substitute(var, num, den);
        }
        for e in b.nonzero.iter_mut() {
            *e = e.substitute(var, num, den);
        }
        b.steps.push((var, num.clone(), den.clone()));
    }

    /// Normalizes the equations; `Err(reason)` when the branch has no solutions.
    fn clean(&self, b: &mut Branch, out: &mut SolveOutcome) -> std::result::Result<(), ()> {
        let mut eqs: Vec<P> = Vec::new();
        for e in &b.eqs {
            let e = e.normalize_monomial();
            if e.is_zero() {
                continue;
            }
            if e.as_constant().is_some() {
                return Err(());
            }
            if self.lambda_only(&e) {
                out.lambda_special.push(format!("{} = 0", e.fmt_with(&self.names)));
                return Err(());
            }
            let e = e.monic();
            if !eqs.contains(&e) {
                eqs.push(e);
            }
        }
        b.eqs = eqs;
        let mut nz: Vec<P> = Vec::new();
        for p in &b.nonzero {
            let p = p.normalize_monomial();
            if p.is_zero() {
                return Err(());
            }
            if p.as_constant().is_some() {
                continue;
            }
            let p = p.monic();
            if self.lambda_only(&p) {
                if !b.lambda_nonzero.contains(&p) {
                    b.lambda_nonzero.push(p);
                }
            } else if !nz.contains(&p) {
                nz.push(p);
            }
        }
        b.nonzero = nz;
        Ok(())
    }

    fn run(&self, mut b: Branch, out: &mut SolveOutcome, depth: usize) {
        loop {
            if self.clean(&mut b, out).is_err() {
                return;
            }
            if b.eqs.is_empty() {
                out.families.push(self.family(&b));
                return;
            }
            if depth > 4 * self.nvars + 8 {
                out.incomplete.push(self.describe_branch(&b));
                return;
            }
            match self.pick(&b.eqs) {
                Some(Pick::Linear { eq, var, a, b: rest }) => {
                    b.eqs.remove(eq);
                    let num = rest.neg();
                    if !(self.unit(&a) || self.lambda_only(&a)) {
                        // either the coefficient vanishes, or it does not and `var` is determined
                        let mut zero = b.clone();
                        zero.eqs.push(a.clone());
                        zero.eqs.push(rest.clone());
                        self.run(zero, out, depth + 1);
                        b.nonzero.push(a.clone());
                    } else if self.lambda_only(&a) && !a.is_monomial() {
                        b.lambda_nonzero.push(a.monic());
                    }
                    b.nonzero.push(num.clone());
                    self.substitute(&mut b, var, &num, &a);
                }
                Some(Pick::Univariate { eq, var }) => {
                    let e = b.eqs.remove(eq);
                    let co = e.coefficients_in(var);
                    let lo = *co.keys().next().expect("nonzero");
                    let hi = *co.keys().next_back().expect("nonzero");
                    let coeffs: Vec<Qi> = (lo..=hi)
                        .map(|k| co.get(&k).and_then(P::as_constant).unwrap_or_else(Qi::zero))
                        .collect();
                    let (roots, rest) = gaussian_rational_roots(&UPoly::new(coeffs));
                    if rest.degree().unwrap_or(0) > 0 {
                        let mut left = b.clone();
                        left.eqs.push(e.clone());
                        out.incomplete.push(format!(
                            "{} has roots outside Q(i); {}",
                            e.fmt_with(&self.names),
                            self.describe_branch(&left)
                        ));
                    }
                    for r in roots.into_iter().filter(|r| !r.is_zero()) {
                        let mut next = b.clone();
                        let num = P::constant(self.nvars, r);
                        let den = P::one(self.nvars);
                        self.substitute(&mut next, var, &num, &den);
                        self.run(next, out, depth + 1);
                    }
                    return;
                }
                None => {
                    out.incomplete.push(self.describe_branch(&b));
                    return;
                }
            }
        }
    }

    fn describe_branch(&self, b: &Branch) -> String {
        let eqs: Vec<String> = b.eqs.iter().map(|e| format!("{} = 0", e.fmt_with(&self.names))).collect();
        format!("unsolved: {}", eqs.join(", "))
    }

    fn family(&self, b: &Branch) -> Family {
        let n = self.nvars;
        let mut values: Vec<RatFn> = (0..n).map(|v| RatFn::poly(P::var(n, v))).collect();
        for (var, num, den) in b.steps.iter().rev() {
            let v = eval_rat(num, &values).mul(&eval_rat(den, &values).inv());
            values[*var] = v;
        }
        let eliminated: Vec<usize> = b.steps.iter().map(|s| s.0).collect();
        let free: Vec<usize> = (0..self.unknowns.len()).filter(|v| !eliminated.contains(v)).collect();
        values.truncate(self.unknowns.len());
        Family {
            unknowns: self.unknowns.clone(),
            names: self.names.clone(),
            values,
            free,
            normalized: Vec::new(),
            nonzero: b.nonzero.clone(),
            lambda_nonzero: b.lambda_nonzero.clone(),
            residual_scaling: 0,
        }
    }
}

/// Weight of `c_{a,b}` under rescaling `e_v -> t_v e_v`: `t_a t_b / t_{a+b}`, with `t_0 = 1`.
fn weight(vertices: &[Qi], a: &Qi, b: &Qi) -> Vec<Qi> {
    let nz: Vec<&Qi> = vertices.iter().filter(|v| !v.is_zero()).collect();
    let mut w = vec![Qi::zero(); nz.len()];
    let s = a.clone() + b.clone();
    for (i, v) in nz.iter().enumerate() {
        if *v == a {
            w[i] = w[i].clone() + Qi::one();
        }
        if *v == b {
            w[i] = w[i].clone() + Qi::one();
        }
        if **v == s {
            w[i] = w[i].clone() - Qi::one();
        }
    }
    w
}

fn rank(rows: &[Vec<Qi>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
}

/// Greedily picks indices whose weights are independent of `taken`.
fn independent(weights: &[Vec<Qi>], order: &[usize], taken: &mut Vec<Vec<Qi>>) -> Vec<usize> {
    let mut out = Vec::new();
    for &i in order {
        let mut trial = taken.clone();
        trial.push(weights[i].clone());
        if rank(&trial) > rank(taken) {
            *taken = trial;
            out.push(i);
        }
    }
    out
}

fn vertex_poly(candidate: &GraphCandidate, nvars: usize, lambda: Option<usize>, v: &Qi) -> P {
    match (&candidate.template.symbolic, lambda) {
        (Some(proxy), Some(l)) => {
            let (p, q) = form(proxy, v);
            P::constant(nvars, p).add(&P::var(nvars, l).scale(&q))
        }
        _ => P::constant(nvars, v.clone()),
    }
}

/// All solution families on the candidate's support. Unknowns on edges into 0 are set to
/// one where rescaling allows; remaining rescaling freedom is reported per family.
pub fn solve_outcome(candidate: &GraphCandidate) -> SolveOutcome {
    let vertices = &candidate.left.vertices;
    let label = |v: &Qi| candidate.template.label(v);
    let unknowns: Vec<(Qi, Qi)> =
        candidate.left.non_loop_edges().map(|e| (e.to.clone() - e.from.clone(), e.from.clone())).collect();
    let mut names: Vec<String> = unknowns.iter().map(|(a, b)| format!("c({},{})", label(a), label(b))).collect();
    let lambda = candidate.template.symbolic.as_ref().map(|_| {
        names.push("λ".into());
        names.len() - 1
    });
    let nvars = names.len();
    let problem = Problem { unknowns: unknowns.clone(), names, nvars, lambda };

    let weights: Vec<Vec<Qi>> = unknowns.iter().map(|(a, b)| weight(vertices, a, b)).collect();
    let into_zero: Vec<usize> = (0..unknowns.len())
        .filter(|&i| (unknowns[i].0.clone() + unknowns[i].1.clone()).is_zero())
        .collect();
    let mut taken = Vec::new();
    let normalized = independent(&weights, &into_zero, &mut taken);

    let coef = |a: &Qi, b: &Qi| -> P {
        if a.is_zero() {
            return vertex_poly(candidate, nvars, lambda, b);
        }
        if b.is_zero() {
            return P::zero(nvars);
        }
        match unknowns.iter().position(|(x, y)| x == a && y == b) {
            Some(i) if normalized.contains(&i) => P::one(nvars),
            Some(i) => P::var(nvars, i),
            None => P::zero(nvars),
        }
    };
    let has = |v: &Qi| vertices.contains(v);
    let mut eqs = Vec::new();
    for x in vertices {
        for y in vertices {
            for z in vertices {
                let target = x.clone() + y.clone() + z.clone();
                if !has(&target) {
                    continue;
                }
                // (xy)z - x(yz) - (yx)z + y(xz)
                let term = |p: &Qi, q: &Qi, r: &Qi, outer_left: bool| -> P {
                    if outer_left {
                        let s = p.clone() + q.clone();
                        if !has(&s) {
                            return P::zero(nvars);
                        }
                        coef(p, q).mul(&coef(&s, r))
                    } else {
                        let s = q.clone() + r.clone();
                        if !has(&s) {
                            return P::zero(nvars);
                        }
                        coef(q, r).mul(&coef(p, &s))
                    }
                };
                let e = term(x, y, z, true).sub(&term(x, y, z, false)).sub(&term(y, x, z, true)).add(&term(y, x, z, false));
                if !e.is_zero() {
                    eqs.push(e);
                }
            }
        }
    }
    let mut branch = Branch { eqs, steps: Vec::new(), nonzero: Vec::new(), lambda_nonzero: Vec::new() };
    for &i in &normalized {
        let one = P::one(nvars);
        problem.substitute(&mut branch, i, &one, &one);
    }
    let mut out = SolveOutcome::default();
    problem.run(branch, &mut out, 0);
    for f in out.families.iter_mut() {
        f.normalized = normalized.clone();
        let mut taken = taken.clone();
        f.residual_scaling = independent(&weights, &f.free, &mut taken).len();
    }
    out
}

/// Families of algebras on the candidate's support, or `SolverIncomplete` when some
/// branch could not be finished.
pub fn solve_structure_constants(candidate: &GraphCandidate) -> Result<Vec<Family>> {
    let out = solve_outcome(candidate);
    if !out.incomplete.is_empty() {
        return Err(Error::SolverIncomplete(out.incomplete.join("; ")));
    }
    Ok(out.families)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::enumerate::{default_templates, enumerate_graphs};

    fn candidates(dim: usize) -> Vec<GraphCandidate> {
        enumerate_graphs(dim, &default_templates(dim).unwrap()).unwrap()
    }

    #[test]
    fn dimension_three_is_auslander() {
        let c = &candidates(3)[0];
        let f = solve_structure_constants(c).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].moduli(), 0);
        let a = f[0].algebra("x", &c.left.vertices, &[], Qi::clone).unwrap();
        assert_eq!(a, super::super::catalog::auslander3().with_name("x"));
    }

    #[test]
    fn dimension_four_constants_proportional_to_one_two() {
        let c = &candidates(4)[0];
        let f = solve_structure_constants(c).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].moduli(), 0);
        let point: Vec<Qi> = (0..f[0].nvars()).map(|_| Qi::one()).collect();
        let vals = f[0].instantiate(&point).unwrap();
        let at = |a: i64, b: i64| {
            let i = f[0].unknowns.iter().position(|u| *u == (Qi::int(a), Qi::int(b))).unwrap();
            vals[i].clone()
        };
        // e2 e-1 = alpha e1, e-1 e2 = beta e1
        assert_eq!(at(-1, 2), Qi::int(2) * at(2, -1));
    }
}
