//! Sparse multivariate Laurent polynomials.
//!
//! Negative exponents are allowed so that monomials in nonzero unknowns can be
//! divided out; `normalize_monomial` shifts a polynomial back to nonnegative
//! exponents with no common monomial factor.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::scalar::Scalar;

pub type Exponents = Vec<i32>;

#[derive(Clone, PartialEq)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Exponents, F>,
}

impl<F: Scalar> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exps: Exponents, c: F) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, e: Exponents, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Multiplies by `x_var^k`.
    pub fn shift(&self, var: usize, k: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[var] += k;
                (e, c.clone())
            })
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    /// Evaluation; negative exponents divide, so nonzero values are required there.
    pub fn eval(&self, point: &[F]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, x)| {
                let base = if k < 0 { F::one() / x.clone() } else { x.clone() };
                (0..k.unsigned_abs()).fold(m, |m, _| m * base.clone())
            });
            acc + m
        })
    }

    pub fn max_degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|e| e.iter().enumerate().filter(|(_, &k)| k != 0).map(|(i, _)| i)).collect()
    }

    /// Groups terms by the exponent of `var`: `self = sum_k out[k] * x_var^k`.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest[var], 0);
            out.entry(k).or_insert_with(|| Self::zero(self.nvars)).add_term(rest, c.clone());
        }
        out
    }

    /// Divides by the largest monomial dividing every term (in the Laurent sense), so the
    /// result has nonnegative exponents and no monomial factor.
    pub fn normalize_monomial(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mins: Vec<i32> = (0..self.nvars).map(|v| self.min_degree(v).unwrap_or(0)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(&mins).map(|(a, m)| a - m).collect(), c.clone()))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    /// Scales so the leading (greatest exponent) coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.values().next_back() {
            Some(lc) => self.scale(&(F::one() / lc.clone())),
            None => self.clone(),
        }
    }

    /// Substitutes `x_var = num / den` and clears the denominator: returns
    /// `den^d * self(num/den)` where `self` is first shifted to nonnegative exponents in
    /// `var` and `d` is its degree there. Zero-ness is preserved whenever `den != 0`.
    pub fn substitute(&self, var: usize, num: &Self, den: &Self) -> Self {
        let coeffs = self.coefficients_in(var);
        let Some((&lo, _)) = coeffs.first_key_value() else { return self.clone() };
        let hi = *coeffs.keys().next_back().unwrap();
        let d = (hi - lo) as u32;
        let mut out = Self::zero(self.nvars);
        for (k, c) in coeffs {
            let k = (k - lo) as u32;
            out = out.add(&c.mul(&num.pow(k)).mul(&den.pow(d - k)));
        }
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                .collect();
            let mut coeff = c.to_string();
            // a compound coefficient such as 1+2i keeps its parentheses
            let negative = coeff.starts_with('-') && !coeff[1..].contains(['+', '-']);
            if negative {
                coeff.remove(0);
            }
            if coeff.contains(['+', '-']) {
                coeff = format!("({coeff})");
            }
            let term = match (mono.is_empty(), coeff == "1") {
                (true, _) => coeff,
                (false, true) => mono.join("*"),
                (false, false) => format!("{coeff}*{}", mono.join("*")),
            };
            match (out.is_empty(), negative) {
                (true, false) => out = term,
                (true, true) => out = format!("-{term}"),
                (false, false) => out = format!("{out} + {term}"),
                (false, true) => out = format!("{out} - {term}"),
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}

impl<F: Scalar> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along rows,
/// memoized over the set of columns still available.
pub fn determinant<F: Scalar>(nvars: usize, m: &[Vec<MPoly<F>>]) -> MPoly<F> {
    let n = m.len();
    assert!(n < usize::BITS as usize, "matrix too large for subset memoization");
    let mut memo: Vec<Option<MPoly<F>>> = vec![None; 1 << n];
    // minor(mask): determinant of rows (n - |mask|)..n restricted to columns in mask
    fn minor<F: Scalar>(m: &[Vec<MPoly<F>>], mask: usize, nvars: usize, memo: &mut [Option<MPoly<F>>]) -> MPoly<F> {
        if mask == 0 {
            return MPoly::one(nvars);
        }
        if let Some(p) = &memo[mask] {
            return p.clone();
        }
        let n = m.len();
        let row = n - mask.count_ones() as usize;
        let mut acc = MPoly::zero(nvars);
        let mut sign_positive = true;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let term = entry.mul(&minor(m, mask & !(1 << col), nvars, memo));
                acc = if sign_positive { acc.add(&term) } else { acc.sub(&term) };
            }
            sign_positive = !sign_positive;
        }
        memo[mask] = Some(acc.clone());
        acc
    }
    minor(m, (1usize << n) - 1, nvars, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::scalar::Qi;

    type P = MPoly<Qi>;

    fn x(i: usize) -> P {
        P::var(3, i)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1));
        let prod = a.mul(&b);
        assert_eq!(prod, x(0).pow(2).sub(&x(1).pow(2)));
        assert!(prod.sub(&prod).is_zero());
        assert_eq!(prod.eval(&[Qi::int(3), Qi::int(2), Qi::int(7)]), Qi::int(5));
    }

    #[test]
    fn monomial_factor_removal() {
        let p = x(0).pow(2).mul(&x(1)).add(&x(0).mul(&x(1)).mul(&x(2))).shift(1, -3);
        assert_eq!(p.normalize_monomial(), x(0).add(&x(2)));
    }

    #[test]
    fn substitution_clears_denominators() {
        // x0^2 - x1 with x0 = x1 / x2  ->  x1^2 - x1 x2^2
        let p = x(0).pow(2).sub(&x(1));
        let q = p.substitute(0, &x(1), &x(2));
        assert_eq!(q, x(1).pow(2).sub(&x(1).mul(&x(2).pow(2))));
    }

    #[test]
    fn determinant_matches_expansion() {
        // [[1+x0, x1], [x2, 1]] -> 1 + x0 - x1 x2
        let one = P::one(3);
        let m = vec![vec![one.add(&x(0)), x(1)], vec![x(2), one.clone()]];
        assert_eq!(determinant(3, &m), one.add(&x(0)).sub(&x(1).mul(&x(2))));
    }
}
