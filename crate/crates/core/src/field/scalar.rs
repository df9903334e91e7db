//! Scalar fields: exact Gaussian rationals and tolerance-aware complex doubles.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Default tolerance for numeric mode.
pub const DEFAULT_EPS: f64 = 1e-10;

static NUMERIC_EPS: AtomicU64 = AtomicU64::new(0x3DDB_7CDF_D9D7_BDBB); // 1e-10

/// Tolerance used by numeric-mode comparisons and rank decisions.
pub fn numeric_eps() -> f64 {
    f64::from_bits(NUMERIC_EPS.load(AtomicOrdering::Relaxed))
}

/// Sets the numeric-mode tolerance for the whole process.
pub fn set_numeric_eps(eps: f64) {
    NUMERIC_EPS.store(eps.to_bits(), AtomicOrdering::Relaxed);
}

/// A field element. Both implementations model subfields of the complex numbers.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic introduces no rounding.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// The imaginary unit.
    fn imag_unit() -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude(&self) -> f64;
    fn to_complex(&self) -> Complex64;
    /// Lifts a complex double; only numeric fields accept it.
    fn from_complex(z: Complex64) -> Option<Self>;
    fn conj(&self) -> Self;
    /// Zero test used for pivoting, relative to the magnitude of the surrounding data.
    fn negligible(&self, scale: f64) -> bool;
    /// Eigenvalues of a square matrix that lie in this field.
    fn eigenvalues(m: &Matrix<Self>) -> Result<Vec<Self>>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    /// `exp(self)`, when representable.
    fn exp(&self) -> Option<Self>;
    /// Total order used for sorting roots and vertices: by real part, then imaginary part.
    fn sort_cmp(&self, other: &Self) -> Ordering;

    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }
}

/// An exact element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Qi {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Qi { re, im: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Qi::real(rat(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Qi::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Qi { re: rat(re), im: rat(im) }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Squared modulus, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Qi> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Qi { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// Builds a Gaussian rational from a Gaussian integer over a Gaussian integer.
    pub fn from_gaussian_integers(num: (BigInt, BigInt), den: (BigInt, BigInt)) -> Option<Qi> {
        let n = Qi::new(BigRational::from_integer(num.0), BigRational::from_integer(num.1));
        let d = Qi::new(BigRational::from_integer(den.0), BigRational::from_integer(den.1));
        d.inv().map(|di| n * di)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rational(&self.re))
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
        }
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_part = if int == "-" || int == "+" || int.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int).ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part = BigRational::new(BigInt::from_str(frac).ok()?, scale);
        let int_part = BigRational::from_integer(int_part);
        return Some(if negative { int_part - frac_part } else { int_part + frac_part });
    }
    BigInt::from_str(s).ok().map(BigRational::from_integer)
}

fn parse_signed_coefficient(s: &str) -> Option<BigRational> {
    match s.trim() {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        t => parse_rational(t),
    }
}

impl FromStr for Qi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid exact scalar {s:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(&t).map(Qi::real).ok_or_else(bad);
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k]).ok_or_else(bad)?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = parse_signed_coefficient(im).ok_or_else(bad)?;
        Ok(Qi::new(re, im))
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                self.clone().$method(rhs.clone())
            }
        }
    };
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, rhs: Qi) -> Qi {
        Qi { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, rhs: Qi) -> Qi {
        Qi { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, rhs: Qi) -> Qi {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Qi::real(self.re * rhs.re);
        }
        Qi {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for Qi {
    type Output = Qi;
    fn div(self, rhs: Qi) -> Qi {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Qi::real(self.re / rhs.re);
        }
        self * rhs.inv().expect("division by zero in Q(i)")
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

forward_binop!(Qi, Add, add);
forward_binop!(Qi, Sub, sub);
forward_binop!(Qi, Mul, mul);
forward_binop!(Qi, Div, div);

impl Scalar for Qi {
    const EXACT: bool = true;

    fn zero() -> Self {
        Qi::default()
    }
    fn one() -> Self {
        Qi::int(1)
    }
    fn from_int(n: i64) -> Self {
        Qi::int(n)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Qi::ratio(num, den)
    }
    fn imag_unit() -> Self {
        Qi::gaussian(0, 1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
    fn from_complex(_: Complex64) -> Option<Self> {
        None
    }
    fn conj(&self) -> Self {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }
    fn negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn eigenvalues(m: &Matrix<Self>) -> Result<Vec<Self>> {
        super::eigen::exact_eigenvalues(m)
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) if n.is_i64() => Ok(Qi::int(n.as_i64().unwrap_or_default())),
            other => Err(Error::Parse(format!("exact scalars are strings, got {other}"))),
        }
    }
    fn exp(&self) -> Option<Self> {
        self.is_zero().then(Qi::one)
    }
    fn sort_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

/// A complex double compared up to the process-wide numeric tolerance.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Cf(pub Complex64);

impl Cf {
    pub fn new(re: f64, im: f64) -> Self {
        Cf(Complex64::new(re, im))
    }
}

impl fmt::Display for Cf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.0;
        if im == 0.0 {
            write!(f, "{re}")
        } else if im < 0.0 {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl fmt::Debug for Cf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for Cf {
    type Output = Cf;
    fn add(self, rhs: Cf) -> Cf {
        Cf(self.0 + rhs.0)
    }
}
impl Sub for Cf {
    type Output = Cf;
    fn sub(self, rhs: Cf) -> Cf {
        Cf(self.0 - rhs.0)
    }
}
impl Mul for Cf {
    type Output = Cf;
    fn mul(self, rhs: Cf) -> Cf {
        Cf(self.0 * rhs.0)
    }
}
impl Div for Cf {
    type Output = Cf;
    fn div(self, rhs: Cf) -> Cf {
        Cf(self.0 / rhs.0)
    }
}
impl Neg for Cf {
    type Output = Cf;
    fn neg(self) -> Cf {
        Cf(-self.0)
    }
}

impl Eq for Cf {}

impl PartialOrd for Cf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cf {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.re.total_cmp(&other.0.re).then(self.0.im.total_cmp(&other.0.im))
    }
}

impl Scalar for Cf {
    const EXACT: bool = false;

    fn zero() -> Self {
        Cf::new(0.0, 0.0)
    }
    fn one() -> Self {
        Cf::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Cf::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Cf::new(num as f64 / den as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Cf::new(0.0, 1.0)
    }
    fn is_zero(&self) -> bool {
        self.0.norm() <= numeric_eps()
    }
    fn magnitude(&self) -> f64 {
        self.0.norm()
    }
    fn to_complex(&self) -> Complex64 {
        self.0
    }
    fn from_complex(z: Complex64) -> Option<Self> {
        Some(Cf(z))
    }
    fn conj(&self) -> Self {
        Cf(self.0.conj())
    }
    fn negligible(&self, scale: f64) -> bool {
        self.0.norm() <= numeric_eps() * scale.max(f64::MIN_POSITIVE)
    }
    fn eigenvalues(m: &Matrix<Self>) -> Result<Vec<Self>> {
        super::eigen::numeric_eigenvalues(m)
    }
    fn to_json(&self) -> Value {
        serde_json::json!([self.0.re, self.0.im])
    }
    fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid numeric scalar {v}"));
        match v {
            Value::Number(n) => n.as_f64().map(|x| Cf::new(x, 0.0)).ok_or_else(bad),
            Value::Array(parts) if parts.len() == 2 => {
                let re = parts[0].as_f64().ok_or_else(bad)?;
                let im = parts[1].as_f64().ok_or_else(bad)?;
                Ok(Cf::new(re, im))
            }
            Value::String(s) => {
                // Exact-style strings are accepted and converted.
                let q: Qi = s.parse()?;
                Ok(Cf(q.to_complex()))
            }
            _ => Err(bad()),
        }
    }
    fn exp(&self) -> Option<Self> {
        Some(Cf(self.0.exp()))
    }
    fn sort_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}
