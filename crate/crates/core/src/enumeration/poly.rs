//! Integer polynomials, exact interpolation and quasipolynomial fitting.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients in ascending degree, without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntegerPolynomial {
    coeffs: Vec<i64>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: i64, n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// Formats the polynomial in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, &c) in self.coeffs.iter().enumerate().rev().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            match n {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&a.to_string());
                    }
                    out.push_str(var);
                    if n > 1 {
                        out.push_str(&format!("^{n}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("k"))
    }
}

fn rat(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficients (ascending) of the unique polynomial of degree below
/// `points.len()` through `points`.
pub fn interpolate_rational(points: &[(i64, i128)]) -> Vec<BigRational> {
    let n = points.len();
    let mut out = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j), then scaled
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * rat(xj as i128);
            }
            basis = next;
            denom *= rat((xi - xj) as i128);
        }
        let factor = rat(yi) / denom;
        for (d, c) in basis.into_iter().enumerate() {
            out[d] += c * &factor;
        }
    }
    out
}

pub fn eval_rational(coeffs: &[BigRational], x: i64) -> BigRational {
    let x = rat(x as i128);
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// The polynomial through `points`, required to have integer coefficients.
pub fn interpolate(points: &[(i64, i128)]) -> Result<IntegerPolynomial> {
    let coeffs = interpolate_rational(points);
    let mut out = Vec::with_capacity(coeffs.len());
    for (d, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficients(format!("coefficient of degree {d} is {c}")));
        }
        let v = c.to_integer().to_i64().ok_or_else(|| {
            Error::NonIntegerCoefficients(format!("coefficient of degree {d} overflows i64"))
        })?;
        out.push(v);
    }
    Ok(IntegerPolynomial::new(out))
}

/// A function of `n` that agrees with the polynomial `constituents[r]` on
/// every `n` congruent to `r` modulo `period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: usize,
    pub constituents: Vec<Vec<BigRational>>,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: i64) -> BigRational {
        let r = n.rem_euclid(self.period as i64) as usize;
        eval_rational(&self.constituents[r], n)
    }

    /// The value at `n`, which must be an integer.
    pub fn eval_integer(&self, n: i64) -> Option<i128> {
        let v = self.eval(n);
        v.is_integer().then(|| v.to_integer().to_i128()).flatten()
    }

    pub fn degree(&self) -> Option<usize> {
        self.constituents
            .iter()
            .filter_map(|c| c.iter().rposition(|x| !x.is_zero()))
            .max()
    }
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficients are written as `"p/q"` strings (`"p"` when integral).
impl Serialize for QuasiPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let constituents: Vec<Vec<String>> = self
            .constituents
            .iter()
            .map(|c| {
                let last = c.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
                c[..last].iter().map(rational_string).collect()
            })
            .collect();
        let mut st = s.serialize_struct("QuasiPolynomial", 2)?;
        st.serialize_field("period", &self.period)?;
        st.serialize_field("constituents", &constituents)?;
        st.end()
    }
}

/// A vector of exact rationals, serialized as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector(pub Vec<BigRational>);

impl Serialize for RationalVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(rational_string))
    }
}

impl RationalVector {
    pub fn signs(&self) -> Vec<i8> {
        self.0
            .iter()
            .map(|x| if x.is_positive() { 1 } else if x.is_negative() { -1 } else { 0 })
            .collect()
    }
}

/// Fits a quasipolynomial of degree at most `degree` to `sample(1), sample(2), ...`.
///
/// For each period `p = 1..=max_period`, every residue class gets `degree + 1`
/// interpolation points and one check point among `k = 1..=p * (degree + 2)`.
/// Samples are requested lazily and cached. The smallest passing period wins.
pub fn fit_quasipolynomial(
    degree: usize,
    max_period: usize,
    mut sample: impl FnMut(u64) -> Result<u64>,
) -> Result<QuasiPolynomial> {
    let mut values: Vec<i128> = Vec::new();
    for p in 1..=max_period {
        let needed = p * (degree + 2);
        while values.len() < needed {
            values.push(sample(values.len() as u64 + 1)? as i128);
        }
        let mut constituents = vec![Vec::new(); p];
        let mut fits = true;
        for k0 in 1..=p {
            let pts: Vec<(i64, i128)> = (0..degree + 2)
                .map(|i| {
                    let k = k0 + i * p;
                    (k as i64, values[k - 1])
                })
                .collect();
            let (fit, check) = pts.split_at(degree + 1);
            let coeffs = interpolate_rational(fit);
            if eval_rational(&coeffs, check[0].0) != rat(check[0].1) {
                fits = false;
                break;
            }
            constituents[k0 % p] = coeffs;
        }
        if fits {
            return Ok(QuasiPolynomial {
                period: p,
                constituents,
            });
        }
    }
    Err(Error::NoFit { max_period })
}
