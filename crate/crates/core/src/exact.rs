//! Exact rational scalars and coordinate vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field: arbitrary-precision rationals, always in lowest terms.
pub type Rational = BigRational;

/// Coordinates in a fixed basis.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::input(format!("not a rational number: {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::input(format!("not a rational number: {text:?}")))?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form, `"p/q"` or `"p"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn basis_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn add(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(a: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|xi| a * xi).collect()
}

pub fn neg(x: &[Rational]) -> Vector {
    x.iter().map(|xi| -xi).collect()
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .zip(y)
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Concatenates block coordinates `x ⊕ u`.
pub fn direct_sum(x: &[Rational], u: &[Rational]) -> Vector {
    x.iter().chain(u).cloned().collect()
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}
