//! Exact rational helpers shared by the table and kernel code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(value: i64) -> Q {
    Q::from_integer(BigInt::from(value))
}

/// Parses "p/q", "p" or "-p/q". Decimals are rejected; see [`parse_decimal`].
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(p, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Best rational approximation of `x` with denominator at most `max_denominator`,
/// via continued fractions and the final semiconvergent.
pub fn rationalize(x: f64, max_denominator: u64) -> Result<Q> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite value {x}")));
    }
    let exact = Q::from_float(x).expect("finite float");
    let max_d = BigInt::from(max_denominator.max(1));
    if exact.denom() <= &max_d {
        return Ok(exact);
    }
    // convergents h/k
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = exact.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > max_d {
            // largest semiconvergent that still fits
            let t = (&max_d - &k0) / &k1;
            let semi = Q::new(&t * &h1 + &h0, &t * &k1 + &k0);
            let conv = Q::new(h1.clone(), k1.clone());
            let semi_err = (&semi - &exact).abs();
            let conv_err = (&conv - &exact).abs();
            return Ok(if semi_err < conv_err { semi } else { conv });
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = &rest - Q::from_integer(a);
        if frac.is_zero() {
            return Ok(Q::new(h1, k1));
        }
        rest = frac.recip();
    }
}

/// Parses a decimal or fractional token, rationalizing floats with the given
/// denominator bound.
pub fn parse_decimal(s: &str, max_denominator: u64) -> Option<Q> {
    if let Some(v) = parse_rational(s) {
        return Some(v);
    }
    let x: f64 = s.trim().parse().ok()?;
    rationalize(x, max_denominator).ok()
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn to_f64(v: &Q) -> f64 {
    let n = v.numer().to_f64().unwrap_or(f64::NAN);
    let d = v.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Canonical "p/q" form (plain integer when q = 1).
pub fn format_rational(v: &Q) -> String {
    v.to_string()
}

pub fn format_decimal(v: &Q, digits: usize) -> String {
    format!("{:.*}", digits, to_f64(v))
}
