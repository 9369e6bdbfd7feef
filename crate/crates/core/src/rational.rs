//! Helpers around arbitrary-precision rationals.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` or `"1.5"` (finite decimal) into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, dec)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), dec);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), dec.len());
        let v = Q::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// `"num/den"`, or just `"num"` for integers.
pub fn fmt_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Serde adapter writing a rational as its `"num/den"` string.
pub mod serde_q {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let text = String::deserialize(d)?;
        parse_q(&text).map_err(serde::de::Error::custom)
    }
}

/// Natural log of a positive big integer without overflowing `f64`.
pub fn ln_bigint(v: &BigInt) -> f64 {
    debug_assert!(v.sign() == Sign::Plus);
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap().ln();
    }
    let shift = bits - 900;
    let top: BigInt = v >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_q(v: &Q) -> f64 {
    debug_assert!(v.is_positive());
    ln_bigint(v.numer()) - ln_bigint(v.denom())
}

pub fn to_f64(v: &Q) -> f64 {
    if let Some(f) = v.to_f64() {
        if f.is_finite() {
            return f;
        }
    }
    let sign = if v.is_negative() { -1.0 } else { 1.0 };
    sign * ln_q(&v.abs()).exp()
}

/// Exact integer power with a signed exponent.
pub fn pow_q(base: &Q, exp: i64) -> Q {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
