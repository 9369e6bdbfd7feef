//! Terminating Gauss hypergeometric series with exact rational terms.

use num_traits::{One, Zero};

use crate::poly::RationalPoly;
use crate::rational::Q;

/// Series coefficients `(a)_k (b)_k / ((c)_k k!)` of `2F1(a, b; c; w)` for
/// `k = 0..=-a`, where `a` is a non-positive integer.
pub fn terminating_2f1_coeffs(a: i64, b: i64, c: i64) -> Vec<Q> {
    assert!(
        a <= 0,
        "series terminates only for a non-positive upper parameter"
    );
    let terms = (-a) as usize;
    let mut out = Vec::with_capacity(terms + 1);
    let mut t = Q::one();
    out.push(t.clone());
    for k in 0..terms as i64 {
        let den = (c + k) * (k + 1);
        assert!(den != 0, "lower parameter hits a non-positive integer");
        t *= Q::new(((a + k) * (b + k)).into(), den.into());
        out.push(t.clone());
    }
    out
}

/// `sum_k coeffs[k] * num^k * den^(K - k)` with `K = coeffs.len() - 1`:
/// the series evaluated at `w = num / den` and cleared of denominators.
/// Horner in `num`, so each step multiplies by `num` only.
pub fn eval_homogenized(coeffs: &[Q], num: &RationalPoly, den: &RationalPoly) -> RationalPoly {
    let k_max = coeffs.len() - 1;
    let mut den_pows = Vec::with_capacity(k_max + 1);
    den_pows.push(RationalPoly::one());
    for j in 1..=k_max {
        let next = &den_pows[j - 1] * den;
        den_pows.push(next);
    }
    let mut acc = RationalPoly::constant(coeffs[k_max].clone());
    for k in (0..k_max).rev() {
        acc = &(&acc * num) + &den_pows[k_max - k].scale(&coeffs[k]);
    }
    acc
}

/// Value of a terminating series at a rational point.
pub fn eval_series(coeffs: &[Q], w: &Q) -> Q {
    coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * w + c)
}
