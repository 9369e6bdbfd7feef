//! Exact `h_N(z)`, the generating function of the boundary correlations
//! `H_N^(r)`, at the three solvable points.

use super::hypergeometric::{eval_homogenized, terminating_2f1_coeffs};
use crate::error::{Error, Result};
use crate::params::Case;
use crate::poly::RationalPoly;
use crate::rational::{frac, q, Q};

/// Largest `n` for which [`h_poly`] is offered.
pub const MAX_POLY_N: usize = 400;

/// `h_N(z) = sum_r H_N^(r) z^(r-1)`.
pub fn h_poly(n: usize, case: Case) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > MAX_POLY_N {
        return Err(Error::BoundExceeded {
            n,
            max: MAX_POLY_N,
            what: "generating-function construction",
        });
    }
    Ok(match case {
        Case::Q1 => h_q1(n),
        Case::Q2 => RationalPoly::linear(frac(1, 2), frac(1, 2)).pow(n - 1),
        Case::Q3 => h_q3(n),
    })
}

/// `2F1(1 - N, N; 2N; 1 - z)`.
fn h_q1(n: usize) -> RationalPoly {
    let n = n as i64;
    let coeffs = terminating_2f1_coeffs(1 - n, n, 2 * n);
    eval_homogenized(
        &coeffs,
        &RationalPoly::from_ints(&[1, -1]),
        &RationalPoly::one(),
    )
}

/// `(1/2)(z+1) B_2m(z)` for `N = 2m + 2` and `(1/9)(2z+1)(z+2) B_2m(z)` for
/// `N = 2m + 3`; `N = 1` is the constant 1.
fn h_q3(n: usize) -> RationalPoly {
    if n == 1 {
        return RationalPoly::one();
    }
    let (m, prefactor) = if n.is_multiple_of(2) {
        ((n - 2) / 2, RationalPoly::linear(frac(1, 2), frac(1, 2)))
    } else {
        (
            (n - 3) / 2,
            &RationalPoly::from_ints(&[1, 2])
                * &RationalPoly::from_ints(&[2, 1]).scale(&frac(1, 9)),
        )
    };
    &prefactor * &b_poly(m)
}

/// `B_2m(z)`, with each `z^m (z+2)^j 2F1(...; (z²-1)/(z(z+2)))` cleared of
/// denominators.
pub(crate) fn b_poly(m: usize) -> RationalPoly {
    let mi = m as i64;
    let w_num = RationalPoly::from_ints(&[-1, 0, 1]);
    let w_den = RationalPoly::from_ints(&[0, 2, 1]);
    // 1 / (3^(m-1) (2m+3))
    let norm = crate::rational::pow_q(&q(3), 1 - mi) / q(2 * mi + 3);
    let first = eval_homogenized(
        &terminating_2f1_coeffs(-mi, mi + 2, 2 * mi + 4),
        &w_num,
        &w_den,
    );
    let mut out = first.scale(&(&norm * q(mi + 1)));
    if m > 0 {
        // z^m (z+2)^(m-1) w^k = z (z²-1)^k (z(z+2))^(m-1-k)
        let second = eval_homogenized(
            &terminating_2f1_coeffs(1 - mi, mi + 2, 2 * mi + 4),
            &w_num,
            &w_den,
        );
        let second = &RationalPoly::x() * &second;
        out = &out - &second.scale(&(&norm * q(mi)));
    }
    out
}

/// `H_N^(r)` read off the coefficients (index `r - 1`).
pub fn boundary_probabilities(n: usize, case: Case) -> Result<Vec<Q>> {
    let p = h_poly(n, case)?;
    Ok((0..n).map(|k| p.coeff(k)).collect())
}
