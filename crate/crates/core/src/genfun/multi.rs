//! The symmetric functions `h_{N,s}(z_1, ..., z_s)`: a determinant with
//! entries `z_j^(k-1) (z_j - 1)^(s-k) h_{N-k+1}(z_j)` divided by the
//! Vandermonde product `prod_{j<k} (z_j - z_k)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::hpoly::h_poly;
use crate::error::{Error, Result};
use crate::multipoly::{IntCube, MultiPoly};
use crate::params::Case;
use crate::poly::RationalPoly;
use crate::rational::Q;

/// Largest number of variables for which [`h_multi`] is offered.
pub const MAX_MULTI_S: usize = 5;

/// Determinant column `k` (1-based) as a polynomial in one variable.
fn column_entry(n: usize, s: usize, k: usize, case: Case) -> Result<RationalPoly> {
    let zk = RationalPoly::x().pow(k - 1);
    let zm1 = RationalPoly::from_ints(&[-1, 1]).pow(s - k);
    Ok(&(&zk * &zm1) * &h_poly(n - k + 1, case)?)
}

/// Integer coefficients and the common denominator they were scaled by.
fn clear_denominators(p: &RationalPoly) -> (Vec<BigInt>, BigInt) {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs()
        .iter()
        .map(|c| (c * Q::from_integer(den.clone())).to_integer())
        .collect();
    (ints, den)
}

pub fn h_multi(n: usize, s: usize, case: Case) -> Result<MultiPoly> {
    if s == 0 || s > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= n; got n = {n}, s = {s}"
        )));
    }
    if s > MAX_MULTI_S {
        return Err(Error::BoundExceeded {
            n: s,
            max: MAX_MULTI_S,
            what: "variables in h_multi",
        });
    }
    let mut columns = Vec::with_capacity(s);
    let mut scale = BigInt::one();
    for k in 1..=s {
        let (ints, den) = clear_denominators(&column_entry(n, s, k, case)?);
        scale *= den;
        columns.push(ints);
    }
    let side = columns.iter().map(Vec::len).max().unwrap_or(1);

    // Leibniz expansion by rows: partial[mask] is the signed sum over
    // assignments of the columns in `mask` to the first popcount(mask)
    // variables.
    let mut partial: Vec<Option<IntCube>> = vec![None; 1 << s];
    partial[0] = Some(IntCube::one(side));
    for mask in 1usize..1 << s {
        let mut acc = IntCube::zero(mask.count_ones() as usize, side);
        for k in 0..s {
            if mask & (1 << k) == 0 {
                continue;
            }
            let rest = mask & !(1 << k);
            let higher = (rest >> (k + 1)).count_ones();
            let sign = if higher % 2 == 0 { 1 } else { -1 };
            let prev = partial[rest].as_ref().expect("subsets filled in order");
            acc.add_scaled(&prev.extend(&columns[k]), sign);
        }
        partial[mask] = Some(acc);
    }
    let mut det = partial[(1 << s) - 1].take().expect("full determinant");
    for j in 0..s {
        for k in j + 1..s {
            det = det.div_binomial(j, k).ok_or_else(|| {
                Error::Consistency(format!(
                    "determinant not divisible by (z{j} - z{k}) for n = {n}, s = {s}"
                ))
            })?;
        }
    }
    let inv = Q::new(BigInt::one(), scale);
    Ok(det.to_multipoly(&inv))
}

/// Sets the last variable to `value`, as in the reduction identities.
pub fn reduce_last(p: &MultiPoly, value: &Q) -> MultiPoly {
    p.substitute(p.nvars() - 1, value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn single_variable_is_h_poly() {
        for case in Case::ALL {
            for n in 1..=6 {
                let m = h_multi(n, 1, case).unwrap();
                assert_eq!(m.to_univariate(), h_poly(n, case).unwrap());
            }
        }
    }

    #[test]
    fn at_one_and_at_zero() {
        let m = h_multi(4, 2, Case::Q2).unwrap();
        assert_eq!(
            reduce_last(&m, &q(1)).to_univariate(),
            h_poly(4, Case::Q2).unwrap()
        );

        let m = h_multi(4, 2, Case::Q1).unwrap();
        let h4 = h_poly(4, Case::Q1).unwrap();
        let h3 = h_poly(3, Case::Q1).unwrap();
        assert_eq!(
            reduce_last(&m, &q(0)).to_univariate(),
            h3.scale(&h4.coeff(0))
        );
    }

    #[test]
    fn symmetric_in_all_variables() {
        let perms3 = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for case in Case::ALL {
            let m = h_multi(5, 3, case).unwrap();
            for p in perms3 {
                assert_eq!(m.permute(&p), m, "{case} {p:?}");
            }
            let m2 = h_multi(4, 2, case).unwrap();
            assert_eq!(m2.permute(&[1, 0]), m2);
        }
    }

    #[test]
    fn arguments_checked() {
        assert!(h_multi(3, 4, Case::Q1).is_err());
        assert!(h_multi(3, 0, Case::Q1).is_err());
        assert!(matches!(
            h_multi(8, 6, Case::Q1),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
