//! Residues at the origin by truncated multivariate series.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use super::conventions::{total_sign, Orientation, ORIGIN_CONTOUR};
use super::EfpQuery;
use crate::error::{Error, Result};
use crate::genfun::h_multi;
use crate::multipoly::MultiPoly;
use crate::params::{Case, ModelParams};
use crate::poly::RationalPoly;
use crate::rational::{binomial, q, Q};
use crate::series::TruncatedSeries;

/// Knobs for auditing the evaluation; the defaults give `F_N^(r,s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueOptions {
    pub orientation: Orientation,
    /// Series slot assigned to each integration variable.
    pub slot_order: Option<Vec<usize>>,
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            orientation: ORIGIN_CONTOUR,
            slot_order: None,
        }
    }
}

/// Evaluates many queries, sharing the `h_{N,s}` constructions.
#[derive(Default)]
pub struct EfpEvaluator {
    cache: Mutex<HashMap<(usize, usize, Case), Arc<MultiPoly>>>,
}

/// Coefficients of `(γz + 1)^a (z - 1)^(-b)` up to `z^order`.
fn single_factor(gamma: &Q, a: usize, b: usize, order: usize) -> Vec<Q> {
    let num = RationalPoly::linear(Q::one(), gamma.clone()).pow(a);
    // (z - 1)^(-b) = (-1)^b sum_k C(b+k-1, k) z^k
    let sign = if b.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    };
    let inv: Vec<Q> = (0..=order)
        .map(|k| &sign * Q::from_integer(binomial((b + k - 1) as u64, k as u64)))
        .collect();
    (0..=order)
        .map(|k| (0..=k).map(|i| num.coeff(i) * &inv[k - i]).sum())
        .collect()
}

/// `(z_j - z_k) / (t² z_j z_k - 2tΔ z_j + 1)` as a series in `(z_j, z_k)`.
fn cross_factor(params: &ModelParams, order: usize, label: &str) -> Result<TruncatedSeries> {
    let orders = [order, order];
    let mut num = MultiPoly::zero(2);
    num.add_term(vec![1, 0], q(1));
    num.add_term(vec![0, 1], q(-1));
    let mut den = MultiPoly::constant(2, q(1));
    den.add_term(vec![1, 0], -q(2) * &params.t * &params.delta);
    den.add_term(vec![1, 1], &params.t * &params.t);
    let inv = TruncatedSeries::from_poly(&den, &orders).invert_unit(label)?;
    Ok(TruncatedSeries::from_poly(&num, &orders).mul(&inv))
}

fn check_slots(slots: &[usize], s: usize) -> Result<()> {
    let mut seen = vec![false; s];
    for &v in slots {
        if v >= s || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!(
                "{slots:?} is not a permutation of 0..{s}"
            )));
        }
    }
    if slots.len() != s {
        return Err(Error::InvalidArgument(format!(
            "{slots:?} is not a permutation of 0..{s}"
        )));
    }
    Ok(())
}

impl EfpEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    fn h(&self, n: usize, s: usize, case: Case) -> Result<Arc<MultiPoly>> {
        if let Some(h) = self.cache.lock().expect("cache lock").get(&(n, s, case)) {
            return Ok(h.clone());
        }
        let h = Arc::new(h_multi(n, s, case)?);
        self.cache
            .lock()
            .expect("cache lock")
            .insert((n, s, case), h.clone());
        Ok(h)
    }

    pub fn efp(&self, query: &EfpQuery) -> Result<Q> {
        self.efp_with(query, &ResidueOptions::default())
    }

    pub fn efp_with(&self, query: &EfpQuery, opts: &ResidueOptions) -> Result<Q> {
        let EfpQuery {
            n,
            r,
            s,
            ref params,
        } = *query;
        let case = params.require_case()?;
        let slots: Vec<usize> = opts.slot_order.clone().unwrap_or_else(|| (0..s).collect());
        check_slots(&slots, s)?;
        let h = self.h(n, s, case)?;

        let order = r - 1;
        let orders = vec![order; s];
        let gamma = params.gamma();
        let mut a = TruncatedSeries::one(&orders);
        for j in 1..=s {
            let f = single_factor(&gamma, s - j, s - j + 1, order);
            a = a.mul_embedded(&TruncatedSeries::univariate(&f, order), &[slots[j - 1]]);
        }
        for j in 0..s {
            for k in j + 1..s {
                let label = format!("t^2 z{} z{} - 2t delta z{} + 1", j + 1, k + 1, j + 1);
                let f = cross_factor(params, order, &label)?;
                a = a.mul_embedded(&f, &[slots[j], slots[k]]);
            }
        }

        let mut acc = Q::zero();
        let mut rest = vec![0u32; s];
        'terms: for (m, c) in h.terms() {
            for (v, &e) in m.iter().enumerate() {
                if e as usize > order {
                    continue 'terms;
                }
                rest[slots[v]] = order as u32 - e;
            }
            acc += c * a.coeff(&rest);
        }
        Ok(acc * q(total_sign(s, opts.orientation) as i64))
    }

    pub fn profile(&self, n: usize, s: usize, params: &ModelParams) -> Result<Vec<Q>> {
        (1..=n)
            .map(|r| self.efp(&EfpQuery::new(n, r, s, params.clone())?))
            .collect()
    }
}

pub fn efp_residue(query: &EfpQuery) -> Result<Q> {
    EfpEvaluator::new().efp(query)
}

/// `F_N^(r,s)` for `r = 1..=n` at fixed `s`.
pub fn efp_profile(n: usize, s: usize, params: &ModelParams) -> Result<Vec<Q>> {
    EfpEvaluator::new().profile(n, s, params)
}

/// Every `(r, s)`, indexed `[r - 1][s - 1]`.
pub fn efp_grid(n: usize, params: &ModelParams) -> Result<Vec<Vec<Q>>> {
    let ev = EfpEvaluator::new();
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|r| (1..=n).map(move |s| (r, s))).collect();
    let eval = |&(r, s): &(usize, usize)| ev.efp(&EfpQuery::new(n, r, s, params.clone())?);
    #[cfg(feature = "parallel")]
    let values: Result<Vec<Q>> = {
        use rayon::prelude::*;
        cells.par_iter().map(eval).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let values: Result<Vec<Q>> = cells.iter().map(eval).collect();
    let values = values?;
    Ok(values.chunks(n).map(<[Q]>::to_vec).collect())
}
