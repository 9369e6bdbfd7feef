//! Goodness of fit of chain state frequencies against exact weights.

use std::collections::HashMap;

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::chain::{run_chains, ChainConfig};
use crate::error::{Error, Result};
use crate::rational::{pow_q, to_f64, Q};
use crate::sixvertex::enumerate_asms;

/// Visit counts keyed by the flattened matrix.
pub fn state_frequencies(cfg: &ChainConfig) -> Result<HashMap<Vec<i8>, u64>> {
    let per_chain: Vec<HashMap<Vec<i8>, u64>> =
        run_chains(cfg, |m: &mut HashMap<Vec<i8>, u64>, st, _| {
            *m.entry(st.to_asm().entries().to_vec()).or_insert(0) += 1;
        })?;
    let mut out = HashMap::new();
    for m in per_chain {
        for (k, v) in m {
            *out.entry(k).or_insert(0) += v;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChiSquareReport {
    pub n: usize,
    pub q: String,
    pub samples: u64,
    pub states: usize,
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Pearson test of `counts` against `q^k / Z` over every ASM of size `n`.
pub fn chi_square(n: usize, q: &Q, counts: &HashMap<Vec<i8>, u64>) -> Result<ChiSquareReport> {
    let asms: Vec<_> = enumerate_asms(n)?.collect();
    let weights: Vec<Q> = asms
        .iter()
        .map(|m| pow_q(q, m.minus_count() as i64))
        .collect();
    let z: Q = weights.iter().sum();
    let total: u64 = counts.values().sum();
    let known: u64 = asms.iter().filter_map(|m| counts.get(m.entries())).sum();
    if known != total {
        return Err(Error::Consistency(
            "chain visited a state outside the enumeration".into(),
        ));
    }
    let mut stat = 0.0;
    for (m, w) in asms.iter().zip(&weights) {
        let expected = to_f64(&(w / &z)) * total as f64;
        let seen = *counts.get(m.entries()).unwrap_or(&0) as f64;
        stat += (seen - expected).powi(2) / expected;
    }
    let dof = asms.len().saturating_sub(1).max(1);
    let dist = ChiSquared::new(dof as f64).map_err(|e| Error::Consistency(e.to_string()))?;
    Ok(ChiSquareReport {
        n,
        q: crate::rational::fmt_q(q),
        samples: total,
        states: asms.len(),
        statistic: stat,
        dof,
        p_value: 1.0 - dist.cdf(stat),
    })
}

/// Runs `cfg` and tests its snapshots.
pub fn chain_chi_square(cfg: &ChainConfig) -> Result<ChiSquareReport> {
    let counts = state_frequencies(cfg)?;
    chi_square(cfg.n, &cfg.q, &counts)
}
