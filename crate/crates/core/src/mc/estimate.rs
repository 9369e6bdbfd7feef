//! Monte Carlo estimates of the emptiness formation probability.

use serde::Serialize;

use super::chain::{run_chains, ChainConfig};
use super::height::HeightState;
use crate::error::{Error, Result};

const BATCHES: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EfpEstimate {
    pub r: usize,
    pub s: usize,
    pub mean: f64,
    /// Batch-means standard error.
    pub stderr: f64,
    pub samples: usize,
}

/// The `s` top edges at gap `n - r` (counted from the left) all point left
/// exactly when the height rises by one at every step down that column.
pub fn efp_event(state: &HeightState, r: usize, s: usize) -> bool {
    let k = state.n() - r;
    state.get(s, k) == (k + s) as i32
}

fn summarise(r: usize, s: usize, series: &[Vec<bool>]) -> EfpEstimate {
    let mut batch_means = Vec::new();
    let mut hits = 0usize;
    let mut total = 0usize;
    for chain in series {
        hits += chain.iter().filter(|&&b| b).count();
        total += chain.len();
        let size = (chain.len() / BATCHES).max(1);
        for b in chain.chunks(size) {
            batch_means.push(b.iter().filter(|&&v| v).count() as f64 / b.len() as f64);
        }
    }
    let mean = hits as f64 / total as f64;
    let m = batch_means.len() as f64;
    let bm = batch_means.iter().sum::<f64>() / m;
    let var = if m > 1.0 {
        batch_means.iter().map(|v| (v - bm).powi(2)).sum::<f64>() / (m - 1.0)
    } else {
        0.0
    };
    EfpEstimate {
        r,
        s,
        mean,
        stderr: (var / m).sqrt(),
        samples: total,
    }
}

fn check(n: usize, r: usize, s: usize) -> Result<()> {
    if r == 0 || s == 0 || r > n || s > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r, s <= n; got n = {n}, r = {r}, s = {s}"
        )));
    }
    Ok(())
}

pub fn efp_estimate(cfg: &ChainConfig, r: usize, s: usize) -> Result<EfpEstimate> {
    check(cfg.n, r, s)?;
    let series: Vec<Vec<bool>> =
        run_chains(cfg, |v: &mut Vec<bool>, st, _| v.push(efp_event(st, r, s)))?;
    Ok(summarise(r, s, &series))
}

/// Estimates for every `r = 1..=n` at fixed `s`, from one set of runs.
pub fn efp_profile_estimate(cfg: &ChainConfig, s: usize) -> Result<Vec<EfpEstimate>> {
    check(cfg.n, 1, s)?;
    let n = cfg.n;
    let runs: Vec<Vec<Vec<bool>>> = run_chains(cfg, |v: &mut Vec<Vec<bool>>, st, _| {
        if v.is_empty() {
            v.resize(n, Vec::new());
        }
        for r in 1..=n {
            v[r - 1].push(efp_event(st, r, s));
        }
    })?;
    Ok((1..=n)
        .map(|r| {
            let series: Vec<Vec<bool>> = runs.iter().map(|c| c[r - 1].clone()).collect();
            summarise(r, s, &series)
        })
        .collect())
}

/// First crossing of 1/2, in `x = (n - r)/n`, interpolated between
/// neighbouring columns.
pub fn half_crossing(profile: &[EfpEstimate], n: usize) -> Option<f64> {
    let pts: Vec<(f64, f64)> = profile
        .iter()
        .map(|e| ((n - e.r) as f64 / n as f64, e.mean))
        .rev()
        .collect();
    pts.windows(2)
        .find(|w| w[0].1 >= 0.5 && w[1].1 < 0.5)
        .map(|w| {
            let ((x0, f0), (x1, f1)) = (w[0], w[1]);
            x0 + (f0 - 0.5) / (f0 - f1) * (x1 - x0)
        })
}
