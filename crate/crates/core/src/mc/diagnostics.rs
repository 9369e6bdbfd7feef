//! Burn-in diagnostics for a single chain.

use serde::Serialize;

use super::chain::{Chain, ChainConfig};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostics {
    pub n: usize,
    pub seed: u64,
    /// Number of `-1` entries after every `stride` sweeps, from the start.
    pub minus_trace: Vec<usize>,
    pub stride: usize,
    /// Normalised autocorrelation of the trace after burn-in, by lag.
    pub autocorrelation: Vec<f64>,
    /// Integrated autocorrelation time in units of `stride` sweeps.
    pub tau: f64,
}

pub fn autocorrelation(xs: &[f64], max_lag: usize) -> Vec<f64> {
    let m = xs.len();
    if m < 2 {
        return vec![1.0];
    }
    let mean = xs.iter().sum::<f64>() / m as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / m as f64;
    if var == 0.0 {
        return vec![1.0];
    }
    (0..=max_lag.min(m - 1))
        .map(|lag| {
            let c: f64 = (0..m - lag)
                .map(|t| (xs[t] - mean) * (xs[t + lag] - mean))
                .sum();
            c / (m - lag) as f64 / var
        })
        .collect()
}

/// `1 + 2 sum rho(k)`, stopping at the first non-positive term.
pub fn integrated_time(rho: &[f64]) -> f64 {
    1.0 + 2.0 * rho.iter().skip(1).take_while(|&&r| r > 0.0).sum::<f64>()
}

/// Runs chain 0 of `cfg` for burn-in plus `n_samples * sweeps_between`
/// sweeps, recording the `-1` count every `sweeps_between` sweeps.
pub fn diagnose(cfg: &ChainConfig) -> Result<Diagnostics> {
    cfg.validate()?;
    let stride = cfg.sweeps_between;
    let mut chain = Chain::new(cfg.n, &cfg.q, cfg.seed, 0);
    let burn_points = cfg.sweeps_burnin / stride;
    let mut trace = vec![chain.state.minus_count()];
    for _ in 0..burn_points + cfg.n_samples {
        chain.sweeps(stride);
        trace.push(chain.state.minus_count());
    }
    let tail: Vec<f64> = trace[burn_points + 1..].iter().map(|&v| v as f64).collect();
    let rho = autocorrelation(&tail, tail.len() / 4);
    Ok(Diagnostics {
        n: cfg.n,
        seed: cfg.seed,
        stride,
        tau: integrated_time(&rho),
        minus_trace: trace,
        autocorrelation: rho,
    })
}
