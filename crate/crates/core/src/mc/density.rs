//! Per-cell densities of nonzero entries and the frozen-region boundary.

use serde::Serialize;

use super::chain::{run_chains, ChainConfig};
use super::height::HeightState;
use crate::arctic::ScaledCoords;
use crate::error::{Error, Result};

/// Sums of per-cell indicators; means are taken on demand, so merging is
/// plain addition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DensityField {
    pub n: usize,
    pub samples: u64,
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl DensityField {
    pub fn new(n: usize) -> Self {
        DensityField {
            n,
            samples: 0,
            plus: vec![0; n * n],
            minus: vec![0; n * n],
        }
    }

    pub fn record(&mut self, s: &HeightState) {
        if self.plus.is_empty() {
            *self = Self::new(s.n());
        }
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                match s.entry(i, j) {
                    1 => self.plus[i * n + j] += 1,
                    -1 => self.minus[i * n + j] += 1,
                    _ => {}
                }
            }
        }
        self.samples += 1;
    }

    pub fn merge(&self, o: &Self) -> Result<Self> {
        if self.samples == 0 {
            return Ok(o.clone());
        }
        if o.samples == 0 {
            return Ok(self.clone());
        }
        if self.n != o.n {
            return Err(Error::InvalidArgument(format!(
                "cannot merge fields of size {} and {}",
                self.n, o.n
            )));
        }
        let add = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Ok(DensityField {
            n: self.n,
            samples: self.samples + o.samples,
            plus: add(&self.plus, &o.plus),
            minus: add(&self.minus, &o.minus),
        })
    }

    fn mean(&self, v: &[u64], i: usize, j: usize) -> f64 {
        if self.samples == 0 {
            return 0.0;
        }
        v[i * self.n + j] as f64 / self.samples as f64
    }

    pub fn plus_mean(&self, i: usize, j: usize) -> f64 {
        self.mean(&self.plus, i, j)
    }

    pub fn minus_mean(&self, i: usize, j: usize) -> f64 {
        self.mean(&self.minus, i, j)
    }

    /// Density of `c`-type vertices, i.e. nonzero entries.
    pub fn c_mean(&self, i: usize, j: usize) -> f64 {
        self.plus_mean(i, j) + self.minus_mean(i, j)
    }

    /// `i,j,c_density,minus_density` lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,c_density,minus_density\n");
        for i in 0..self.n {
            for j in 0..self.n {
                out.push_str(&format!(
                    "{i},{j},{},{}\n",
                    self.c_mean(i, j),
                    self.minus_mean(i, j)
                ));
            }
        }
        out
    }

    /// Largest mean absolute difference of the `-1` density under the
    /// seven nontrivial symmetries of the square.
    pub fn asymmetry(&self) -> f64 {
        let n = self.n;
        let last = n.saturating_sub(1);
        let maps: [fn(usize, usize, usize) -> (usize, usize); 7] = [
            |i, j, _| (j, i),
            |i, j, l| (i, l - j),
            |i, j, l| (l - i, j),
            |i, j, l| (l - i, l - j),
            |i, j, l| (l - j, l - i),
            |i, j, l| (j, l - i),
            |i, j, l| (l - j, i),
        ];
        maps.iter()
            .map(|g| {
                let mut total = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        let (a, b) = g(i, j, last);
                        total += (self.minus_mean(i, j) - self.minus_mean(a, b)).abs();
                    }
                }
                total / (n * n) as f64
            })
            .fold(0.0, f64::max)
    }
}

pub fn sample_density(cfg: &ChainConfig) -> Result<DensityField> {
    let fields: Vec<DensityField> = run_chains(cfg, |f: &mut DensityField, s, _| f.record(s))?;
    fields
        .iter()
        .try_fold(DensityField::new(cfg.n), |acc, f| acc.merge(f))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalBoundary {
    pub points: Vec<ScaledCoords>,
    /// Rows of the upper half where the threshold was never reached.
    pub skipped: usize,
}

/// For each row in the upper half, the first `x` in the left half where the
/// `-1` density reaches `threshold`, linearly interpolated between cell
/// centres `x = (j + 1/2)/n`, `y = (i + 1/2)/n`.
pub fn empirical_boundary(field: &DensityField, threshold: f64) -> Result<EmpiricalBoundary> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "threshold must lie in (0, 1), got {threshold}"
        )));
    }
    if field.samples == 0 {
        return Err(Error::InvalidArgument("empty density field".into()));
    }
    let n = field.n;
    let h = 1.0 / n as f64;
    let mut points = Vec::new();
    let mut skipped = 0;
    for i in 0..n / 2 {
        let y = (i as f64 + 0.5) * h;
        let mut found = None;
        for j in 0..=n / 2 {
            let d = field.minus_mean(i, j);
            if d >= threshold {
                let x = if j == 0 {
                    0.5 * h
                } else {
                    let prev = field.minus_mean(i, j - 1);
                    (j as f64 - 0.5 + (threshold - prev) / (d - prev)) * h
                };
                found = Some(x);
                break;
            }
        }
        match found {
            Some(x) => points.push(ScaledCoords { x, y }),
            None => skipped += 1,
        }
    }
    Ok(EmpiricalBoundary { points, skipped })
}
