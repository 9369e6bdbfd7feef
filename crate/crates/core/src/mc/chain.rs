//! Metropolis chains over height functions.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use super::height::{Flip, HeightState};
use crate::error::{Error, Result};
use crate::rational::{serde_q, to_f64, Q};

/// Default refusal bound for sampler sizes.
pub const MAX_SAMPLER_N: usize = 512;

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainConfig {
    pub n: usize,
    #[serde(with = "serde_q")]
    pub q: Q,
    pub seed: u64,
    pub sweeps_burnin: usize,
    pub sweeps_between: usize,
    pub n_samples: usize,
    /// Independent chains; the samples are split between them.
    #[serde(default = "one")]
    pub chains: usize,
    #[serde(default)]
    pub allow_large: bool,
}

impl ChainConfig {
    pub fn new(n: usize, q: Q, seed: u64) -> Self {
        ChainConfig {
            n,
            q,
            seed,
            sweeps_burnin: 2 * n * n,
            sweeps_between: 10,
            n_samples: 1000,
            chains: 1,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if self.n > MAX_SAMPLER_N && !self.allow_large {
            return Err(Error::BoundExceeded {
                n: self.n,
                max: MAX_SAMPLER_N,
                what: "sampler",
            });
        }
        if self.sweeps_between == 0 || self.n_samples == 0 || self.chains == 0 {
            return Err(Error::InvalidArgument(
                "sweeps_between, n_samples and chains must be positive".into(),
            ));
        }
        if !num_traits::Signed::is_positive(&self.q) {
            return Err(Error::InvalidArgument("q must be positive".into()));
        }
        Ok(())
    }

    /// `q` outside `{1, 2, 3}` works but is not covered by tests.
    pub fn experimental(&self) -> bool {
        !(1..=3).any(|k| self.q == Q::from_integer(k.into()))
    }

    fn samples_for(&self, chain: usize) -> usize {
        self.n_samples / self.chains + usize::from(chain < self.n_samples % self.chains)
    }
}

/// One proposal: a uniform interior corner and a uniform direction,
/// accepted with probability `min(1, q^Δk)`. Returns whether the state
/// changed.
pub fn step<R: Rng>(state: &mut HeightState, q: f64, rng: &mut R) -> bool {
    let n = state.n();
    if n < 2 {
        return false;
    }
    let i = rng.gen_range(1..n);
    let j = rng.gen_range(1..n);
    let dir = if rng.gen::<bool>() {
        Flip::Up
    } else {
        Flip::Down
    };
    if state.admissible(i, j) != Some(dir) {
        return false;
    }
    let dk = state.delta_minus(i, j, dir);
    let ratio = q.powi(dk);
    if ratio >= 1.0 || rng.gen::<f64>() < ratio {
        state.apply(i, j, dir);
        true
    } else {
        false
    }
}

/// A chain with its own random stream.
pub struct Chain {
    pub state: HeightState,
    q: f64,
    rng: Xoshiro256PlusPlus,
    pub sweeps: usize,
}

impl Chain {
    /// Chain `index` of the seed family: the seeded generator advanced by
    /// `index` jumps of `2^128` steps.
    pub fn new(n: usize, q: &Q, seed: u64, index: usize) -> Self {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        for _ in 0..index {
            rng.jump();
        }
        Chain {
            state: HeightState::identity(n),
            q: to_f64(q),
            rng,
            sweeps: 0,
        }
    }

    /// `(n-1)²` proposals.
    pub fn sweep(&mut self) {
        let m = self.state.n().saturating_sub(1).pow(2);
        for _ in 0..m {
            step(&mut self.state, self.q, &mut self.rng);
        }
        self.sweeps += 1;
    }

    pub fn sweeps(&mut self, k: usize) {
        for _ in 0..k {
            self.sweep();
        }
    }
}

/// Runs every chain of `cfg`, calling `observe` on each retained snapshot,
/// and returns the per-chain results in chain order.
pub fn run_chains<T, F>(cfg: &ChainConfig, observe: F) -> Result<Vec<T>>
where
    T: Send + Default,
    F: Fn(&mut T, &HeightState, usize) + Sync,
{
    cfg.validate()?;
    let run = |k: usize| -> T {
        let mut acc = T::default();
        let mut chain = Chain::new(cfg.n, &cfg.q, cfg.seed, k);
        chain.sweeps(cfg.sweeps_burnin);
        for _ in 0..cfg.samples_for(k) {
            chain.sweeps(cfg.sweeps_between);
            observe(&mut acc, &chain.state, chain.sweeps);
        }
        acc
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..cfg.chains).into_par_iter().map(run).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..cfg.chains).map(run).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};
    use crate::sixvertex::enumerate_asms;
    use num_traits::{One, Zero};
    use std::collections::HashMap;

    #[test]
    fn q_one_accepts_every_admissible_proposal() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(7);
        let mut s = HeightState::identity(6);
        for _ in 0..2000 {
            let before = s.clone();
            let mut probe = rng.clone();
            let i = probe.gen_range(1..6);
            let j = probe.gen_range(1..6);
            let dir = if probe.gen::<bool>() {
                Flip::Up
            } else {
                Flip::Down
            };
            let changed = step(&mut s, 1.0, &mut rng);
            assert_eq!(changed, before.admissible(i, j) == Some(dir));
        }
    }

    #[test]
    fn single_site_is_frozen() {
        let mut c = Chain::new(1, &q(2), 1, 0);
        c.sweeps(10);
        assert_eq!(c.state, HeightState::identity(1));
    }

    /// Transition matrix of one proposal, in exact rationals.
    fn transition_matrix(n: usize, qv: &Q) -> (Vec<HeightState>, Vec<Vec<Q>>) {
        let states: Vec<HeightState> = enumerate_asms(n)
            .unwrap()
            .map(|m| HeightState::from_asm(&m))
            .collect();
        let index: HashMap<&HeightState, usize> =
            states.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let prop = frac(1, (2 * (n - 1) * (n - 1)) as i64);
        let mut p = vec![vec![Q::zero(); states.len()]; states.len()];
        for (a, s) in states.iter().enumerate() {
            let mut stay = Q::one();
            for (_, _, _, next, dk) in s.moves() {
                let ratio = crate::rational::pow_q(qv, dk as i64);
                let acc = if ratio > Q::one() { Q::one() } else { ratio };
                let w = &prop * acc;
                stay -= &w;
                p[a][index[&next]] += w;
            }
            p[a][a] += stay;
        }
        (states, p)
    }

    #[test]
    fn exact_stationarity_at_three() {
        for k in 1..=3 {
            let qv = q(k);
            let (states, p) = transition_matrix(3, &qv);
            assert_eq!(states.len(), 7);
            let w: Vec<Q> = states
                .iter()
                .map(|s| crate::rational::pow_q(&qv, s.minus_count() as i64))
                .collect();
            let z: Q = w.iter().sum();
            let pi: Vec<Q> = w.iter().map(|x| x / &z).collect();
            for b in 0..states.len() {
                let flow: Q = (0..states.len()).map(|a| &pi[a] * &p[a][b]).sum();
                assert_eq!(flow, pi[b], "q={k}");
            }
            for a in 0..states.len() {
                assert_eq!(p[a].iter().sum::<Q>(), Q::one());
                for b in 0..states.len() {
                    assert_eq!(&pi[a] * &p[a][b], &pi[b] * &p[b][a]);
                }
            }
        }
    }

    #[test]
    fn config_checks() {
        let mut c = ChainConfig::new(600, q(1), 0);
        assert!(matches!(c.validate(), Err(Error::BoundExceeded { .. })));
        c.allow_large = true;
        assert!(c.validate().is_ok());
        c.q = q(0);
        assert!(c.validate().is_err());
        assert!(ChainConfig::new(4, frac(1, 2), 0).experimental());
        assert!(!ChainConfig::new(4, q(3), 0).experimental());
        let js = serde_json::to_string(&ChainConfig::new(4, frac(3, 2), 9)).unwrap();
        assert!(js.contains("\"q\":\"3/2\""));
        let back: ChainConfig = serde_json::from_str(&js).unwrap();
        assert_eq!(back.q, frac(3, 2));
    }

    #[test]
    fn sample_split_between_chains() {
        let mut c = ChainConfig::new(4, q(1), 0);
        c.n_samples = 10;
        c.chains = 3;
        assert_eq!(
            (0..3).map(|k| c.samples_for(k)).collect::<Vec<_>>(),
            vec![4, 3, 3]
        );
    }
}
