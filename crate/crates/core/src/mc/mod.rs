//! Markov-chain sampling of domain-wall configurations weighted by
//! `q^(number of -1 entries)`.

mod chain;
mod density;
mod diagnostics;
mod estimate;
mod height;
mod snapshot;
#[cfg(feature = "stats")]
mod stats;

pub use chain::{run_chains, step, Chain, ChainConfig, MAX_SAMPLER_N};
pub use density::{empirical_boundary, sample_density, DensityField, EmpiricalBoundary};
pub use diagnostics::{autocorrelation, diagnose, integrated_time, Diagnostics};
pub use estimate::{efp_estimate, efp_event, efp_profile_estimate, half_crossing, EfpEstimate};
pub use height::{Flip, HeightState};
pub use snapshot::{read_snapshot, write_snapshot, SnapshotHeader};
#[cfg(feature = "stats")]
pub use stats::{chain_chi_square, chi_square, state_frequencies, ChiSquareReport};

use crate::arctic::ArcticCurve;
use crate::error::Result;

/// Mean distance from the boundary points to the analytic quarter curve.
pub fn mean_distance_to_curve(boundary: &EmpiricalBoundary, curve: &ArcticCurve) -> Result<f64> {
    let d: Vec<f64> = boundary
        .points
        .iter()
        .map(|p| curve.distance(*p))
        .collect::<Result<_>>()?;
    Ok(d.iter().sum::<f64>() / d.len().max(1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Case;
    use crate::rational::q;
    use crate::sixvertex::{efp_oracle, sixvertex_to_asm};

    fn cfg(n: usize, k: i64, seed: u64) -> ChainConfig {
        let mut c = ChainConfig::new(n, q(k), seed);
        c.sweeps_burnin = 200;
        c.sweeps_between = 5;
        c.n_samples = 4000;
        c
    }

    #[test]
    fn same_seed_same_field() {
        let mut c = cfg(8, 2, 11);
        c.chains = 3;
        let a = sample_density(&c).unwrap();
        let b = sample_density(&c).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
        c.seed = 12;
        assert_ne!(sample_density(&c).unwrap(), a);
    }

    #[test]
    fn field_means_are_consistent() {
        let f = sample_density(&cfg(6, 3, 5)).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let (c, p, m) = (f.c_mean(i, j), f.plus_mean(i, j), f.minus_mean(i, j));
                assert!((0.0..=1.0).contains(&c) && (c - p - m).abs() < 1e-15);
            }
            // first and last rows and columns carry no -1
            assert_eq!(f.minus_mean(0, i), 0.0);
            assert_eq!(f.minus_mean(i, 5), 0.0);
        }
    }

    #[test]
    fn merge_is_associative_and_commutative() {
        let fs: Vec<DensityField> = (0..3)
            .map(|s| sample_density(&cfg(5, 1, s)).unwrap())
            .collect();
        let left = fs[0].merge(&fs[1]).unwrap().merge(&fs[2]).unwrap();
        let right = fs[0].merge(&fs[1].merge(&fs[2]).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(fs[0].merge(&fs[1]).unwrap(), fs[1].merge(&fs[0]).unwrap());
        assert!(fs[0].merge(&DensityField::new(7)).unwrap() == fs[0]);
    }

    #[test]
    fn estimates_within_three_sigma_of_exact() {
        for k in 1..=3 {
            for (r, s) in [(3, 2), (2, 1), (4, 3)] {
                let mut c = cfg(5, k, 100 + k as u64);
                c.n_samples = 20000;
                c.chains = 4;
                let e = efp_estimate(&c, r, s).unwrap();
                let exact = crate::rational::to_f64(&efp_oracle(5, r, s, &q(k)).unwrap());
                assert!(
                    (e.mean - exact).abs() <= 3.0 * e.stderr.max(1e-3),
                    "q={k} r={r} s={s}: {e:?} vs {exact}"
                );
            }
        }
        let e = efp_estimate(&cfg(5, 2, 1), 5, 3).unwrap();
        assert_eq!(e.mean, 1.0);
    }

    #[test]
    fn snapshots_round_trip_and_convert() {
        let c = cfg(9, 3, 4);
        let mut chain = Chain::new(9, &c.q, c.seed, 0);
        for _ in 0..20 {
            chain.sweeps(7);
            let header = SnapshotHeader {
                n: 9,
                q: "3".into(),
                seed: 4,
                sweep: chain.sweeps,
            };
            let text = write_snapshot(&header, &chain.state).unwrap();
            let (h2, s2) = read_snapshot(&text).unwrap();
            assert_eq!((h2, &s2), (header, &chain.state));
            assert_eq!(sixvertex_to_asm(&s2.to_config()).unwrap(), s2.to_asm());
        }
        assert!(read_snapshot("{\"n\":2,\"q\":\"1\",\"seed\":0,\"sweep\":0}\n2+\n").is_err());
    }

    #[cfg(feature = "stats")]
    #[test]
    fn chi_square_small() {
        let mut c = cfg(3, 2, 3);
        c.n_samples = 20000;
        let rep = chain_chi_square(&c).unwrap();
        assert_eq!(rep.states, 7);
        assert!(rep.p_value > 0.001, "{rep:?}");
    }

    #[test]
    fn corners_frozen_centre_active() {
        let mut c = ChainConfig::new(24, q(1), 21);
        c.sweeps_burnin = 3000;
        c.sweeps_between = 10;
        c.n_samples = 400;
        c.chains = 4;
        let f = sample_density(&c).unwrap();
        assert!(f.c_mean(12, 12) > f.c_mean(0, 0) + 0.2);
        assert!(f.minus_mean(1, 1) < 0.01);
        assert!(f.asymmetry() < 0.03, "{}", f.asymmetry());
        let b = empirical_boundary(&f, 0.05).unwrap();
        assert!(!b.points.is_empty());
        for p in &b.points {
            // the frozen corner lies strictly outside
            assert!(p.x > 0.0 || p.y > 0.0);
        }
        let d = mean_distance_to_curve(&b, &ArcticCurve::new(Case::Q1)).unwrap();
        assert!(d < 0.1, "{d}");
        assert!(empirical_boundary(&f, 1.5).is_err());
    }
}
