//! Brute-force `q`-weighted statistics over the full ASM set. These are the
//! ground truth that the generating functions, the residue evaluation and
//! the sampler are checked against.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::asm::Asm;
use super::config::{asm_to_sixvertex, efp_event, zero_block_event, HArrow};
use super::enumerate::{check_n, enumerate_asms_with_first_row};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// Folds over all ASMs of size `n`, one partial accumulator per top-row
/// position, merged at the end.
fn fold_asms<T, I, F, M>(n: usize, identity: I, fold: F, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &Asm) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    check_n(n)?;
    let part = |col: usize| -> T {
        let mut acc = identity();
        for a in enumerate_asms_with_first_row(n, col).expect("bounds checked") {
            fold(&mut acc, &a);
        }
        acc
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..n).into_par_iter().map(part).reduce(&identity, &merge))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..n).map(part).fold(identity(), merge))
    }
}

fn merge_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn bump(h: &mut Vec<u64>, k: usize) {
    if h.len() <= k {
        h.resize(k + 1, 0);
    }
    h[k] += 1;
}

/// `sum_k hist[k] q^k`
fn weigh(hist: &[u64], q: &Q) -> Q {
    hist.iter()
        .rev()
        .fold(Q::zero(), |acc, &c| acc * q + Q::from_integer(c.into()))
}

fn check_q(q: &Q) -> Result<()> {
    if !q.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "q must be positive, got {}",
            fmt_q(q)
        )));
    }
    Ok(())
}

/// Histogram of `-1` counts, accumulated from the enumeration stream.
pub fn minus_one_histogram(n: usize) -> Result<Vec<u64>> {
    fold_asms(n, Vec::new, |h, a| bump(h, a.minus_count()), merge_hist)
}

/// `sum over ASMs of q^(number of -1 entries)`.
pub fn weighted_count(n: usize, q: &Q) -> Result<Q> {
    check_q(q)?;
    Ok(weigh(&minus_one_histogram(n)?, q))
}

/// Domain-wall partition function at `a = b = 1`, `c = √q`, with the
/// overall `c^n` stripped: `Z = c^n · partition_function(n, q)`.
pub fn partition_function(n: usize, q: &Q) -> Result<Q> {
    weighted_count(n, q)
}

/// `H_n^(r)` for `r = 1..=n` (index `r - 1`): probability that the top-row
/// `1` sits at position `r` counted from the right.
pub fn boundary_correlation(n: usize, q: &Q) -> Result<Vec<Q>> {
    check_q(q)?;
    let per_col = fold_asms(
        n,
        || vec![Vec::new(); n],
        |acc, a| bump(&mut acc[a.first_row_one()], a.minus_count()),
        |a, b| {
            a.into_iter()
                .zip(b)
                .map(|(x, y)| merge_hist(x, y))
                .collect()
        },
    )?;
    let z = weighted_count(n, q)?;
    Ok((1..=n).map(|r| weigh(&per_col[n - r], q) / &z).collect())
}

fn check_rs(n: usize, r: usize, s: usize) -> Result<()> {
    if !(1..=n).contains(&r) || !(1..=n).contains(&s) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r, s <= n = {n}; got r = {r}, s = {s}"
        )));
    }
    Ok(())
}

/// Depth of the all-left column of horizontal arrows at gap `r`, for each `r`.
fn left_run_depths(a: &Asm) -> Vec<usize> {
    let c = asm_to_sixvertex(a);
    let n = a.n();
    (1..=n)
        .map(|r| {
            (0..n)
                .take_while(|&i| c.h(i, n - r) == HArrow::Left)
                .count()
        })
        .collect()
}

/// Emptiness formation probability `F_n^(r,s)` by full enumeration, with the
/// event read off the arrow configuration.
pub fn efp_oracle(n: usize, r: usize, s: usize, q: &Q) -> Result<Q> {
    check_rs(n, r, s)?;
    Ok(efp_oracle_table(n, q)?[r - 1][s - 1].clone())
}

/// `table[r-1][s-1] = F_n^(r,s)` for every `(r, s)`, from one enumeration pass.
pub fn efp_oracle_table(n: usize, q: &Q) -> Result<Vec<Vec<Q>>> {
    check_q(q)?;
    let hist = fold_asms(
        n,
        || vec![vec![Vec::new(); n]; n],
        |acc, a| {
            let k = a.minus_count();
            for (r0, depth) in left_run_depths(a).into_iter().enumerate() {
                for s0 in 0..depth {
                    bump(&mut acc[r0][s0], k);
                }
            }
        },
        |a, b| {
            a.into_iter()
                .zip(b)
                .map(|(x, y)| {
                    x.into_iter()
                        .zip(y)
                        .map(|(u, v)| merge_hist(u, v))
                        .collect()
                })
                .collect()
        },
    )?;
    let z = weighted_count(n, q)?;
    Ok(hist
        .iter()
        .map(|row| row.iter().map(|h| weigh(h, q) / &z).collect())
        .collect())
}

/// Number of `(asm, r, s)` triples where the arrow event and the zero-block
/// criterion disagree.
pub fn efp_indicator_disagreements(n: usize) -> Result<usize> {
    fold_asms(
        n,
        || 0usize,
        |acc, a| {
            let c = asm_to_sixvertex(a);
            for r in 1..=n {
                for s in 1..=n {
                    if efp_event(&c, r, s) != zero_block_event(a, r, s) {
                        *acc += 1;
                    }
                }
            }
        },
        |a, b| a + b,
    )
}

/// Serialised oracle result; big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub q_num: String,
    pub q_den: String,
    pub value_num: String,
    pub value_den: String,
}

impl OracleRecord {
    pub fn new(n: usize, r: usize, s: usize, q: &Q, value: &Q) -> Self {
        OracleRecord {
            n,
            r,
            s,
            q_num: q.numer().to_string(),
            q_den: q.denom().to_string(),
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
        }
    }

    pub fn value(&self) -> Result<Q> {
        crate::rational::parse_q(&format!("{}/{}", self.value_num, self.value_den))
    }
}
