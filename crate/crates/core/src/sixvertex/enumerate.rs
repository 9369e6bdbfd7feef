//! Row-by-row generation of ASMs through their column partial sums.
//!
//! After `d` rows the partial column sums form a 0/1 vector with exactly `d`
//! ones (a row of the monotone triangle). A row is admissible from state `c`
//! when its nonzero entries alternate `+1, -1, ..., +1`, with `+1` only on
//! closed columns and `-1` only on open ones; the next state is `c` XOR the
//! row's support.

use super::asm::Asm;
use crate::error::{Error, Result};

/// Default largest `n` accepted by every enumeration-backed routine.
pub const DEFAULT_MAX_N: usize = 8;

/// Reads `ASM_MAX_N` from the environment, falling back to [`DEFAULT_MAX_N`].
pub fn max_enumeration_n() -> usize {
    std::env::var("ASM_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
        .min(31)
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let max = max_enumeration_n();
    if n > max {
        return Err(Error::BoundExceeded {
            n,
            max,
            what: "ASM enumeration; set ASM_MAX_N",
        });
    }
    Ok(())
}

/// All rows admissible after column state `state`, as next states.
pub(crate) fn successors(n: usize, state: u32) -> Vec<u32> {
    let mut out = Vec::new();
    fn go(n: usize, state: u32, j: usize, open: bool, support: u32, out: &mut Vec<u32>) {
        if j == n {
            if open {
                out.push(state ^ support);
            }
            return;
        }
        let bit = 1u32 << j;
        go(n, state, j + 1, open, support, out);
        if !open && state & bit == 0 {
            go(n, state, j + 1, true, support | bit, out);
        }
        if open && state & bit != 0 {
            go(n, state, j + 1, false, support | bit, out);
        }
    }
    go(n, state, 0, false, 0, &mut out);
    out
}

fn transition_table(n: usize) -> Vec<Vec<u32>> {
    (0..1u32 << n).map(|s| successors(n, s)).collect()
}

fn row_entries(n: usize, prev: u32, next: u32) -> impl Iterator<Item = i8> {
    (0..n).map(move |j| ((next >> j) & 1) as i8 - ((prev >> j) & 1) as i8)
}

/// Depth-first stream over every ASM of size `n`.
pub struct AsmIter {
    n: usize,
    table: Vec<Vec<u32>>,
    states: Vec<u32>,
    cursor: Vec<usize>,
    min_depth: usize,
    done: bool,
}

impl AsmIter {
    fn new(n: usize, prefix: &[u32]) -> Self {
        let mut states = vec![0];
        states.extend_from_slice(prefix);
        let cursor = vec![0; states.len()];
        AsmIter {
            n,
            table: transition_table(n),
            min_depth: prefix.len(),
            states,
            cursor,
            done: false,
        }
    }

    fn build(&self) -> Asm {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for w in self.states.windows(2) {
            entries.extend(row_entries(self.n, w[0], w[1]));
        }
        Asm::from_flat_unchecked(self.n, entries)
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        while !self.done {
            let depth = self.states.len() - 1;
            if depth == self.n {
                let asm = self.build();
                if depth == self.min_depth {
                    self.done = true;
                } else {
                    self.states.pop();
                    self.cursor.pop();
                }
                return Some(asm);
            }
            let opts = &self.table[self.states[depth] as usize];
            let p = self.cursor[depth];
            if p < opts.len() {
                self.cursor[depth] += 1;
                self.states.push(opts[p]);
                self.cursor.push(0);
            } else if depth == self.min_depth {
                self.done = true;
            } else {
                self.states.pop();
                self.cursor.pop();
            }
        }
        None
    }
}

/// Every ASM of size `n`, each exactly once.
pub fn enumerate_asms(n: usize) -> Result<AsmIter> {
    check_n(n)?;
    Ok(AsmIter::new(n, &[]))
}

/// The ASMs whose top-row `1` is in column `col` (from the left); these
/// streams partition [`enumerate_asms`] and can be consumed in parallel.
pub fn enumerate_asms_with_first_row(n: usize, col: usize) -> Result<AsmIter> {
    check_n(n)?;
    if col >= n {
        return Err(Error::InvalidArgument(format!(
            "column {col} out of range for n = {n}"
        )));
    }
    Ok(AsmIter::new(n, &[1 << col]))
}

/// Number of ASMs with exactly `k` entries equal to `-1`, for each `k`,
/// counted by propagating state multiplicities (no matrices are built).
pub fn count_by_minus_ones(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    let table = transition_table(n);
    // (state, k) -> multiplicity
    let mut layer: std::collections::HashMap<(u32, usize), u64> = [((0, 0), 1)].into();
    for _ in 0..n {
        let mut next = std::collections::HashMap::new();
        for (&(s, k), &mult) in &layer {
            for &t in &table[s as usize] {
                let minus = (s & !t).count_ones() as usize;
                *next.entry((t, k + minus)).or_insert(0) += mult;
            }
        }
        layer = next;
    }
    let kmax = layer.keys().map(|&(_, k)| k).max().unwrap_or(0);
    let mut out = vec![0; kmax + 1];
    for ((_, k), m) in layer {
        out[k] += m;
    }
    Ok(out)
}
