//! Height functions on the `(n+1) × (n+1)` corner grid.
//!
//! `h(i, j) = i + j - 2 sum_{i' < i, j' < j} a_{i'j'}`. Boundary values are
//! `h(0, j) = j`, `h(i, 0) = i`, `h(n, j) = n - j`, `h(i, n) = n - i`, and
//! the matrix entry at cell `(i, j)` is
//! `(h(i, j+1) + h(i+1, j) - h(i, j) - h(i+1, j+1)) / 2`.
//!
//! A move raises a local minimum or lowers a local maximum at an interior
//! corner by 2. It changes exactly the four cells around that corner.

use crate::error::{Error, Result};
use crate::sixvertex::{asm_to_sixvertex, Asm, SixVertexConfig};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightState {
    n: usize,
    h: Vec<i32>,
}

/// Raise (`Up`) or lower (`Down`) an interior corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flip {
    Up,
    Down,
}

impl HeightState {
    pub fn from_asm(m: &Asm) -> Self {
        let n = m.n();
        let w = n + 1;
        // corner[i][j] = sum of entries above and left of corner (i, j)
        let mut corner = vec![0i32; w * w];
        for i in 1..=n {
            for j in 1..=n {
                corner[i * w + j] = corner[(i - 1) * w + j] + corner[i * w + j - 1]
                    - corner[(i - 1) * w + j - 1]
                    + m.get(i - 1, j - 1) as i32;
            }
        }
        let h = (0..w * w)
            .map(|k| (k / w + k % w) as i32 - 2 * corner[k])
            .collect();
        HeightState { n, h }
    }

    /// Checks boundary values and unit steps along every edge.
    pub fn new(n: usize, h: Vec<i32>) -> Result<Self> {
        let w = n + 1;
        if n == 0 || h.len() != w * w {
            return Err(Error::InvalidHeight(format!(
                "need {} values for n = {n}, got {}",
                w * w,
                h.len()
            )));
        }
        let at = |i: usize, j: usize| h[i * w + j];
        for k in 0..=n {
            let expect = [(0, k, k), (k, 0, k), (n, k, n - k), (k, n, n - k)];
            for (i, j, v) in expect {
                if at(i, j) != v as i32 {
                    return Err(Error::InvalidHeight(format!(
                        "boundary height at ({i}, {j}) is {}, expected {v}",
                        at(i, j)
                    )));
                }
            }
        }
        for i in 0..=n {
            for j in 0..=n {
                if j < n && (at(i, j + 1) - at(i, j)).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "step from ({i}, {j}) to ({i}, {}) is not ±1",
                        j + 1
                    )));
                }
                if i < n && (at(i + 1, j) - at(i, j)).abs() != 1 {
                    return Err(Error::InvalidHeight(format!(
                        "step from ({i}, {j}) to ({}, {j}) is not ±1",
                        i + 1
                    )));
                }
            }
        }
        Ok(HeightState { n, h })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_asm(&Asm::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn heights(&self) -> &[i32] {
        &self.h
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.h[i * (self.n + 1) + j]
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        ((self.get(i, j + 1) + self.get(i + 1, j) - self.get(i, j) - self.get(i + 1, j + 1)) / 2)
            as i8
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n;
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect();
        Asm::from_flat(n, entries).expect("height function encodes an ASM")
    }

    pub fn to_config(&self) -> SixVertexConfig {
        asm_to_sixvertex(&self.to_asm())
    }

    pub fn minus_count(&self) -> usize {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.entry(i, j) < 0)
            .count()
    }

    /// Which flip, if any, is admissible at interior corner `(i, j)`.
    #[inline]
    pub fn admissible(&self, i: usize, j: usize) -> Option<Flip> {
        let c = self.get(i, j);
        let nb = [
            self.get(i - 1, j),
            self.get(i + 1, j),
            self.get(i, j - 1),
            self.get(i, j + 1),
        ];
        if nb.iter().all(|&v| v == c + 1) {
            Some(Flip::Up)
        } else if nb.iter().all(|&v| v == c - 1) {
            Some(Flip::Down)
        } else {
            None
        }
    }

    fn minus_around(&self, i: usize, j: usize) -> i32 {
        [(i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j)]
            .iter()
            .filter(|&&(a, b)| self.entry(a, b) < 0)
            .count() as i32
    }

    /// Change in the number of `-1` entries if `flip` is applied at `(i, j)`.
    pub fn delta_minus(&mut self, i: usize, j: usize, flip: Flip) -> i32 {
        let before = self.minus_around(i, j);
        self.apply(i, j, flip);
        let after = self.minus_around(i, j);
        self.apply(i, j, opposite(flip));
        after - before
    }

    #[inline]
    pub fn apply(&mut self, i: usize, j: usize, flip: Flip) {
        let w = self.n + 1;
        match flip {
            Flip::Up => self.h[i * w + j] += 2,
            Flip::Down => self.h[i * w + j] -= 2,
        }
    }

    /// Every admissible move as `(i, j, flip, resulting state, change in -1 count)`.
    pub fn moves(&self) -> Vec<(usize, usize, Flip, HeightState, i32)> {
        let mut out = Vec::new();
        let mut scratch = self.clone();
        for i in 1..self.n {
            for j in 1..self.n {
                if let Some(f) = self.admissible(i, j) {
                    let dk = scratch.delta_minus(i, j, f);
                    let mut next = self.clone();
                    next.apply(i, j, f);
                    out.push((i, j, f, next, dk));
                }
            }
        }
        out
    }
}

fn opposite(f: Flip) -> Flip {
    match f {
        Flip::Up => Flip::Down,
        Flip::Down => Flip::Up,
    }
}
