//! Arrow configurations of the six-vertex model with domain-wall boundaries.
//!
//! Lattice conventions (rows from the top, columns from the left, 0-based):
//!
//! ```text
//!            v[0][0]     v[0][1]
//!              |           |
//!   h[0][0] --(0,0)-h[0][1]-(0,1)-- h[0][2]
//!              |           |
//!            v[1][0]     v[1][1]
//!              |           |
//!   h[1][0] --(1,0)-h[1][1]-(1,1)-- h[1][2]
//!              |           |
//!            v[2][0]     v[2][1]
//! ```
//!
//! `h[i][k]` is the horizontal edge of row `i` left of column `k` (so
//! `k = n` is the right boundary) and `v[k][j]` is the vertical edge of
//! column `j` above row `k`. A horizontal edge points right exactly when the
//! row partial sum of the ASM to its left is 1; a vertical edge points up
//! exactly when the column partial sum above it is 1.

use serde::{Deserialize, Serialize};

use super::asm::Asm;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HArrow {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VArrow {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightClass {
    A,
    B,
    C,
}

/// The six ice-rule vertices, in the customary left-to-right order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    /// All right / up.
    A1,
    /// All left / down.
    A2,
    /// Right / down.
    B1,
    /// Left / up.
    B2,
    /// Horizontal in, vertical out; ASM entry `-1`.
    C1,
    /// Horizontal out, vertical in; ASM entry `+1`.
    C2,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [Self::A1, Self::A2, Self::B1, Self::B2, Self::C1, Self::C2];

    pub fn weight_class(self) -> WeightClass {
        match self {
            Self::A1 | Self::A2 => WeightClass::A,
            Self::B1 | Self::B2 => WeightClass::B,
            Self::C1 | Self::C2 => WeightClass::C,
        }
    }

    pub fn asm_entry(self) -> i8 {
        match self {
            Self::C1 => -1,
            Self::C2 => 1,
            _ => 0,
        }
    }

    /// Arrows as (left edge, right edge, top edge, bottom edge).
    pub fn arrows(self) -> (HArrow, HArrow, VArrow, VArrow) {
        use HArrow::*;
        use VArrow::*;
        match self {
            Self::A1 => (Right, Right, Up, Up),
            Self::A2 => (Left, Left, Down, Down),
            Self::B1 => (Right, Right, Down, Down),
            Self::B2 => (Left, Left, Up, Up),
            Self::C1 => (Right, Left, Up, Down),
            Self::C2 => (Left, Right, Down, Up),
        }
    }

    pub fn from_arrows(left: HArrow, right: HArrow, top: VArrow, bottom: VArrow) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.arrows() == (left, right, top, bottom))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SixVertexConfig {
    n: usize,
    /// `n` rows of `n + 1` edges.
    horizontal: Vec<HArrow>,
    /// `n + 1` rows of `n` edges.
    vertical: Vec<VArrow>,
}

impl SixVertexConfig {
    /// Builds a configuration from raw arrows, checking the ice rule and
    /// the boundary conditions.
    pub fn new(n: usize, horizontal: Vec<HArrow>, vertical: Vec<VArrow>) -> Result<Self> {
        if n == 0 || horizontal.len() != n * (n + 1) || vertical.len() != n * (n + 1) {
            return Err(Error::InvalidArgument(format!(
                "arrow arrays have the wrong size for n = {n}"
            )));
        }
        let c = SixVertexConfig {
            n,
            horizontal,
            vertical,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, row: usize, edge: usize) -> HArrow {
        self.horizontal[row * (self.n + 1) + edge]
    }

    pub fn v(&self, edge: usize, col: usize) -> VArrow {
        self.vertical[edge * self.n + col]
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.h(i, 0) != HArrow::Left || self.h(i, n) != HArrow::Right {
                let col = if self.h(i, 0) != HArrow::Left {
                    0
                } else {
                    n - 1
                };
                return Err(Error::InvalidConfig {
                    row: i,
                    col,
                    reason: "external horizontal arrow does not point outward".into(),
                });
            }
        }
        for j in 0..n {
            if self.v(0, j) != VArrow::Down || self.v(n, j) != VArrow::Up {
                let row = if self.v(0, j) != VArrow::Down {
                    0
                } else {
                    n - 1
                };
                return Err(Error::InvalidConfig {
                    row,
                    col: j,
                    reason: "external vertical arrow does not point inward".into(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                self.vertex(i, j)?;
            }
        }
        Ok(())
    }

    pub fn vertex(&self, row: usize, col: usize) -> Result<VertexType> {
        let arrows = (
            self.h(row, col),
            self.h(row, col + 1),
            self.v(row, col),
            self.v(row + 1, col),
        );
        VertexType::from_arrows(arrows.0, arrows.1, arrows.2, arrows.3).ok_or_else(|| {
            Error::InvalidConfig {
                row,
                col,
                reason: format!("ice rule violated by arrows {arrows:?}"),
            }
        })
    }

    pub fn vertex_types(&self) -> Vec<VertexType> {
        let n = self.n;
        (0..n * n)
            .map(|p| self.vertex(p / n, p % n).expect("validated"))
            .collect()
    }

    pub fn count(&self, t: VertexType) -> usize {
        self.vertex_types().into_iter().filter(|&v| v == t).count()
    }
}

pub fn asm_to_sixvertex(m: &Asm) -> SixVertexConfig {
    let n = m.n();
    let mut horizontal = Vec::with_capacity(n * (n + 1));
    for i in 0..n {
        let mut partial = 0;
        for k in 0..=n {
            horizontal.push(if partial == 1 {
                HArrow::Right
            } else {
                HArrow::Left
            });
            if k < n {
                partial += m.get(i, k);
            }
        }
    }
    let mut vertical = vec![VArrow::Down; n * (n + 1)];
    for j in 0..n {
        let mut partial = 0;
        for k in 0..=n {
            if partial == 1 {
                vertical[k * n + j] = VArrow::Up;
            }
            if k < n {
                partial += m.get(k, j);
            }
        }
    }
    SixVertexConfig {
        n,
        horizontal,
        vertical,
    }
}

pub fn sixvertex_to_asm(c: &SixVertexConfig) -> Result<Asm> {
    c.validate()?;
    let entries = c
        .vertex_types()
        .into_iter()
        .map(VertexType::asm_entry)
        .collect();
    Asm::from_flat(c.n(), entries)
        .map_err(|e| Error::Consistency(format!("bijection produced {e}")))
}

/// Whether the `s` topmost horizontal edges between the `r`-th and
/// `(r+1)`-th vertical lines, counted from the right, all point left.
///
/// Vertical line `r` from the right is column `n - r`, so the gap is
/// horizontal edge index `n - r`; `r = n` is the left boundary.
pub fn efp_event(c: &SixVertexConfig, r: usize, s: usize) -> bool {
    let edge = c.n() - r;
    (0..s).all(|i| c.h(i, edge) == HArrow::Left)
}

/// The zero-block criterion: the top-left `(n - r) x s` block of the ASM
/// (width `n - r`, height `s`) is all zeros.
pub fn zero_block_event(m: &Asm, r: usize, s: usize) -> bool {
    let width = m.n() - r;
    (0..s).all(|i| (0..width).all(|j| m.get(i, j) == 0))
}
