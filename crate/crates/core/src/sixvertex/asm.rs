use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An `n x n` alternating sign matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidAsm("empty matrix".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidAsm(format!(
                "row {i} has length {}, expected {n}",
                rows[i].len()
            )));
        }
        Self::from_flat(n, rows.into_iter().flatten().collect())
    }

    pub fn from_flat(n: usize, entries: Vec<i8>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidAsm(format!(
                "expected {} entries for n = {n}",
                n * n
            )));
        }
        let asm = Asm { n, entries };
        asm.validate()?;
        Ok(asm)
    }

    /// Skips validation; only for callers that construct ASMs structurally.
    pub(crate) fn from_flat_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Asm { n, entries: e }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if let Some(p) = self.entries.iter().position(|&v| !(-1..=1).contains(&v)) {
            return Err(Error::InvalidAsm(format!(
                "entry ({}, {}) = {} is not in {{-1, 0, 1}}",
                p / n,
                p % n,
                self.entries[p]
            )));
        }
        let check = |line: &mut dyn Iterator<Item = i8>, what: &str, idx: usize| -> Result<()> {
            let mut partial = 0i32;
            for v in line {
                partial += v as i32;
                if !(0..=1).contains(&partial) {
                    return Err(Error::InvalidAsm(format!(
                        "{what} {idx}: nonzero entries do not alternate starting with +1"
                    )));
                }
            }
            if partial != 1 {
                return Err(Error::InvalidAsm(format!(
                    "{what} {idx} sums to {partial}, expected 1"
                )));
            }
            Ok(())
        };
        for i in 0..n {
            check(&mut (0..n).map(|j| self.get(i, j)), "row", i)?;
        }
        for j in 0..n {
            check(&mut (0..n).map(|i| self.get(i, j)), "column", j)?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(<[i8]>::to_vec).collect()
    }

    /// Number of `-1` entries, the exponent `k` in the `q^k` weight.
    pub fn minus_count(&self) -> usize {
        self.entries.iter().filter(|&&v| v == -1).count()
    }

    /// Column (from the left, 0-based) of the single `1` in the top row.
    pub fn first_row_one(&self) -> usize {
        self.entries[..self.n]
            .iter()
            .position(|&v| v == 1)
            .expect("validated ASM")
    }

    /// Sum of `a[i][j']` over `j' < col` in row `row`; always 0 or 1.
    pub fn row_partial(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n..row * self.n + col].iter().sum()
    }

    /// Sum of `a[i'][j]` over `i' < row` in column `col`; always 0 or 1.
    pub fn col_partial(&self, row: usize, col: usize) -> i8 {
        (0..row).map(|i| self.get(i, col)).sum()
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Asm({})", self.n)?;
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Asm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i8>>::deserialize(d)?;
        Asm::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure_two() -> Asm {
        Asm::new(vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 1, -1, 1, 0],
            vec![1, -1, 1, 0, 0],
            vec![0, 1, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn accepts_valid() {
        let a = figure_two();
        assert_eq!(a.minus_count(), 3);
        assert_eq!(a.first_row_one(), 2);
        assert_eq!(Asm::new(vec![vec![1]]).unwrap().minus_count(), 0);
    }

    #[test]
    fn rejects_bad_rows_and_columns() {
        let err = Asm::new(vec![vec![1, 0], vec![1, 0]]).unwrap_err();
        assert!(err.to_string().contains("column 0"), "{err}");
        let err = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![-1, 1, 1]]).unwrap_err();
        assert!(err.to_string().contains("row 2"), "{err}");
        assert!(Asm::new(vec![vec![2]]).is_err());
        assert!(Asm::new(vec![vec![1, 0]]).is_err());
        assert!(Asm::new(vec![]).is_err());
    }

    #[test]
    fn json_array_of_arrays() {
        let a = figure_two();
        let js = serde_json::to_string(&a).unwrap();
        assert!(js.starts_with("[[0,0,1,0,0],[0,1,-1,1,0]"));
        let back: Asm = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Asm>("[[1,1],[0,0]]").is_err());
    }
}
