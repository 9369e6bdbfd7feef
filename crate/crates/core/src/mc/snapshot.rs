//! Text snapshots: one JSON header line, then one run-length line per
//! height row giving its steps, e.g. `3+1-2+`.

use serde::{Deserialize, Serialize};

use super::height::HeightState;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnapshotHeader {
    pub n: usize,
    pub q: String,
    pub seed: u64,
    pub sweep: usize,
}

pub fn write_snapshot(header: &SnapshotHeader, state: &HeightState) -> Result<String> {
    if header.n != state.n() {
        return Err(Error::InvalidArgument(
            "header size does not match state".into(),
        ));
    }
    let mut out = serde_json::to_string(header).map_err(|e| Error::Io(e.to_string()))?;
    out.push('\n');
    let n = state.n();
    for i in 0..=n {
        let mut run: Option<(char, usize)> = None;
        for j in 0..n {
            let c = if state.get(i, j + 1) > state.get(i, j) {
                '+'
            } else {
                '-'
            };
            run = match run {
                Some((p, k)) if p == c => Some((p, k + 1)),
                Some((p, k)) => {
                    out.push_str(&format!("{k}{p}"));
                    Some((c, 1))
                }
                None => Some((c, 1)),
            };
        }
        if let Some((p, k)) = run {
            out.push_str(&format!("{k}{p}"));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn read_snapshot(text: &str) -> Result<(SnapshotHeader, HeightState)> {
    let mut lines = text.lines();
    let head = lines
        .next()
        .ok_or_else(|| Error::Parse("empty snapshot".into()))?;
    let header: SnapshotHeader =
        serde_json::from_str(head).map_err(|e| Error::Parse(e.to_string()))?;
    let n = header.n;
    let mut h = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        let mut v = i as i32;
        h.push(v);
        let mut digits = String::new();
        for ch in line.trim().chars() {
            match ch {
                '0'..='9' => digits.push(ch),
                '+' | '-' => {
                    let k: usize = digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad run in row {i}")))?;
                    digits.clear();
                    for _ in 0..k {
                        v += if ch == '+' { 1 } else { -1 };
                        h.push(v);
                    }
                }
                _ => return Err(Error::Parse(format!("unexpected {ch:?} in row {i}"))),
            }
        }
        if h.len() != (i + 1) * (n + 1) {
            return Err(Error::Parse(format!("row {i} has the wrong length")));
        }
    }
    Ok((header, HeightState::new(n, h)?))
}
