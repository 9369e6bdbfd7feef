use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, frac, q, Q};

/// The three exactly solvable points at `t = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    /// Plain enumeration, `Δ = 1/2`.
    Q1,
    /// 2-enumeration (free fermions), `Δ = 0`.
    Q2,
    /// 3-enumeration, `Δ = -1/2`.
    Q3,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::Q1, Case::Q2, Case::Q3];

    pub fn q(self) -> u32 {
        match self {
            Case::Q1 => 1,
            Case::Q2 => 2,
            Case::Q3 => 3,
        }
    }

    pub fn from_q(q: u32) -> Option<Case> {
        match q {
            1 => Some(Case::Q1),
            2 => Some(Case::Q2),
            3 => Some(Case::Q3),
            _ => None,
        }
    }

    pub fn delta(self) -> Q {
        match self {
            Case::Q1 => frac(1, 2),
            Case::Q2 => Q::zero(),
            Case::Q3 => frac(-1, 2),
        }
    }

    pub fn delta_f64(self) -> f64 {
        match self {
            Case::Q1 => 0.5,
            Case::Q2 => 0.0,
            Case::Q3 => -0.5,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Case::Q1 => "q1",
            Case::Q2 => "q2",
            Case::Q3 => "q3",
        }
    }

    pub fn params(self) -> ModelParams {
        ModelParams::from_q(q(self.q() as i64))
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q1" | "1" | "1/2" | "0.5" => Ok(Case::Q1),
            "q2" | "2" | "0" => Ok(Case::Q2),
            "q3" | "3" | "-1/2" | "-0.5" => Ok(Case::Q3),
            other => Err(Error::InvalidArgument(format!(
                "unsupported case {other:?}; expected q1, q2 or q3"
            ))),
        }
    }
}

/// Weights enter only through `Δ = (a² + b² - c²) / 2ab` and `t = b / a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub delta: Q,
    pub t: Q,
    pub q: Q,
}

impl ModelParams {
    /// `a = b = 1`, `c = √q`, hence `t = 1` and `Δ = 1 - q/2`.
    pub fn from_q(q: Q) -> Self {
        let delta = Q::one() - &q / Q::from_integer(2.into());
        ModelParams {
            delta,
            t: Q::one(),
            q,
        }
    }

    /// `t² - 2tΔ`, the coefficient recurring in the integrand.
    pub fn gamma(&self) -> Q {
        &self.t * &self.t - Q::from_integer(2.into()) * &self.t * &self.delta
    }

    pub fn case(&self) -> Option<Case> {
        if !self.t.is_one() {
            return None;
        }
        Case::ALL.into_iter().find(|c| c.delta() == self.delta)
    }

    pub fn require_case(&self) -> Result<Case> {
        self.case().ok_or_else(|| Error::UnsupportedParams {
            delta: fmt_q(&self.delta),
            t: fmt_q(&self.t),
        })
    }
}
