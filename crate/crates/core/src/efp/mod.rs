//! Emptiness formation probability from its multiple contour integral.
//!
//! The integrand, for variables `z_1..z_s`, is
//!
//! ```text
//! (-1)^s  prod_j [γ z_j + 1]^(s-j) / (z_j^r (z_j - 1)^(s-j+1))
//!       × prod_{j<k} (z_j - z_k) / (t² z_j z_k - 2tΔ z_j + 1)
//!       × h_{N,s}(z_1, ..., z_s)
//! ```
//!
//! with `γ = t² - 2tΔ`. Around `z = 0` it gives `F_N^(r,s)`; around `z = 1`
//! (clockwise) it gives exactly 1.

pub mod conventions;
mod residue;
mod unit;

use serde::{Deserialize, Serialize};

pub use residue::{efp_grid, efp_profile, efp_residue, EfpEvaluator, ResidueOptions};
pub use unit::{unit_integral_check, UnitIntegral};

use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::rational::{fmt_q, to_f64, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EfpQuery {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub params: ModelParams,
}

impl EfpQuery {
    pub fn new(n: usize, r: usize, s: usize, params: ModelParams) -> Result<Self> {
        if n == 0 || r == 0 || s == 0 || r > n || s > n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= r, s <= n; got n = {n}, r = {r}, s = {s}"
            )));
        }
        Ok(EfpQuery { n, r, s, params })
    }
}

/// `u(z) = -(z - 1) / (γ z + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTransform {
    gamma: Q,
}

impl UTransform {
    pub fn new(params: &ModelParams) -> Self {
        UTransform {
            gamma: params.gamma(),
        }
    }

    /// `None` at the pole `z = -1/γ`.
    pub fn eval(&self, z: &Q) -> Option<Q> {
        let den = &self.gamma * z + Q::from_integer(1.into());
        if num_traits::Zero::is_zero(&den) {
            return None;
        }
        Some(-(z - Q::from_integer(1.into())) / den)
    }
}

/// One evaluated point, rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfpRecord {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub q: String,
    pub efp: Option<String>,
    pub oracle: Option<String>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl EfpRecord {
    pub fn new(query: &EfpQuery, efp: Option<&Q>, oracle: Option<&Q>) -> Self {
        let matches = match (efp, oracle) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        EfpRecord {
            n: query.n,
            r: query.r,
            s: query.s,
            q: fmt_q(&query.params.q),
            efp: efp.map(fmt_q),
            oracle: oracle.map(fmt_q),
            matches,
        }
    }
}

/// `r,value` lines for plotting a profile.
pub fn profile_csv(profile: &[Q]) -> String {
    let mut out = String::from("r,value\n");
    for (i, v) in profile.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, to_f64(v)));
    }
    out
}
