//! The same integrand around `z = 1`, integrated one variable at a time.
//!
//! Only `z_s` has a simple pole at 1 among the innermost factors. Its
//! residue sets `z_s = 1`, turns every cross factor `(z_j - z_s) / (...)`
//! into `(z_j - 1) / (γ z_j + 1)` and reduces `h_{N,s}` to `h_{N,s-1}`.
//! The result is the same integrand with `s - 1` variables.

use num_traits::{One, Zero};

use super::conventions::{prefactor_sign, UNIT_CONTOUR};
use crate::error::{Error, Result};
use crate::genfun::h_multi;
use crate::multipoly::MultiPoly;
use crate::params::ModelParams;
use crate::rational::{pow_q, q, Q};

/// Integrand state between reduction steps.
#[derive(Clone, Debug)]
pub struct UnitIntegral {
    /// Exponent of `γ z_j + 1` in the numerator.
    pub gamma_exp: Vec<i64>,
    /// Exponent of `z_j - 1` in the denominator.
    pub pole_order: Vec<i64>,
    pub r: usize,
    pub h: MultiPoly,
    pub factor: Q,
}

impl UnitIntegral {
    pub fn new(n: usize, r: usize, s: usize, params: &ModelParams) -> Result<Self> {
        let case = params.require_case()?;
        if r == 0 || r > n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= r <= n; got n = {n}, r = {r}"
            )));
        }
        Ok(UnitIntegral {
            gamma_exp: (1..=s).map(|j| (s - j) as i64).collect(),
            pole_order: (1..=s).map(|j| (s - j + 1) as i64).collect(),
            r,
            h: h_multi(n, s, case)?,
            factor: q(prefactor_sign(s) as i64),
        })
    }

    pub fn vars(&self) -> usize {
        self.gamma_exp.len()
    }

    /// Integrates out the last variable.
    pub fn reduce(&mut self, params: &ModelParams, expected_h: Option<&MultiPoly>) -> Result<()> {
        let v = self.vars() - 1;
        if self.pole_order[v] != 1 {
            return Err(Error::Consistency(format!(
                "pole of order {} at z{} = 1, expected a simple pole",
                self.pole_order[v],
                v + 1
            )));
        }
        let gamma = params.gamma();
        // z^(-r) at 1 is 1; the remaining factor of z_v is (γ + 1)^a
        let res = pow_q(&(&gamma + Q::one()), self.gamma_exp[v]);
        self.factor *= res * q(UNIT_CONTOUR.sign() as i64);
        self.gamma_exp.pop();
        self.pole_order.pop();
        for j in 0..v {
            self.gamma_exp[j] -= 1;
            self.pole_order[j] -= 1;
        }
        self.h = self.h.substitute(v, &Q::one());
        if let Some(want) = expected_h {
            if &self.h != want {
                return Err(Error::Consistency(format!(
                    "h with {} variables does not reduce at z = 1",
                    v + 1
                )));
            }
        }
        Ok(())
    }

    /// Value once no variables remain.
    pub fn value(&self) -> Result<Q> {
        if self.vars() != 0 {
            return Err(Error::Consistency("integration incomplete".into()));
        }
        Ok(&self.factor * self.h.coeff(&[]))
    }
}

/// `I_N^(r,s)`, checking the reduction of `h_{N,s}` at every step.
pub fn unit_integral_check(n: usize, r: usize, s: usize, params: &ModelParams) -> Result<Q> {
    let case = params.require_case()?;
    if s == 0 || s > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= n; got n = {n}, s = {s}"
        )));
    }
    let mut state = UnitIntegral::new(n, r, s, params)?;
    while state.vars() > 0 {
        let k = state.vars() - 1;
        let want = if k == 0 {
            MultiPoly::constant(0, Q::one())
        } else {
            h_multi(n, k, case)?
        };
        state.reduce(params, Some(&want))?;
    }
    let v = state.value()?;
    debug_assert!(!v.is_zero());
    Ok(v)
}
