//! Leading large-`N` behaviour `ln h_N(z) ≈ N L(z)` and its derivatives.

use serde::Serialize;

use super::hpoly::h_poly;
use crate::error::{Error, Result};
use crate::params::Case;
use crate::poly::{RationalFunction, RationalPoly};
use crate::rational::{ln_q, q};

/// Limit log-density `L(z)` of one solvable case, for real `z > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LogDensityLimit {
    pub case: Case,
}

pub fn log_density(case: Case) -> LogDensityLimit {
    LogDensityLimit { case }
}

fn check_z(z: f64) -> Result<()> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "log-density needs real z > 0, got {z}"
        )));
    }
    Ok(())
}

fn sqrt_term(z: f64) -> f64 {
    (z * z - z + 1.0).sqrt()
}

impl LogDensityLimit {
    /// The saddle point `v(z) = (2 - z - √(z²-z+1)) / (3(1-z))` of the
    /// `Δ = 1/2` Euler integral, written as `1 / (2 - z + √(z²-z+1))` so that
    /// `z = 1` (where `v = 1/2`) needs no special casing.
    pub fn v(&self, z: f64) -> Option<f64> {
        (self.case == Case::Q1).then(|| 1.0 / (2.0 - z + sqrt_term(z)))
    }

    pub fn value(&self, z: f64) -> Result<f64> {
        check_z(z)?;
        Ok(match self.case {
            Case::Q1 => {
                let v = self.v(z).unwrap();
                (4.0 * v * (1.0 - v) * (1.0 - v + z * v)).ln()
            }
            Case::Q2 => ((z + 1.0) / 2.0).ln(),
            Case::Q3 => (2.0 * (2.0 * z + 1.0) * (z + 2.0) / (9.0 * (z + 1.0))).ln(),
        })
    }

    /// `L'(z)`. For `Δ = 1/2` this is `(1 - √(z²-z+1)) / (z(1-z))`, evaluated
    /// as `1 / (1 + √(z²-z+1))`; the limit at `z = 1` is `1/2`.
    pub fn derivative(&self, z: f64) -> Result<f64> {
        check_z(z)?;
        Ok(match self.case {
            Case::Q1 => 1.0 / (1.0 + sqrt_term(z)),
            Case::Q2 => 1.0 / (z + 1.0),
            Case::Q3 => 2.0 / (2.0 * z + 1.0) + 1.0 / (z + 2.0) - 1.0 / (z + 1.0),
        })
    }

    pub fn second_derivative(&self, z: f64) -> Result<f64> {
        check_z(z)?;
        Ok(match self.case {
            Case::Q1 => {
                let r = sqrt_term(z);
                -(2.0 * z - 1.0) / (2.0 * r * (1.0 + r).powi(2))
            }
            Case::Q2 => -1.0 / (z + 1.0).powi(2),
            Case::Q3 => {
                -4.0 / (2.0 * z + 1.0).powi(2) - 1.0 / (z + 2.0).powi(2) + 1.0 / (z + 1.0).powi(2)
            }
        })
    }

    /// `L'` as an exact rational function, term by term from the logarithm
    /// (`None` for `Δ = 1/2`, which is irrational).
    pub fn derivative_rational(&self) -> Option<RationalFunction> {
        match self.case {
            Case::Q1 => None,
            Case::Q2 => Some(RationalFunction::simple(q(1), q(1), q(1))),
            Case::Q3 => {
                let a = RationalFunction::simple(q(2), q(1), q(2));
                let b = RationalFunction::simple(q(1), q(2), q(1));
                let c = RationalFunction::simple(q(1), q(1), q(1));
                Some(&(&a + &b) - &c)
            }
        }
    }
}

/// `(2z² + 4z + 3) / ((1+z)(2+z)(1+2z))`, the combined last term of the
/// `Δ = -1/2` reduced equation.
pub fn q3_combined_derivative() -> RationalFunction {
    let den = &(&RationalPoly::from_ints(&[1, 1]) * &RationalPoly::from_ints(&[2, 1]))
        * &RationalPoly::from_ints(&[1, 2]);
    RationalFunction::new(RationalPoly::from_ints(&[3, 4, 2]), den)
}

/// `(1/n) ln h_n(z)` for each `n`, summed in log space.
pub fn empirical_log_density(ns: &[usize], case: Case, z: f64) -> Result<Vec<f64>> {
    check_z(z)?;
    let lz = z.ln();
    ns.iter()
        .map(|&n| {
            let p = h_poly(n, case)?;
            let logs: Vec<f64> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| num_traits::Signed::is_positive(*c))
                .map(|(k, c)| ln_q(c) + k as f64 * lz)
                .collect();
            let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let sum: f64 = logs.iter().map(|l| (l - top).exp()).sum();
            Ok((top + sum.ln()) / n as f64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    /// Five-point central difference.
    fn numeric_derivative(f: impl Fn(f64) -> f64, z: f64, h: f64) -> f64 {
        (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h)
    }

    #[test]
    fn closed_form_values() {
        let l2 = log_density(Case::Q2);
        assert!((l2.derivative(1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((l2.derivative(3.0).unwrap() - 0.25).abs() < 1e-15);
        let l3 = log_density(Case::Q3);
        assert!((l3.derivative(2.0).unwrap() - 19.0 / 60.0).abs() < 1e-15);
        assert_eq!(
            l3.derivative_rational().unwrap().eval(&frac(2, 1)),
            frac(19, 60)
        );
        let l1 = log_density(Case::Q1);
        assert!((l1.v(1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((l1.derivative(1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(l1.value(1.0).unwrap().abs() < 1e-15);
        assert!(l1.value(0.0).is_err());
    }

    #[test]
    fn q1_derivative_matches_unrationalised_form() {
        let l1 = log_density(Case::Q1);
        for z in [0.3, 0.9, 1.5, 3.0, 20.0] {
            let r = (z * z - z + 1.0f64).sqrt();
            let raw = (1.0 - r) / (z * (1.0 - z));
            assert!((l1.derivative(z).unwrap() - raw).abs() < 1e-12, "z = {z}");
            let v_raw = (2.0 - z - r) / (3.0 * (1.0 - z));
            assert!((l1.v(z).unwrap() - v_raw).abs() < 1e-12);
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for case in Case::ALL {
            let l = log_density(case);
            let mut z = 1.01;
            while z <= 50.0 {
                let fd = numeric_derivative(|t| l.value(t).unwrap(), z, 1e-3);
                assert!(
                    (fd - l.derivative(z).unwrap()).abs() < 1e-9,
                    "{case} z = {z}"
                );
                let fd2 = numeric_derivative(|t| l.derivative(t).unwrap(), z, 1e-3);
                assert!(
                    (fd2 - l.second_derivative(z).unwrap()).abs() < 1e-9,
                    "{case} z = {z}"
                );
                z += 0.37;
            }
        }
    }

    #[test]
    fn q3_partial_fractions_combine() {
        assert_eq!(
            log_density(Case::Q3).derivative_rational().unwrap(),
            q3_combined_derivative()
        );
    }

    #[test]
    fn empirical_sequences() {
        let ns = [10, 20, 50, 100];
        let e2 = empirical_log_density(&ns, Case::Q2, 3.0).unwrap();
        for (n, v) in ns.iter().zip(&e2) {
            let want = (*n as f64 - 1.0) / *n as f64 * 2f64.ln();
            assert!((v - want).abs() < 1e-12);
        }
        let l1 = log_density(Case::Q1).value(2.0).unwrap();
        let e1 = empirical_log_density(&ns, Case::Q1, 2.0).unwrap();
        assert!(e1.windows(2).all(|w| w[0] < w[1]));
        assert!((e1[3] - l1).abs() < 0.02);
        let e3 = empirical_log_density(&[200], Case::Q3, 2.0).unwrap();
        assert!((e3[0] - (40.0f64 / 27.0).ln()).abs() < 0.01);
    }
}
