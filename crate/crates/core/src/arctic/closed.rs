//! Closed-form parametrisations and implicit equations of the three curves.

use num_traits::{One, Zero};

use super::ScaledCoords;
use crate::error::{Error, Result};
use crate::params::Case;
use crate::rational::{frac, q, Q};

/// `(coefficient, power of x, power of y)` of the `q = 3` sextic.
pub const SEXTIC: [(i64, u32, u32); 28] = [
    (324, 6, 0),
    (1620, 5, 1),
    (3429, 4, 2),
    (4254, 3, 3),
    (3429, 2, 4),
    (1620, 1, 5),
    (324, 0, 6),
    (-972, 5, 0),
    (-1458, 4, 1),
    (-2970, 3, 2),
    (-2970, 2, 3),
    (-1458, 1, 4),
    (-972, 0, 5),
    (-6147, 4, 0),
    (-9150, 3, 1),
    (-17462, 2, 2),
    (-9150, 1, 3),
    (-6147, 0, 4),
    (13914, 3, 0),
    (24086, 2, 1),
    (24086, 1, 2),
    (13914, 0, 3),
    (-11511, 2, 0),
    (-17258, 1, 1),
    (-11511, 0, 2),
    (4392, 1, 0),
    (4392, 0, 1),
    (-648, 0, 0),
];

fn check_omega(omega: f64) -> Result<()> {
    if omega.is_nan() || omega < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "ω must lie in [1, ∞], got {omega}"
        )));
    }
    Ok(())
}

pub fn parametric_curve(case: Case, omega: f64) -> Result<ScaledCoords> {
    check_omega(omega)?;
    if omega.is_infinite() {
        return Ok(ScaledCoords { x: 0.0, y: 0.5 });
    }
    let w = omega;
    Ok(match case {
        Case::Q1 => {
            let s = (w * w - w + 1.0).sqrt();
            ScaledCoords {
                x: 1.0 - (2.0 * w - 1.0) / (2.0 * s),
                y: 1.0 - (w + 1.0) / (2.0 * s),
            }
        }
        Case::Q2 => {
            let d = w * w + 1.0;
            ScaledCoords {
                x: 1.0 / d,
                y: (w - 1.0).powi(2) / (2.0 * d),
            }
        }
        Case::Q3 => {
            let d = (w * w + 2.0) * (2.0 * w + 1.0).powi(2) * (w + 1.0).powi(2);
            let xn = (((7.0 * w + 14.0) * w + 19.0) * w + 12.0) * w + 2.0;
            let yn = (w - 1.0).powi(2) * ((((6.0 * w + 16.0) * w + 19.0) * w + 16.0) * w + 6.0);
            ScaledCoords {
                x: xn / d,
                y: yn / (3.0 * d),
            }
        }
    })
}

/// Exact point at rational `ω >= 1` (`None` for `q = 1`).
pub fn parametric_exact(case: Case, omega: &Q) -> Option<(Q, Q)> {
    let w = omega.clone();
    let poly = |c: &[i64]| c.iter().rev().fold(Q::zero(), |acc, &k| acc * &w + q(k));
    match case {
        Case::Q1 => None,
        Case::Q2 => {
            let d = &w * &w + q(1);
            let wm = &w - q(1);
            Some((d.recip(), &wm * &wm / (q(2) * d)))
        }
        Case::Q3 => {
            let a = q(2) * &w + q(1);
            let b = &w + q(1);
            let d = (&w * &w + q(2)) * &a * &a * &b * &b;
            let wm = &w - q(1);
            let x = poly(&[2, 12, 19, 14, 7]) / &d;
            let y = &wm * &wm * poly(&[6, 16, 19, 16, 6]) / (q(3) * d);
            Some((x, y))
        }
    }
}

fn check_point(x: f64, y: f64) -> Result<()> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "non-finite point ({x}, {y})"
        )));
    }
    Ok(())
}

/// Left side minus right side of the implicit equation.
pub fn implicit_residual(case: Case, p: ScaledCoords) -> Result<f64> {
    let ScaledCoords { x, y } = p;
    check_point(x, y)?;
    Ok(match case {
        Case::Q1 => 4.0 * x * (1.0 - x) + 4.0 * y * (1.0 - y) + 4.0 * x * y - 1.0,
        Case::Q2 => 4.0 * x * (1.0 - x) + 4.0 * y * (1.0 - y) - 1.0,
        Case::Q3 => SEXTIC
            .iter()
            .map(|&(c, i, j)| c as f64 * x.powi(i as i32) * y.powi(j as i32))
            .sum(),
    })
}

pub fn implicit_residual_exact(case: Case, x: &Q, y: &Q) -> Option<Q> {
    let one = Q::one();
    let four = q(4);
    Some(match case {
        Case::Q1 => &four * x * (&one - x) + &four * y * (&one - y) + &four * x * y - one,
        Case::Q2 => &four * x * (&one - x) + &four * y * (&one - y) - one,
        Case::Q3 => SEXTIC
            .iter()
            .map(|&(c, i, j)| {
                q(c) * num_traits::pow(x.clone(), i as usize)
                    * num_traits::pow(y.clone(), j as usize)
            })
            .sum(),
    })
}

/// `ω` values at which exact checks are made.
pub fn rational_omegas() -> Vec<Q> {
    vec![q(1), frac(3, 2), q(2), q(3), q(10)]
}
