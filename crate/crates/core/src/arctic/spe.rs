//! The reduced saddle-point equation and its double roots.
//!
//! With `c = 1 - 2Δ` (and `t = 1`),
//!
//! ```text
//! g(z; x, y) = y/(z-1) - (1-x)/z - y/(z+c) + L'(z)
//!            = y P(z) + x Q(z) + R(z)
//! P = 1/(z-1) - 1/(z+c),  Q = 1/z,  R = L'(z) - 1/z
//! ```
//!
//! `g` is affine in `(x, y)`, so `g(ω) = g'(ω) = 0` is a 2×2 linear system.

use num_traits::{One, Zero};

use super::ScaledCoords;
use crate::error::{Error, Result};
use crate::genfun::log_density;
use crate::params::Case;
use crate::poly::{RationalFunction, RationalPoly};
use crate::rational::{q, Q};

fn shift(case: Case) -> f64 {
    1.0 - 2.0 * case.delta_f64()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedSpe {
    pub case: Case,
}

/// `(P, Q, R)` and their first two derivatives at one `z`.
#[derive(Clone, Copy, Debug)]
pub struct SpeBasis {
    pub p: [f64; 3],
    pub q: [f64; 3],
    pub r: [f64; 3],
}

impl SpeBasis {
    fn g(&self, d: usize, x: f64, y: f64) -> f64 {
        y * self.p[d] + x * self.q[d] + self.r[d]
    }
}

/// `R = L' - 1/z` for the rational cases, with the cancellation done exactly.
fn r_rational(case: Case) -> Option<RationalFunction> {
    let lp = log_density(case).derivative_rational()?;
    let inv_z = RationalFunction::new(RationalPoly::one(), RationalPoly::x());
    Some(&lp - &inv_z)
}

impl ReducedSpe {
    pub fn new(case: Case) -> Self {
        ReducedSpe { case }
    }

    /// `g` summed term by term, as written.
    pub fn g(&self, z: f64, x: f64, y: f64) -> Result<f64> {
        let lp = log_density(self.case).derivative(z)?;
        Ok(y / (z - 1.0) - (1.0 - x) / z - y / (z + shift(self.case)) + lp)
    }

    /// `∂g/∂z`.
    pub fn dg(&self, z: f64, x: f64, y: f64) -> Result<f64> {
        let l2 = log_density(self.case).second_derivative(z)?;
        let c = shift(self.case);
        Ok(-y / (z - 1.0).powi(2) + (1.0 - x) / (z * z) + y / (z + c).powi(2) + l2)
    }

    /// Cancellation-free basis for `z >= 1`.
    pub fn basis(&self, z: f64) -> SpeBasis {
        let c = shift(self.case);
        let (a, b) = (z - 1.0, z + c);
        let p = [
            (1.0 + c) / (a * b),
            -(1.0 + c) * (a + b) / (a * a * b * b),
            2.0 * (1.0 + c) * (a * a + a * b + b * b) / (a * b).powi(3),
        ];
        let q = [1.0 / z, -1.0 / (z * z), 2.0 / (z * z * z)];
        let r = match self.case {
            Case::Q1 => {
                // R = -1/W with W = z (z + S), S = √(z² - z + 1)
                let s = (z * z - z + 1.0).sqrt();
                let s1 = (2.0 * z - 1.0) / (2.0 * s);
                let s2 = 3.0 / (4.0 * s * s * s);
                let w = z * (z + s);
                let w1 = 2.0 * z + s + z * s1;
                let w2 = 2.0 + 2.0 * s1 + z * s2;
                [
                    -1.0 / w,
                    w1 / (w * w),
                    w2 / (w * w) - 2.0 * w1 * w1 / (w * w * w),
                ]
            }
            _ => {
                let r0 = r_rational(self.case).expect("rational case");
                let r1 = r0.derivative();
                let r2 = r1.derivative();
                [r0.eval_f64(z), r1.eval_f64(z), r2.eval_f64(z)]
            }
        };
        SpeBasis { p, q, r }
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if omega.is_nan() || omega < 1.0 {
        return Err(Error::InvalidArgument(format!(
            "ω must lie in [1, ∞], got {omega}"
        )));
    }
    Ok(())
}

/// Point of the limit shape whose double root is `ω`.
pub fn double_root_solve(case: Case, omega: f64) -> Result<ScaledCoords> {
    check_omega(omega)?;
    if omega == 1.0 {
        return Ok(ScaledCoords { x: 0.5, y: 0.0 });
    }
    if omega.is_infinite() {
        return Ok(ScaledCoords { x: 0.0, y: 0.5 });
    }
    let b = ReducedSpe::new(case).basis(omega);
    let det = b.p[0] * b.q[1] - b.q[0] * b.p[1];
    let y = (-b.r[0] * b.q[1] + b.q[0] * b.r[1]) / det;
    let x = (-b.p[0] * b.r[1] + b.p[1] * b.r[0]) / det;
    Ok(ScaledCoords { x, y })
}

/// `(dx/dω, dy/dω)` for `1 < ω < ∞`, from differentiating the two
/// conditions along the curve.
pub fn double_root_tangent(case: Case, omega: f64) -> Result<(f64, f64)> {
    check_omega(omega)?;
    if omega == 1.0 || omega.is_infinite() {
        return Err(Error::InvalidArgument("tangent needs 1 < ω < ∞".into()));
    }
    let p = double_root_solve(case, omega)?;
    let b = ReducedSpe::new(case).basis(omega);
    let g2 = b.g(2, p.x, p.y);
    let det = b.p[0] * b.q[1] - b.q[0] * b.p[1];
    let dy = b.q[0] * g2 / det;
    let dx = -b.p[0] * g2 / det;
    Ok((dx, dy))
}

/// Exact solve at rational `ω > 1` for the cases with rational `L'`.
pub fn double_root_solve_exact(case: Case, omega: &Q) -> Option<(Q, Q)> {
    if omega <= &Q::one() {
        return (omega == &Q::one()).then(|| (Q::new(1.into(), 2.into()), Q::zero()));
    }
    let r0 = r_rational(case)?;
    let r1 = r0.derivative();
    let c = q(1) - q(2) * case.delta();
    let (a, b) = (omega - q(1), omega + &c);
    let p0 = (q(1) + &c) / (&a * &b);
    let p1 = -(&a * &a).recip() + (&b * &b).recip();
    let q0 = omega.recip();
    let q1 = -(omega * omega).recip();
    let (rv0, rv1) = (r0.eval(omega), r1.eval(omega));
    let det = &p0 * &q1 - &q0 * &p1;
    let y = (-&rv0 * &q1 + &q0 * &rv1) / &det;
    let x = (-&p0 * &rv1 + &p1 * &rv0) / &det;
    Some((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arctic::closed::{implicit_residual_exact, parametric_curve};
    use crate::genfun::q3_combined_derivative;
    use crate::rational::frac;

    const OMEGAS: [f64; 7] = [1.0, 1.1, 1.5, 2.0, 5.0, 10.0, 100.0];

    #[test]
    fn solver_matches_closed_forms() {
        for case in Case::ALL {
            for w in OMEGAS {
                let a = double_root_solve(case, w).unwrap();
                let b = parametric_curve(case, w).unwrap();
                assert!(
                    (a.x - b.x).abs() <= 1e-10 && (a.y - b.y).abs() <= 1e-10,
                    "{case} ω={w}: {a:?} {b:?}"
                );
            }
        }
    }

    #[test]
    fn known_points() {
        let p = double_root_solve(Case::Q2, 2.0).unwrap();
        assert!((p.x - 0.2).abs() < 1e-15 && (p.y - 0.1).abs() < 1e-15);
        assert_eq!(
            double_root_solve_exact(Case::Q2, &q(2)),
            Some((frac(1, 5), frac(1, 10)))
        );
        let (x, y) = double_root_solve_exact(Case::Q3, &q(2)).unwrap();
        assert_eq!((x.clone(), y.clone()), (frac(163, 675), frac(169, 2025)));
        assert!(implicit_residual_exact(Case::Q3, &x, &y).unwrap().is_zero());
        assert_eq!(
            double_root_solve(Case::Q1, 1.0).unwrap(),
            ScaledCoords { x: 0.5, y: 0.0 }
        );
        assert_eq!(
            double_root_solve(Case::Q3, f64::INFINITY).unwrap(),
            ScaledCoords { x: 0.0, y: 0.5 }
        );
        assert!(double_root_solve(Case::Q1, 0.5).is_err());
        assert!(double_root_solve_exact(Case::Q1, &q(2)).is_none());
    }

    #[test]
    fn double_root_certificate() {
        for case in Case::ALL {
            let spe = ReducedSpe::new(case);
            for w in [1.05, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 40.0, 100.0] {
                let p = double_root_solve(case, w).unwrap();
                assert!(spe.g(w, p.x, p.y).unwrap().abs() <= 1e-10, "{case} ω={w}");
                assert!(spe.dg(w, p.x, p.y).unwrap().abs() <= 1e-8, "{case} ω={w}");
                // nearby z is not a root: the root is exactly double
                let b = spe.basis(w);
                assert!(b.g(2, p.x, p.y).abs() > 1e-12);
            }
        }
    }

    #[test]
    fn basis_agrees_with_written_form() {
        for case in Case::ALL {
            let spe = ReducedSpe::new(case);
            for z in [1.3, 2.0, 7.5, 30.0] {
                let b = spe.basis(z);
                let (x, y) = (0.3, 0.2);
                assert!((b.g(0, x, y) - spe.g(z, x, y).unwrap()).abs() < 1e-12);
                assert!((b.g(1, x, y) - spe.dg(z, x, y).unwrap()).abs() < 1e-12);
                let h = 1e-3;
                let f = |t: f64| spe.dg(t, x, y).unwrap();
                let fd = (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h))
                    / (12.0 * h);
                assert!((b.g(2, x, y) - fd).abs() < 1e-6, "{case} z={z}");
            }
        }
    }

    #[test]
    fn q1_matches_displayed_equation() {
        // y/(z-1) - (1-x+y)/z + (1 - √(z²-z+1)) / (z(1-z))
        let spe = ReducedSpe::new(Case::Q1);
        for (x, y) in [(0.1, 0.2), (0.4, 0.05), (0.25, 0.25)] {
            let mut z = 1.01;
            while z < 50.0 {
                let s = (z * z - z + 1.0f64).sqrt();
                let shown = y / (z - 1.0) - (1.0 - x + y) / z + (1.0 - s) / (z * (1.0 - z));
                assert!((spe.g(z, x, y).unwrap() - shown).abs() < 1e-12, "z={z}");
                z += 0.29;
            }
        }
    }

    #[test]
    fn q3_last_term_is_combined_fraction() {
        let lp = log_density(Case::Q3).derivative_rational().unwrap();
        assert_eq!(lp, q3_combined_derivative());
        // and the y-terms combine to y (1/(z-1) - 1/(z+2))
        let spe = ReducedSpe::new(Case::Q3);
        for z in [1.5, 4.0] {
            let shown =
                0.2 / (z - 1.0) - 0.7 / z - 0.2 / (2.0 + z) + q3_combined_derivative().eval_f64(z);
            assert!((spe.g(z, 0.3, 0.2).unwrap() - shown).abs() < 1e-14);
        }
    }

    #[test]
    fn tangent_matches_finite_difference() {
        for case in Case::ALL {
            for w in [1.2, 2.0, 9.0] {
                let (dx, dy) = double_root_tangent(case, w).unwrap();
                let h = 1e-5;
                let a = double_root_solve(case, w + h).unwrap();
                let b = double_root_solve(case, w - h).unwrap();
                assert!((dx - (a.x - b.x) / (2.0 * h)).abs() < 1e-7);
                assert!((dy - (a.y - b.y) / (2.0 * h)).abs() < 1e-7);
            }
        }
        // closed-form derivatives for q = 1
        let w = 3.0f64;
        let r3 = (w * w - w + 1.0).powf(1.5);
        let (dx, dy) = double_root_tangent(Case::Q1, w).unwrap();
        assert!((dx + 3.0 / (4.0 * r3)).abs() < 1e-13);
        assert!((dy - 3.0 * (w - 1.0) / (4.0 * r3)).abs() < 1e-13);
    }
}
