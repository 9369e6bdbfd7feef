//! Area of the temperate region and arc-length sampling of the curve.
//!
//! The branch is integrated in `u = 1 - 1/ω` up to `ω = OMEGA_MAX`. The
//! remaining piece near `(0, 1/2)` is shorter than `1e-5` and is closed by
//! its chord, since `f64` evaluation at larger `ω` loses all precision.

use serde::Serialize;

use super::spe::{double_root_solve, double_root_tangent};
use super::{ArcticPoint, ScaledCoords};
use crate::error::{Error, Result};
use crate::params::Case;

const AREA_TOL: f64 = 1e-12;
const PANELS: usize = 32;
const OMEGA_MAX: f64 = 1e5;
const U_MAX: f64 = 1.0 - 1.0 / OMEGA_MAX;

fn omega_of(u: f64) -> f64 {
    if u >= 1.0 {
        f64::INFINITY
    } else {
        1.0 / (1.0 - u)
    }
}

fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let out = quadrature::integrate(f, a, b, tol);
    if !(out.error_estimate <= tol) || !out.integral.is_finite() {
        return Err(Error::Quadrature {
            achieved: out.error_estimate,
            requested: tol,
        });
    }
    Ok(out.integral)
}

/// `(x y' - y x') / 2` in the `u` variable.
fn sector_density(case: Case, u: f64) -> f64 {
    let w = omega_of(u);
    let (Ok(p), Ok((dx, dy))) = (double_root_solve(case, w), double_root_tangent(case, w)) else {
        return 0.0;
    };
    0.5 * (p.x * dy - p.y * dx) * w * w
}

fn speed(case: Case, u: f64) -> f64 {
    let w = omega_of(u);
    match double_root_tangent(case, w) {
        Ok((dx, dy)) => dx.hypot(dy) * w * w,
        Err(_) => 0.0,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AreaReport {
    pub case: Case,
    pub area: f64,
    pub tol: f64,
}

/// Area inside the full limit shape: the unit square minus four congruent
/// frozen corners.
pub fn temperate_area(case: Case) -> Result<AreaReport> {
    let f = |u: f64| sector_density(case, u);
    let tail = double_root_solve(case, OMEGA_MAX)?;
    // triangle spanned by the origin, the cut point and (0, 1/2)
    let corner = integrate(f, 0.0, 0.5, AREA_TOL / 2.0)?
        + integrate(f, 0.5, U_MAX, AREA_TOL / 2.0)?
        + 0.25 * tail.x;
    Ok(AreaReport {
        case,
        area: 1.0 - 4.0 * corner,
        tol: 4.0 * AREA_TOL,
    })
}

fn panel_edge(k: usize) -> f64 {
    if k == PANELS {
        U_MAX
    } else {
        k as f64 / PANELS as f64 * U_MAX
    }
}

/// Cumulative arc length at the panel edges, then the full length.
fn arc_table(case: Case) -> Result<Vec<f64>> {
    let mut cum = vec![0.0];
    for k in 0..PANELS {
        let len = integrate(|u| speed(case, u), panel_edge(k), panel_edge(k + 1), 1e-13)?;
        cum.push(cum[k] + len);
    }
    let end = ScaledCoords { x: 0.0, y: 0.5 };
    let chord = double_root_solve(case, OMEGA_MAX)?;
    cum.push(cum[PANELS] + (chord.x - end.x).hypot(chord.y - end.y));
    Ok(cum)
}

/// Point at distance `d` before the far endpoint, for `d` inside the chord.
fn tail_point(case: Case, d: f64) -> Result<ArcticPoint> {
    let end = ScaledCoords { x: 0.0, y: 0.5 };
    let (mut lo, mut hi) = (OMEGA_MAX.ln(), 80.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let p = double_root_solve(case, mid.exp())?;
        if p.dist(&end) > d {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    at(case, lo.exp())
}

fn at(case: Case, omega: f64) -> Result<ArcticPoint> {
    let p = double_root_solve(case, omega)?;
    Ok(ArcticPoint {
        omega,
        x: p.x,
        y: p.y,
    })
}

/// `m` points along the curve from `(1/2, 0)` to `(0, 1/2)`, evenly spaced
/// in arc length.
pub fn curve_sample(case: Case, m: usize) -> Result<Vec<ScaledCoords>> {
    Ok(curve_points(case, m)?
        .into_iter()
        .map(|p| ScaledCoords { x: p.x, y: p.y })
        .collect())
}

/// As [`curve_sample`], keeping the parameter of each point.
pub fn curve_points(case: Case, m: usize) -> Result<Vec<ArcticPoint>> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {m}"
        )));
    }
    let cum = arc_table(case)?;
    let total = cum[PANELS + 1];
    let mut out = Vec::with_capacity(m);
    out.push(at(case, 1.0)?);
    for k in 1..m - 1 {
        let target = total * k as f64 / (m - 1) as f64;
        if target >= cum[PANELS] {
            out.push(tail_point(case, total - target)?);
            continue;
        }
        let panel = cum.partition_point(|&c| c <= target).clamp(1, PANELS) - 1;
        let (a, b) = (panel_edge(panel), panel_edge(panel + 1));
        let need = target - cum[panel];
        let mut u = a + (b - a) * need / (cum[panel + 1] - cum[panel]);
        for _ in 0..30 {
            let have = integrate(|t| speed(case, t), a, u, 1e-14)?;
            let step = (have - need) / speed(case, u);
            u = (u - step).clamp(a, b);
            if step.abs() < 1e-14 {
                break;
            }
        }
        out.push(at(case, omega_of(u))?);
    }
    out.push(at(case, f64::INFINITY)?);
    Ok(out)
}

/// All four arcs of the closed curve from one quarter, using the
/// left-right and top-bottom reflections of the square.
pub fn full_curve(quarter: &[ScaledCoords]) -> Vec<Vec<ScaledCoords>> {
    let map = |f: fn(ScaledCoords) -> ScaledCoords| quarter.iter().map(|&p| f(p)).collect();
    vec![
        quarter.to_vec(),
        map(|p| ScaledCoords {
            x: 1.0 - p.x,
            y: p.y,
        }),
        map(|p| ScaledCoords {
            x: 1.0 - p.x,
            y: 1.0 - p.y,
        }),
        map(|p| ScaledCoords {
            x: p.x,
            y: 1.0 - p.y,
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arctic::closed::implicit_residual;

    #[test]
    fn circle_area() {
        let a = temperate_area(Case::Q2).unwrap();
        assert!(
            (a.area - std::f64::consts::FRAC_PI_4).abs() <= 1e-8,
            "{}",
            a.area
        );
    }

    #[test]
    fn area_decreases_with_q() {
        let a: Vec<f64> = Case::ALL
            .iter()
            .map(|&c| temperate_area(c).unwrap().area)
            .collect();
        assert!(a[0] > a[1] && a[1] > a[2], "{a:?}");
    }

    #[test]
    fn q1_area_against_closed_form_integrand() {
        // independent: trapezoid-free integral of the displayed parametrisation
        let f = |u: f64| {
            let w = omega_of(u);
            if !w.is_finite() {
                return 0.0;
            }
            let s = (w * w - w + 1.0).sqrt();
            let x = 1.0 - (2.0 * w - 1.0) / (2.0 * s);
            let y = 1.0 - (w + 1.0) / (2.0 * s);
            let dx = -3.0 / (4.0 * s * s * s);
            let dy = 3.0 * (w - 1.0) / (4.0 * s * s * s);
            0.5 * (x * dy - y * dx) * w * w
        };
        let corner = integrate(f, 0.0, 1.0, 1e-12).unwrap();
        let a = temperate_area(Case::Q1).unwrap();
        assert!((a.area - (1.0 - 4.0 * corner)).abs() < 1e-10);
    }

    #[test]
    fn two_samples_are_endpoints() {
        for case in Case::ALL {
            let s = curve_sample(case, 2).unwrap();
            assert_eq!(
                s,
                vec![
                    ScaledCoords { x: 0.5, y: 0.0 },
                    ScaledCoords { x: 0.0, y: 0.5 }
                ]
            );
        }
        assert!(curve_sample(Case::Q1, 1).is_err());
    }

    #[test]
    fn samples_on_curve_evenly_spaced_and_symmetric() {
        for case in Case::ALL {
            let m = 41;
            let s = curve_sample(case, m).unwrap();
            for p in &s {
                assert!(
                    implicit_residual(case, *p).unwrap().abs() <= 1e-10,
                    "{case} {p:?}"
                );
            }
            let gaps: Vec<f64> = s
                .windows(2)
                .map(|w| (w[1].x - w[0].x).hypot(w[1].y - w[0].y))
                .collect();
            let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
            assert!(
                gaps.iter().all(|g| (g - mean).abs() < 0.01 * mean),
                "{case} {gaps:?}"
            );
            for k in 0..m {
                let (a, b) = (s[k], s[m - 1 - k]);
                assert!(
                    (a.x - b.y).abs() < 1e-9 && (a.y - b.x).abs() < 1e-9,
                    "{case} k={k}"
                );
            }
        }
    }

    #[test]
    fn full_curve_closes() {
        let q = curve_sample(Case::Q2, 5).unwrap();
        let arcs = full_curve(&q);
        assert_eq!(arcs.len(), 4);
        for arc in &arcs {
            for p in arc {
                let r = (p.x - 0.5).hypot(p.y - 0.5);
                assert!((r - 0.5).abs() < 1e-10);
            }
        }
    }
}
