//! Limit shapes from double roots of the reduced saddle-point equation.
//!
//! Coordinates are `x = (N - r) / N` (from the left) and `y = s / N` (from
//! the top). The computed branch is the top-left quarter, running from
//! `(1/2, 0)` at `ω = 1` to `(0, 1/2)` as `ω → ∞`.

mod closed;
mod geometry;
mod spe;

use serde::{Deserialize, Serialize};

pub use closed::{
    implicit_residual, implicit_residual_exact, parametric_curve, parametric_exact,
    rational_omegas, SEXTIC,
};
pub use geometry::{curve_points, curve_sample, full_curve, temperate_area, AreaReport};
pub use spe::{
    double_root_solve, double_root_solve_exact, double_root_tangent, ReducedSpe, SpeBasis,
};

use crate::error::Result;
use crate::params::Case;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaledCoords {
    pub x: f64,
    pub y: f64,
}

impl ScaledCoords {
    /// Lattice position to scaled coordinates.
    pub fn from_lattice(n: usize, r: usize, s: usize) -> Self {
        ScaledCoords {
            x: (n - r) as f64 / n as f64,
            y: s as f64 / n as f64,
        }
    }

    pub fn dist(&self, o: &ScaledCoords) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ArcticPoint {
    pub omega: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcticCurve {
    pub case: Case,
}

impl ArcticCurve {
    pub fn new(case: Case) -> Self {
        ArcticCurve { case }
    }

    pub fn point(&self, omega: f64) -> Result<ArcticPoint> {
        let p = parametric_curve(self.case, omega)?;
        Ok(ArcticPoint {
            omega,
            x: p.x,
            y: p.y,
        })
    }

    pub fn residual(&self, p: ScaledCoords) -> Result<f64> {
        implicit_residual(self.case, p)
    }

    /// `x` on the curve at height `y ∈ [0, 1/2]`, by bisection in `ω`.
    pub fn x_at_y(&self, y: f64) -> Result<f64> {
        if !(0.0..=0.5).contains(&y) {
            return Err(crate::Error::InvalidArgument(format!(
                "y = {y} outside [0, 1/2]"
            )));
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let w = if mid >= 1.0 {
                f64::INFINITY
            } else {
                1.0 / (1.0 - mid)
            };
            if parametric_curve(self.case, w)?.y < y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let w = if hi >= 1.0 {
            f64::INFINITY
        } else {
            1.0 / (1.0 - hi)
        };
        Ok(parametric_curve(self.case, w)?.x)
    }

    /// Shortest distance from `p` to the quarter curve, by sampling then
    /// refining along the parameter.
    pub fn distance(&self, p: ScaledCoords) -> Result<f64> {
        let at = |u: f64| -> Result<ScaledCoords> {
            let w = if u >= 1.0 {
                f64::INFINITY
            } else {
                1.0 / (1.0 - u)
            };
            parametric_curve(self.case, w)
        };
        let k = 400;
        let mut best = (f64::INFINITY, 0usize);
        for i in 0..=k {
            let d = at(i as f64 / k as f64)?.dist(&p);
            if d < best.0 {
                best = (d, i);
            }
        }
        let (mut lo, mut hi) = (
            (best.1.saturating_sub(1)) as f64 / k as f64,
            ((best.1 + 1).min(k)) as f64 / k as f64,
        );
        for _ in 0..100 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if at(m1)?.dist(&p) < at(m2)?.dist(&p) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        Ok(at(0.5 * (lo + hi))?.dist(&p).min(best.0))
    }
}

/// `omega,x,y,residual` lines.
pub fn curve_csv(case: Case, points: &[ArcticPoint]) -> Result<String> {
    let mut out = String::from("omega,x,y,residual\n");
    for p in points {
        let r = implicit_residual(case, ScaledCoords { x: p.x, y: p.y })?;
        out.push_str(&format!("{},{},{},{:e}\n", p.omega, p.x, p.y, r));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_at_quarter_height() {
        let c = ArcticCurve::new(Case::Q2);
        // circle: 4x(1-x) + 4y(1-y) = 1 at y = 1/4 gives x = (1 - √(1 - 1/4 ... ))
        let x = c.x_at_y(0.25).unwrap();
        let want = 0.5 - (0.25f64 - 0.0625).sqrt();
        assert!((x - want).abs() < 1e-12);
        assert!(c.x_at_y(0.7).is_err());
    }

    #[test]
    fn distance_to_circle() {
        let c = ArcticCurve::new(Case::Q2);
        let p = ScaledCoords { x: 0.2, y: 0.2 };
        let want = 0.5 - (0.3f64).hypot(0.3);
        assert!((c.distance(p).unwrap() - want.abs()).abs() < 1e-9);
        let on = parametric_curve(Case::Q2, 3.0).unwrap();
        assert!(c.distance(on).unwrap() < 1e-9);
    }

    #[test]
    fn lattice_scaling() {
        let p = ScaledCoords::from_lattice(64, 48, 16);
        assert_eq!(p, ScaledCoords { x: 0.25, y: 0.25 });
    }

    #[test]
    fn csv_has_residual_column() {
        let pts: Vec<ArcticPoint> = [1.0, 2.0]
            .iter()
            .map(|&w| ArcticCurve::new(Case::Q1).point(w).unwrap())
            .collect();
        let csv = curve_csv(Case::Q1, &pts).unwrap();
        assert!(csv.starts_with("omega,x,y,residual\n1,0.5,0,"));
        assert_eq!(csv.lines().count(), 3);
    }
}
