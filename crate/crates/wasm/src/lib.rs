//! Browser bindings: arctic curves, exact EFP profiles and sampled
//! densities, each returned as a JSON string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use asmshape::arctic::{curve_sample, full_curve, ArcticCurve};
use asmshape::efp::efp_profile;
use asmshape::mc::{empirical_boundary, mean_distance_to_curve, sample_density, ChainConfig};
use asmshape::rational::{fmt_q, parse_q, to_f64};
use asmshape::{Case, ModelParams};

/// Largest size offered to the in-page sampler.
pub const MAX_PAGE_N: usize = 160;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

pub fn curves_json(cases: &str, samples: usize) -> Result<String, String> {
    let mut out = Vec::new();
    for tag in cases.split(',').filter(|t| !t.is_empty()) {
        let case: Case = tag.parse().map_err(|e: asmshape::Error| e.to_string())?;
        let quarter = curve_sample(case, samples.max(2)).map_err(|e| e.to_string())?;
        out.push(json!({ "case": case, "arcs": full_curve(&quarter) }));
    }
    Ok(json!({ "curves": out }).to_string())
}

pub fn profile_json(n: usize, s: usize, q: &str) -> Result<String, String> {
    let q = parse_q(q).map_err(|e| e.to_string())?;
    let params = ModelParams::from_q(q.clone());
    let values = efp_profile(n, s, &params).map_err(|e| e.to_string())?;
    let exact: Vec<String> = values.iter().map(fmt_q).collect();
    let approx: Vec<f64> = values.iter().map(to_f64).collect();
    let curve_x = match params.case() {
        Some(c) if 2 * s <= n => ArcticCurve::new(c).x_at_y(s as f64 / n as f64).ok(),
        _ => None,
    };
    Ok(json!({
        "n": n,
        "s": s,
        "q": fmt_q(&q),
        "exact": exact,
        "approx": approx,
        "curve_x": curve_x,
    })
    .to_string())
}

pub fn density_json(n: usize, q: &str, seed: u64, samples: usize) -> Result<String, String> {
    if n > MAX_PAGE_N {
        return Err(format!("n = {n} is above the page limit {MAX_PAGE_N}"));
    }
    let q = parse_q(q).map_err(|e| e.to_string())?;
    let mut cfg = ChainConfig::new(n, q.clone(), seed);
    cfg.n_samples = samples;
    let field = sample_density(&cfg).map_err(|e| e.to_string())?;
    let c: Vec<f64> = (0..n * n).map(|k| field.c_mean(k / n, k % n)).collect();
    let boundary = empirical_boundary(&field, 0.05).map_err(|e| e.to_string())?;
    let distance = match ModelParams::from_q(q).case() {
        Some(case) => mean_distance_to_curve(&boundary, &ArcticCurve::new(case)).ok(),
        None => None,
    };
    Ok(json!({
        "n": n,
        "seed": seed,
        "c_density": c,
        "boundary": boundary.points,
        "mean_distance_to_curve": distance,
    })
    .to_string())
}

/// Full closed curves for a comma-separated list of cases such as `"q1,q3"`.
#[wasm_bindgen]
pub fn arctic_curves(cases: &str, samples: usize) -> Result<String, JsValue> {
    curves_json(cases, samples).map_err(err)
}

/// Exact `F_n^(r,s)` for `r = 1..=n`.
#[wasm_bindgen]
pub fn efp_profile_exact(n: usize, s: usize, q: &str) -> Result<String, JsValue> {
    profile_json(n, s, q).map_err(err)
}

/// Density of nonzero entries and the empirical frozen boundary.
#[wasm_bindgen]
pub fn sampled_density(n: usize, q: &str, seed: u64, samples: usize) -> Result<String, JsValue> {
    density_json(n, q, seed, samples).map_err(err)
}
