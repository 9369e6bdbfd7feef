use std::fs;

use serde_json::{json, Value};

use asmshape::arctic::{
    curve_points, full_curve, implicit_residual, temperate_area, ArcticCurve, ArcticPoint,
    ScaledCoords,
};
use asmshape::efp::{efp_residue, EfpQuery, EfpRecord};
use asmshape::genfun::h_poly;
use asmshape::mc::{
    chain_chi_square, empirical_boundary, mean_distance_to_curve, sample_density, write_snapshot,
    Chain, ChainConfig, SnapshotHeader,
};
use asmshape::rational::{fmt_q, parse_q, to_f64, Q};
use asmshape::sixvertex::{efp_oracle, enumerate_asms, minus_one_histogram, weighted_count};
use asmshape::{Case, ModelParams};

use crate::args::{
    ArcticArgs, AreaArgs, EfpArgs, EnumerateArgs, Format, HpolyArgs, Method, SampleArgs,
};
use crate::svg::Svg;
use crate::{CliError, Output};

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

fn cases(case: &str, all: bool) -> Result<Vec<Case>, CliError> {
    Ok(if all {
        Case::ALL.to_vec()
    } else {
        vec![case.parse()?]
    })
}

const COLOURS: [&str; 3] = ["#c0392b", "#2471a3", "#1e8449"];

pub fn enumerate(a: &EnumerateArgs) -> Result<Output, CliError> {
    let q: Q = parse_q(&a.q)?;
    let count = weighted_count(a.n, &q)?;
    let hist = minus_one_histogram(a.n)?;
    match a.format {
        Format::Json => {
            let mut v = json!({
                "n": a.n,
                "q": fmt_q(&q),
                "count": fmt_q(&count),
                "by_minus_ones": hist,
            });
            if a.list {
                let all: Vec<_> = enumerate_asms(a.n)?.collect();
                v["matrices"] = serde_json::to_value(all).map_err(CliError::internal)?;
            }
            Ok(Output::Json(v))
        }
        Format::Csv => {
            let mut s = String::from("minus_ones,count\n");
            for (k, c) in hist.iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            Ok(Output::Text(s))
        }
        f => Err(unsupported("enumerate", f)),
    }
}

pub fn efp(a: &EfpArgs) -> Result<Output, CliError> {
    let q: Q = parse_q(&a.q)?;
    let points: Vec<(usize, usize)> = if a.batch {
        (1..=a.n)
            .flat_map(|r| (1..=a.n).map(move |s| (r, s)))
            .collect()
    } else {
        match (a.r, a.s) {
            (Some(r), Some(s)) => vec![(r, s)],
            _ => return Err(CliError::Usage("need --r and --s, or --batch".into())),
        }
    };
    let mut records = Vec::with_capacity(points.len());
    for (r, s) in points {
        let query = EfpQuery::new(a.n, r, s, ModelParams::from_q(q.clone()))?;
        let residue = match a.method {
            Method::Oracle => None,
            _ => Some(efp_residue(&query)?),
        };
        let oracle = match a.method {
            Method::Residue => None,
            _ => Some(efp_oracle(a.n, r, s, &q)?),
        };
        records.push(EfpRecord::new(&query, residue.as_ref(), oracle.as_ref()));
    }
    let bad = records.iter().filter(|r| r.matches == Some(false)).count();
    let out = match a.format {
        Format::Json => Output::Json(json!({ "records": records })),
        Format::Csv => {
            let mut s = String::from("n,r,s,q,efp,oracle,match\n");
            for r in &records {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.n,
                    r.r,
                    r.s,
                    r.q,
                    r.efp.as_deref().unwrap_or(""),
                    r.oracle.as_deref().unwrap_or(""),
                    r.matches.map(|m| m.to_string()).unwrap_or_default()
                ));
            }
            Output::Text(s)
        }
        f => return Err(unsupported("efp", f)),
    };
    if bad > 0 {
        Err(CliError::Mismatch(
            out,
            format!("{bad} of {} values disagree", records.len()),
        ))
    } else {
        Ok(out)
    }
}

fn curve_arcs(case: Case, samples: usize, full: bool) -> Result<Vec<Vec<ArcticPoint>>, CliError> {
    let quarter = curve_points(case, samples)?;
    if !full {
        return Ok(vec![quarter]);
    }
    let coords: Vec<ScaledCoords> = quarter
        .iter()
        .map(|p| ScaledCoords { x: p.x, y: p.y })
        .collect();
    Ok(full_curve(&coords)
        .into_iter()
        .map(|arc| {
            arc.iter()
                .zip(&quarter)
                .map(|(c, p)| ArcticPoint {
                    omega: p.omega,
                    x: c.x,
                    y: c.y,
                })
                .collect()
        })
        .collect())
}

/// Implicit-equation residuals on the original quarter; the mirrored arcs
/// share them.
fn residuals(case: Case, quarter: &[ArcticPoint]) -> Result<Vec<f64>, CliError> {
    quarter
        .iter()
        .map(|p| Ok(implicit_residual(case, ScaledCoords { x: p.x, y: p.y })?))
        .collect()
}

fn draw_curves(svg: &mut Svg, cases: &[Case], samples: usize, full: bool) -> Result<(), CliError> {
    for &case in cases {
        let colour = COLOURS[case.q() as usize - 1];
        for (k, arc) in curve_arcs(case, samples, full)?.iter().enumerate() {
            let pts: Vec<(f64, f64)> = arc.iter().map(|p| (p.x, p.y)).collect();
            svg.polyline(&pts, colour, 2.0, &format!("{case}-{k}"));
        }
    }
    Ok(())
}

pub fn arctic(a: &ArcticArgs, provenance: &str) -> Result<Output, CliError> {
    let cases = cases(&a.case, a.all)?;
    match a.format {
        Format::Svg => {
            let mut svg = Svg::new(600.0);
            svg.comment(provenance);
            draw_curves(&mut svg, &cases, a.samples, a.full)?;
            Ok(Output::Svg(svg.finish()))
        }
        Format::Csv => {
            let mut s = String::from("case,arc,omega,x,y,residual\n");
            for &case in &cases {
                let arcs = curve_arcs(case, a.samples, a.full)?;
                let res = residuals(case, &arcs[0])?;
                for (k, arc) in arcs.iter().enumerate() {
                    for (p, r) in arc.iter().zip(&res) {
                        s.push_str(&format!("{case},{k},{},{},{},{:e}\n", p.omega, p.x, p.y, r));
                    }
                }
            }
            Ok(Output::Text(s))
        }
        Format::Json => {
            let mut curves = Vec::new();
            for &case in &cases {
                let arcs = curve_arcs(case, a.samples, a.full)?;
                let worst = residuals(case, &arcs[0])?
                    .iter()
                    .fold(0.0f64, |m, r| m.max(r.abs()));
                curves.push(json!({ "case": case, "arcs": arcs, "max_residual": worst }));
            }
            Ok(Output::Json(json!({ "curves": curves })))
        }
    }
}

pub fn sample(a: &SampleArgs, provenance: &str) -> Result<Output, CliError> {
    let q: Q = parse_q(&a.q)?;
    let mut cfg = ChainConfig::new(a.n, q.clone(), a.seed);
    if let Some(b) = a.burnin {
        cfg.sweeps_burnin = b;
    }
    cfg.sweeps_between = a.between;
    cfg.n_samples = a.samples;
    cfg.chains = a.chains;
    cfg.allow_large = a.allow_large;
    cfg.validate()?;
    if let Some(path) = &a.snapshot {
        let mut chain = Chain::new(a.n, &q, a.seed, 0);
        chain.sweeps(cfg.sweeps_burnin);
        let header = SnapshotHeader {
            n: a.n,
            q: fmt_q(&q),
            seed: a.seed,
            sweep: chain.sweeps,
        };
        fs::write(path, write_snapshot(&header, &chain.state)?)?;
    }
    if a.chi_square {
        let rep = chain_chi_square(&cfg)?;
        return match a.format {
            Format::Json => Ok(Output::Json(json!({ "chi_square": rep }))),
            f => Err(unsupported("sample --chi-square", f)),
        };
    }
    let field = sample_density(&cfg)?;
    let case = ModelParams::from_q(q.clone()).case();
    let boundary = empirical_boundary(&field, a.threshold)?;
    match a.format {
        Format::Csv => Ok(Output::Text(field.to_csv())),
        Format::Json => {
            let distance = match case {
                Some(c) => Some(mean_distance_to_curve(&boundary, &ArcticCurve::new(c))?),
                None => None,
            };
            Ok(Output::Json(json!({
                "experimental": cfg.experimental(),
                "samples": field.samples,
                "asymmetry": field.asymmetry(),
                "boundary": boundary,
                "mean_distance_to_curve": distance,
            })))
        }
        Format::Svg => {
            let mut svg = Svg::new(640.0);
            svg.comment(provenance);
            let h = 1.0 / a.n as f64;
            for i in 0..a.n {
                for j in 0..a.n {
                    let d = field.c_mean(i, j);
                    if d > 0.0 {
                        svg.rect(j as f64 * h, i as f64 * h, h, h, "#333333", d);
                    }
                }
            }
            if let Some(c) = case {
                draw_curves(&mut svg, &[c], 200, true)?;
            }
            let pts: Vec<(f64, f64)> = boundary.points.iter().map(|p| (p.x, p.y)).collect();
            svg.polyline(&pts, "#f39c12", 1.5, "empirical");
            Ok(Output::Svg(svg.finish()))
        }
    }
}

pub fn hpoly(a: &HpolyArgs) -> Result<Output, CliError> {
    let case: Case = a.case.parse()?;
    let p = h_poly(a.n, case)?;
    let coeffs: Vec<Q> = (0..a.n).map(|k| p.coeff(k)).collect();
    match a.format {
        Format::Json => Ok(Output::Json(json!({
            "n": a.n,
            "case": case,
            "coeffs": coeffs.iter().map(fmt_q).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut s = String::from("r,value,approx\n");
            for (k, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("{},{},{}\n", k + 1, fmt_q(c), to_f64(c)));
            }
            Ok(Output::Text(s))
        }
        f => Err(unsupported("hpoly", f)),
    }
}

pub fn area(a: &AreaArgs) -> Result<Output, CliError> {
    let mut reports = Vec::new();
    for case in cases(&a.case, a.all)? {
        reports.push(temperate_area(case)?);
    }
    Ok(Output::Json(json!({ "areas": reports })))
}

pub fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}
