use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asmshape"))
        .args(args)
        .env_remove("ASM_MAX_N")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("asmshape-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate", "--n", "3", "--q", "1"])["count"], "7");
    assert_eq!(json(&["enumerate", "--n", "1", "--q", "3"])["count"], "1");
    assert_eq!(json(&["enumerate", "--n", "3", "--q", "2"])["count"], "8");
    let v = json(&["enumerate", "--n", "3", "--list"]);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 7);
    assert_eq!(v["provenance"]["config"]["n"], 3);
}

#[test]
fn bound_refusal_is_exit_two() {
    let out = run(&["enumerate", "--n", "12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ASM_MAX_N"));
    assert_eq!(
        run(&["efp", "--n", "3", "--r", "4", "--s", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["arctic", "--case", "q7"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
}

#[test]
fn efp_both_methods_agree() {
    let v = json(&["efp", "--n", "4", "--r", "2", "--s", "2", "--q", "1"]);
    assert_eq!(v["records"][0]["match"], true);
    let v = json(&[
        "efp", "--n", "4", "--r", "4", "--s", "3", "--method", "residue",
    ]);
    assert_eq!(v["records"][0]["efp"], "1");
    let v = json(&["efp", "--n", "5", "--q", "3", "--batch"]);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 25);
    assert!(recs.iter().all(|r| r["match"] == true));
}

#[test]
fn arctic_endpoints_and_residuals() {
    let csv = text(&["arctic", "--case", "q2", "--samples", "2"]);
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        rows,
        [
            "case,arc,omega,x,y,residual",
            "q2,0,1,0.5,0,0e0",
            "q2,0,inf,0,0.5,0e0"
        ]
    );
    let v = json(&[
        "arctic",
        "--all",
        "--samples",
        "50",
        "--format",
        "json",
        "--full",
    ]);
    for c in v["curves"].as_array().unwrap() {
        assert_eq!(c["arcs"].as_array().unwrap().len(), 4);
        assert!(c["max_residual"].as_f64().unwrap() <= 1e-10);
    }
}

#[test]
fn arctic_svg_nests_curves() {
    let svg = text(&["arctic", "--all", "--format", "svg", "--samples", "40"]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    // x of each curve at its middle sample, in pixels
    let mid = |case: &str| -> f64 {
        let tag = format!("id=\"{case}-0\" d=\"");
        let start = svg.find(&tag).unwrap() + tag.len();
        let d = &svg[start..start + svg[start..].find('"').unwrap()];
        let pts: Vec<&str> = d.split(" L").collect();
        let p = pts[pts.len() / 2].trim_start_matches('M');
        let (x, y) = p.split_once(' ').unwrap();
        x.parse::<f64>().unwrap().hypot(y.parse::<f64>().unwrap())
    };
    // distance from the frozen corner shrinks as q grows
    assert!(mid("q1") < mid("q2") && mid("q2") < mid("q3"));
}

#[test]
fn sample_is_reproducible() {
    let args = [
        "sample",
        "--n",
        "8",
        "--q",
        "2",
        "--seed",
        "5",
        "--samples",
        "50",
        "--burnin",
        "50",
    ];
    let a = text(&args);
    let b = text(&args);
    assert_eq!(a, b);
    assert!(a.lines().nth(1).unwrap() == "i,j,c_density,minus_density");
    assert_eq!(a.lines().count(), 2 + 64);
}

#[test]
fn sample_chi_square_small() {
    let v = json(&[
        "sample",
        "--n",
        "4",
        "--q",
        "3",
        "--seed",
        "8",
        "--samples",
        "40000",
        "--between",
        "5",
        "--burnin",
        "100",
        "--chi-square",
        "--format",
        "json",
    ]);
    assert!(v["chi_square"]["p_value"].as_f64().unwrap() > 0.01);
    assert_eq!(v["chi_square"]["states"], 42);
}

#[test]
fn sample_summary_and_snapshot() {
    let snap = scratch("snap.txt");
    let svg = scratch("density.svg");
    let v = json(&[
        "sample",
        "--n",
        "24",
        "--samples",
        "100",
        "--format",
        "json",
        "--snapshot",
        snap.to_str().unwrap(),
    ]);
    assert!(v["mean_distance_to_curve"].as_f64().unwrap() < 0.15);
    assert_eq!(v["experimental"], false);
    let s = std::fs::read_to_string(&snap).unwrap();
    assert_eq!(s.lines().count(), 1 + 25);
    assert!(s.starts_with("{\"n\":24"));
    let out = run(&[
        "sample",
        "--n",
        "12",
        "--samples",
        "20",
        "--format",
        "svg",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&svg)
        .unwrap()
        .contains("id=\"empirical\""));
}

#[test]
fn config_file_overrides_flags() {
    let cfg = scratch("cfg.json");
    std::fs::write(&cfg, r#"{"n": 4, "q": "3"}"#).unwrap();
    let v = json(&["enumerate", "--n", "2", "--config", cfg.to_str().unwrap()]);
    assert_eq!(v["count"], "90");
    assert_eq!(v["provenance"]["config"]["q"], "3");
    std::fs::write(&cfg, r#"{"n": "four"}"#).unwrap();
    assert_eq!(
        run(&["enumerate", "--n", "2", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn hpoly_and_area() {
    let v = json(&["hpoly", "--n", "3", "--case", "q2"]);
    assert_eq!(v["coeffs"], serde_json::json!(["1/4", "1/2", "1/4"]));
    let v = json(&["area", "--all", "--threads", "1"]);
    let a: Vec<f64> = v["areas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["area"].as_f64().unwrap())
        .collect();
    assert!((a[1] - std::f64::consts::FRAC_PI_4).abs() < 1e-8);
    assert!(a[0] > a[1] && a[1] > a[2]);
}
