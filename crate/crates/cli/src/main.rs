mod args;
mod commands;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use args::{Cli, Command};

pub enum Output {
    Json(Value),
    Text(String),
    Svg(String),
}

pub enum CliError {
    Core(asmshape::Error),
    Usage(String),
    Internal(String),
    /// Results were produced but failed verification.
    Mismatch(Output, String),
}

impl CliError {
    pub fn internal(e: impl std::fmt::Display) -> Self {
        CliError::Internal(e.to_string())
    }

    fn code(&self) -> u8 {
        use asmshape::Error as E;
        match self {
            CliError::Core(
                E::InvalidAsm(_)
                | E::InvalidConfig { .. }
                | E::InvalidHeight(_)
                | E::BoundExceeded { .. }
                | E::InvalidArgument(_)
                | E::UnsupportedParams { .. }
                | E::Parse(_),
            )
            | CliError::Usage(_) => 2,
            CliError::Mismatch(..) => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(m) | CliError::Internal(m) | CliError::Mismatch(_, m) => m.clone(),
        }
    }
}

impl From<asmshape::Error> for CliError {
    fn from(e: asmshape::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Overlays the keys of `config` on the flag values.
fn resolve<T: Serialize + DeserializeOwned>(
    flags: &T,
    config: Option<&Value>,
) -> Result<T, CliError> {
    let mut v = serde_json::to_value(flags).map_err(CliError::internal)?;
    if let (Some(Value::Object(over)), Value::Object(base)) = (config, &mut v) {
        for (k, x) in over {
            base.insert(k.clone(), x.clone());
        }
    }
    serde_json::from_value(v).map_err(|e| CliError::Usage(format!("config: {e}")))
}

fn provenance(command: &str, config: &Value) -> Value {
    json!({
        "tool": "asmshape",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": config,
        "seed": config.get("seed").cloned().unwrap_or(Value::Null),
    })
}

fn render(out: Output, prov: &Value) -> String {
    match out {
        Output::Json(mut v) => {
            if let Value::Object(m) = &mut v {
                m.insert("provenance".into(), prov.clone());
            }
            let mut s = serde_json::to_string_pretty(&v).unwrap_or_default();
            s.push('\n');
            s
        }
        Output::Text(t) => format!("# {prov}\n{t}"),
        Output::Svg(s) => s,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Provenance string and the command result.
fn run(cli: Cli) -> Result<(String, Result<Output, CliError>), CliError> {
    let config: Option<Value> = match &cli.config {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
            Some(serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config: {e}")))?)
        }
        None => None,
    };
    let cfg = config.as_ref();
    macro_rules! go {
        ($name:literal, $a:expr, |$r:ident, $p:ident| $body:expr) => {{
            let $r = resolve($a, cfg)?;
            let $p = provenance($name, &commands::to_value(&$r)).to_string();
            let _ = &$p;
            ($p.clone(), $body)
        }};
    }
    let (prov, result) = match &cli.command {
        Command::Enumerate(a) => go!("enumerate", a, |r, p| commands::enumerate(&r)),
        Command::Efp(a) => go!("efp", a, |r, p| commands::efp(&r)),
        Command::Arctic(a) => go!("arctic", a, |r, p| commands::arctic(&r, &p)),
        Command::Sample(a) => go!("sample", a, |r, p| commands::sample(&r, &p)),
        Command::Hpoly(a) => go!("hpoly", a, |r, p| commands::hpoly(&r)),
        Command::Area(a) => go!("area", a, |r, p| commands::area(&r)),
    };
    Ok((prov, result))
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    if let Some(Ok(Value::Object(m))) = cli
        .config
        .as_ref()
        .map(|p| fs::read_to_string(p).map(|t| serde_json::from_str::<Value>(&t)))
        .and_then(|r| r.ok())
    {
        if let Some(t) = m.get("threads").and_then(Value::as_u64) {
            cli.threads = Some(t as usize);
        }
        if let Some(o) = m.get("out").and_then(Value::as_str) {
            cli.out = Some(o.into());
        }
    }
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let out = cli.out.clone();
    let write = |prov: &str, o: Output| -> Result<(), CliError> {
        let prov: Value = serde_json::from_str(prov).map_err(CliError::internal)?;
        emit(&render(o, &prov), out.as_ref())
    };
    match run(cli) {
        Ok((prov, Ok(o))) => match write(&prov, o) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {}", e.message());
                ExitCode::from(e.code())
            }
        },
        Ok((prov, Err(CliError::Mismatch(o, msg)))) => {
            eprintln!("error: {msg}");
            // the disagreeing values are still written for inspection
            let _ = write(&prov, o);
            ExitCode::from(3)
        }
        Ok((_, Err(e))) | Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
