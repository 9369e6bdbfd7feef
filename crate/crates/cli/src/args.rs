use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "asmshape",
    version,
    about = "Alternating sign matrices, emptiness formation and limit shapes"
)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// JSON file whose keys override the command-line flags.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count ASMs weighted by q^(number of -1 entries).
    Enumerate(EnumerateArgs),
    /// Emptiness formation probability, by residues, enumeration or both.
    Efp(EfpArgs),
    /// Arctic curve samples or an SVG of the limit shapes.
    Arctic(ArcticArgs),
    /// Markov-chain density field and boundary comparison.
    Sample(SampleArgs),
    /// Coefficients of the boundary generating function.
    Hpoly(HpolyArgs),
    /// Area of the region inside the arctic curve.
    Area(AreaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Residue,
    Both,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "1")]
    pub q: String,
    /// Include every matrix in the output.
    #[arg(long)]
    #[serde(default)]
    pub list: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct EfpArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, default_value = "1")]
    pub q: String,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    /// Every (r, s) at this n.
    #[arg(long)]
    #[serde(default)]
    pub batch: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct ArcticArgs {
    #[arg(long, default_value = "q1")]
    pub case: String,
    /// All three cases.
    #[arg(long)]
    #[serde(default)]
    pub all: bool,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Add the three mirrored arcs.
    #[arg(long)]
    #[serde(default)]
    pub full: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "1")]
    pub q: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Burn-in sweeps (default 2 n²).
    #[arg(long)]
    pub burnin: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub between: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub chains: usize,
    /// Threshold on the -1 density for the boundary.
    #[arg(long, default_value_t = 0.05)]
    pub threshold: f64,
    /// Chi-square test against exact weights (small n only).
    #[arg(long)]
    #[serde(default)]
    pub chi_square: bool,
    /// Also write a snapshot of chain 0 at the end of burn-in.
    #[arg(long)]
    pub snapshot: Option<std::path::PathBuf>,
    /// Permit n above the sampler bound.
    #[arg(long)]
    #[serde(default)]
    pub allow_large: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct HpolyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "q1")]
    pub case: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct AreaArgs {
    #[arg(long, default_value = "q1")]
    pub case: String,
    #[arg(long)]
    #[serde(default)]
    pub all: bool,
}
