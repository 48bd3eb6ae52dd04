use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_simple::analysis::Property;
use ramsey_simple::arrowing::Budget;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "rsimple",
    version,
    about = "Ramsey simplicity experiments and certificates"
)]
pub struct Cli {
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true, env = "RSIMPLE_THREADS")]
    pub threads: Option<usize>,
    /// Record wall-clock times in reports (makes them machine dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Everything that determines a report. Embedded verbatim in every report
/// so `replay` can regenerate it.
#[derive(Clone, Debug, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Sample G(n, p).
    Sample(SampleArgs),
    /// Neighbourhood profile of the minimum-degree vertex.
    Profile(GraphArgs),
    /// Check the four well-behavedness properties.
    WbCheck(WbArgs),
    /// Monte-Carlo estimate of a G(n, p) property.
    Mc(McArgs),
    /// Build a coloured neighbourhood gadget.
    GammaBuild(GammaBuildArgs),
    /// Check the degree and cover conditions of a gadget.
    GammaVerify(GammaVerifyArgs),
    /// Decide whether a host arrows a target.
    Arrow(ArrowArgs),
    /// Check minimal Ramsey-ness by single deletions.
    Minimal(ArrowArgs),
    /// Necessity of the neighbourhood cover condition at a vertex.
    Necessity(NecessityArgs),
    /// Extend a colouring of G - w for triangle-covered targets.
    RefuteTriangle(RefuteArgs),
    /// Build the forest host graph.
    SzzBuild(SzzArgs),
    /// Forest-free colouring of the host without its pendant vertices.
    SzzColour(SzzArgs),
    /// Find monochromatic forest copies in colourings of the host.
    SzzMono(SzzMonoArgs),
    /// Bounds on the simplicity threshold from a neighbourhood profile.
    Bounds(BoundsArgs),
    /// Leading-order threshold curves over a p grid (CSV).
    Curves(CurvesArgs),
    /// Sparse vertex set with bounded induced degree.
    Kogan(KoganArgs),
    /// Re-run the configuration embedded in a report.
    #[serde(skip)]
    Replay(ReplayArgs),
}

/// A graph from a file (edge list or graph6) or sampled from G(n, p).
#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GraphSource {
    #[arg(long, conflicts_with_all = ["n", "p"])]
    pub graph: Option<PathBuf>,
    #[arg(long, requires = "p")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub p: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub seed: u64,
    /// Write the sampled graph as an edge list.
    #[arg(long)]
    pub write: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Required when sampling.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct WbArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Seeds sampling of the graph and of cut-sets.
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 2000)]
    pub w4_samples: usize,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct McArgs {
    #[arg(long, value_parser = parse_property)]
    pub property: Property,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    /// Lower confidence bound that counts as confirmation.
    #[arg(long, default_value_t = 0.9)]
    pub threshold: f64,
    /// Also write the estimate as a CSV row.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: ramsey_simple::Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaKind {
    Affine,
    Random,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GammaBuildArgs {
    #[arg(long, value_enum)]
    pub kind: GammaKind,
    #[arg(long)]
    pub delta: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, default_value_t = 2)]
    pub lambda: usize,
    #[arg(long, default_value_t = 0.04)]
    pub eps: f64,
    /// Use this prime for the affine plane instead of the feasibility rule.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub write: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct GammaVerifyArgs {
    /// Affine or coloured-graph file.
    #[arg(long)]
    pub gamma: PathBuf,
    #[arg(long)]
    pub forest: PathBuf,
    #[arg(long)]
    pub delta: usize,
    /// Sample this many subsets instead of enumerating all of them.
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct BudgetArgs {
    #[arg(long, env = "RSIMPLE_MAX_NODES", default_value_t = Budget::default().max_nodes)]
    pub max_nodes: u64,
    #[arg(long, env = "RSIMPLE_MAX_EDGES", default_value_t = Budget::default().max_edges)]
    pub max_edges: usize,
    #[arg(long, env = "RSIMPLE_MAX_MILLIS")]
    pub max_millis: Option<u64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.max_nodes,
            max_millis: self.max_millis,
            max_edges: self.max_edges,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct ArrowArgs {
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long)]
    pub q: usize,
    /// Recorded only; the search is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct NecessityArgs {
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub w: usize,
    /// H-free colouring of G - w; searched for when absent.
    #[arg(long)]
    pub colouring: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct RefuteArgs {
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long)]
    pub w: usize,
    #[arg(long)]
    pub colouring: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct SzzArgs {
    #[arg(long)]
    pub forest: PathBuf,
    #[arg(long)]
    pub q: usize,
    #[arg(long, env = "RSIMPLE_MAX_HOST_EDGES", default_value_t = ramsey_simple::forest::DEFAULT_MAX_EDGES)]
    pub max_host_edges: u64,
    #[arg(long)]
    pub write: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct SzzMonoArgs {
    #[arg(long)]
    pub forest: PathBuf,
    #[arg(long)]
    pub q: usize,
    /// `random`, `balanced`, or a coloured-graph file.
    #[arg(long, default_value = "random")]
    pub colouring: String,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, env = "RSIMPLE_MAX_HOST_EDGES", default_value_t = ramsey_simple::forest::DEFAULT_MAX_EDGES)]
    pub max_host_edges: u64,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 0.04)]
    pub eps: f64,
    #[arg(long, default_value_t = 80.0)]
    pub log_constant: f64,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct CurvesArgs {
    #[arg(long)]
    pub n: u64,
    /// `geometric:a:b:count`, `linear:a:b:count` or `p1,p2,...`.
    #[arg(long)]
    pub p_grid: String,
    #[arg(long, default_value_t = 0.001)]
    pub margin: f64,
    #[arg(long, default_value_t = 20)]
    pub k_max: usize,
    /// CSV output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Args, Serialize, Deserialize)]
pub struct KoganArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 64)]
    pub restarts: u64,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Args)]
pub struct ReplayArgs {
    #[arg(id = "REPORT_FILE", value_name = "REPORT")]
    pub report: PathBuf,
    /// Exit 1 unless the regenerated report is byte-identical.
    #[arg(long)]
    pub check: bool,
}
