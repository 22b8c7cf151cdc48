use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use maxmin_core::{Algorithm, SignalKind, SignalSpec};

#[derive(Debug, Parser)]
#[command(name = "maxmin", version, about = "Sliding-window max-min filters: run, benchmark, verify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Filter a value file or generated signal and print per-window extrema as CSV
    Run(RunArgs),
    /// Count comparisons and time algorithms over window widths
    Bench(BenchArgs),
    /// Randomized equivalence and bound checks against the brute-force oracle
    Verify(VerifyArgs),
    /// 2D max/min filter over a grid file
    Filter2d(Filter2dArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SignalArgs {
    /// uniform, sine, ramp_up, ramp_down, constant, piecewise or alternating
    #[arg(long)]
    pub signal: Option<SignalKind>,
    /// Signal length
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sine period in samples
    #[arg(long, default_value_t = 10_000)]
    pub period: usize,
    /// Monotone runs in a piecewise signal
    #[arg(long, default_value_t = 8)]
    pub segments: usize,
    /// Value of a constant signal
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub level: f64,
}

impl SignalArgs {
    pub fn spec(&self, default_kind: SignalKind, default_n: usize) -> SignalSpec {
        SignalSpec::new(self.signal.unwrap_or(default_kind), self.n.unwrap_or(default_n))
            .seed(self.seed)
            .period(self.period)
            .segments(self.segments)
            .level(self.level)
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Newline-separated decimal values; otherwise a signal is generated
    #[arg(long, conflicts_with_all = ["signal", "n"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub signal: SignalArgs,
    #[arg(long, default_value = "wedge")]
    pub algo: Algorithm,
    /// Window width
    #[arg(long, visible_alias = "window")]
    pub w: usize,
    /// Omit the argmax/argmin columns
    #[arg(long)]
    pub no_args: bool,
    /// Write CSV here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// An algorithm row in a benchmark report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchAlgo {
    Run(Algorithm),
    /// Bound-only row; the algorithm is not implemented.
    GilKimmel,
}

impl FromStr for BenchAlgo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "gil-kimmel" {
            return Ok(BenchAlgo::GilKimmel);
        }
        s.parse().map(BenchAlgo::Run).map_err(|e: &str| format!("{e}, or gil-kimmel"))
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub signal: SignalArgs,
    /// Comma-separated window widths
    #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
    pub w: Vec<usize>,
    /// Comma-separated algorithms; gil-kimmel adds its bound as a metadata row
    #[arg(long, value_delimiter = ',', default_value = "wedge,vhgw")]
    pub algo: Vec<BenchAlgo>,
    /// Timed runs per combination; the minimum is reported
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct Filter2dArgs {
    /// Grid file: "rows cols" then one line of values per row
    #[arg(long)]
    pub input: PathBuf,
    /// Window extent along each row (columns covered)
    #[arg(long)]
    pub w_row: usize,
    /// Window extent down each column (rows covered)
    #[arg(long)]
    pub w_col: usize,
    /// Max grid destination; both grids go to stdout when omitted
    #[arg(long)]
    pub max_output: Option<PathBuf>,
    /// Min grid destination
    #[arg(long)]
    pub min_output: Option<PathBuf>,
}
