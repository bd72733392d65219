//! The `lapcert` command line.
//!
//! Exit codes: 0 on success, 1 on usage or operational errors (including any
//! unparsable input graph), 2 when a counterexample was found.

mod commands;
mod format;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

pub use commands::{counterexample_exit_code, parse_s_range, read_graphs, InputError, InputGraph};
pub use format::sig12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lapcert", version, about = "Laplacian spectra, matching certificates and spectral bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectrum, matching certificate, balloons and factor-criticality per graph.
    Analyze(AnalyzeArgs),
    /// One verdict row per graph, theorem and grid point.
    Verify(VerifyArgs),
    /// Corpus-wide counterexample search with a summary report.
    Hunt(VerifyArgs),
    /// Tabulate a tightness family over a range of s.
    Sweep(SweepArgs),
    /// Write generated graphs as graph6 lines.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list if the first line is "n m", graph6 lines otherwise.
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Input file ("-" for stdin).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Output file (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Comma-separated theorem tags (T2,T3,COR,T4,T5,T6,T7) or "all" (the default).
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub theorems: Option<Vec<String>>,
    /// r values for the matching bound.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5")]
    pub r_grid: Vec<f64>,
    /// r values for the balloon bound, or "auto" for the per-graph maximal grid.
    #[arg(long, default_value = "auto")]
    pub t5_grid: String,
    /// k values for the spanning-tree bound.
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    pub k_grid: Vec<usize>,
    /// Oracle caps, e.g. "cycle-space=24,q=16,tree=16".
    #[arg(long)]
    pub caps: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Bipartite,
    Join,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: SweepFamily,
    #[arg(long)]
    pub r: f64,
    #[arg(long)]
    pub a: f64,
    /// Inclusive range "lo..hi" (or a single value).
    #[arg(long)]
    pub s_range: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Two-column "s r-ratio" file for plotting.
    #[arg(long)]
    pub plot_data: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// complete_bipartite | join_clique_independent | dumbbell | star | path | cycle |
    /// complete | random | tightness | connected
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Dumbbell blocks, e.g. "C3,C5" or "K4,C3".
    #[arg(long)]
    pub blocks: Option<String>,
    /// Tightness family: bipartite | join.
    #[arg(long, value_enum)]
    pub kind: Option<SweepFamily>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub s_range: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            if !e.use_stderr() {
                let _ = write!(stdout, "{e}");
            }
            return code;
        }
    };
    match commands::dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}
