//! `polyb`: compute, enumerate and verify symmetrized poly-Bernoulli numbers,
//! Callan polynomials and alternative tableaux.

mod cache;
mod commands;
mod render;

use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "polyb",
    version,
    about = "Exact symmetrized poly-Bernoulli numbers, Callan polynomials and alternative tableaux"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    pub jobs: Option<usize>,

    /// Cache directory; overrides POLYB_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Lift the enumeration caps (n*k <= 16 for tableaux, n+k <= 10 for Callan sequences).
    #[arg(long, global = true)]
    pub unsafe_cap: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Recurrence,
    Enumeration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Bhat,
    Cpoly,
    Tpoly,
    Tpoly2,
    Symmetrized,
    Pb,
    Gandhi,
    Genocchi,
    Seki,
    Negindex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Callan,
    Barred,
    Tableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    Path,
    Show,
    Clear,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub n: Option<usize>,
    /// Negative values are accepted for `pb` only.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Evaluation point for `pb`, as `p` or `p/q` (default 0).
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<String>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Number of bars (barred sequences only).
    #[arg(long)]
    pub m: Option<usize>,
    /// Print the number of objects (the default).
    #[arg(long, conflicts_with = "list")]
    pub count: bool,
    /// Print every object in canonical order.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name, or `all`.
    pub name: String,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    #[arg(long)]
    pub max_m: Option<usize>,
    #[arg(long)]
    pub max_j: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long)]
    pub max_k: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    /// Sequence id; all vendored fixtures when omitted.
    #[arg(long)]
    pub seq: Option<String>,
    /// Entries (linear sequences) or antidiagonals (arrays) to compare.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Download the b-file from oeis.org instead of using the vendored copy.
    #[arg(long)]
    pub fetch: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one value or polynomial.
    Compute(ComputeArgs),
    /// Count or list combinatorial objects.
    Enumerate(EnumerateArgs),
    /// Check registered identities over parameter ranges.
    Verify(VerifyArgs),
    /// Compare the conjectured two-variable recurrence with tableau enumeration.
    Conjecture(ConjectureArgs),
    /// Emit an (n, k) matrix of values.
    Table(TableArgs),
    /// Check computed sequences against OEIS b-files.
    Oeis(OeisArgs),
    /// Inspect or clear the value cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or a cap violation; exit code 2.
    Usage(String),
    /// A check ran and failed; exit code 1.
    Failed,
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Failed => f.write_str("verification failed"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<polyb::Error> for CliError {
    fn from(e: polyb::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("warning: could not configure {jobs} worker threads: {e}");
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
