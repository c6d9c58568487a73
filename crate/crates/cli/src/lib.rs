//! The `penta` command line: argument parsing, per-graph work and the JSON
//! run report.

mod commands;
mod report;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pentagraph::io::{read_graphs, Format, ParseError};
use pentagraph::limits::DEFAULT_MAX_STEPS;
use pentagraph::{Graph, Priority};
use thiserror::Error;

pub use report::{strip_timing, Budget, InputDescriptor, RunReport, Timing};

/// Exit status: every graph is a pentagraph, or the command succeeded.
pub const EXIT_OK: i32 = 0;
/// Some graph is not a pentagraph, or a checked property failed.
pub const EXIT_NO: i32 = 1;
/// Some search ran out of budget before reaching a verdict.
pub const EXIT_INDETERMINATE: i32 = 2;
/// Input, output or usage error.
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "penta", version, about = "Recognize, decompose and colour pentagraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input format; guessed from the file extension, graph6 otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    /// Write the report (or the corpus, for `corpus`) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Step budget per search.
    #[arg(long, global = true, env = "PENTA_MAX_STEPS", default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: u64,
    /// Worker threads for per-graph work; defaults to all cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output kind; DOT is available for the colouring commands.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Leave the timing field out of the report.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide membership, with a witness for rejected graphs.
    Recognize {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
    },
    /// Three-colour by recursive decomposition.
    Color3 {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
        /// Order in which decompositions are tried.
        #[arg(long, value_enum, default_value_t = PriorityArg::Cheap)]
        priority: PriorityArg,
    },
    /// Four-colour by distance layers.
    Color4 {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
    },
    /// Find a decomposition outcome with its certificate.
    Decompose {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
        /// Order in which decompositions are tried.
        #[arg(long, value_enum, default_value_t = PriorityArg::Cheap)]
        priority: PriorityArg,
    },
    /// Generate a corpus of pentagraphs in graph6.
    Corpus(CorpusArgs),
    /// Check structural properties over a corpus.
    Verify {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
        /// Properties to check.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Property::T12, Property::T13, Property::T25, Property::T31])]
        which: Vec<Property>,
        /// Order in which decompositions are tried.
        #[arg(long, value_enum, default_value_t = PriorityArg::Cheap)]
        priority: PriorityArg,
    },
    /// Brute-force chromatic number.
    Oracle {
        /// Graph file; `-` reads stdin.
        input: PathBuf,
        /// Largest number of colours tried.
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Number of graphs (random mode) or an upper bound (exhaustive mode).
    #[arg(long)]
    pub count: Option<usize>,
    /// Lower end of the per-graph edge probability range.
    #[arg(long, default_value_t = 0.5)]
    pub p_min: f64,
    /// Upper end of the per-graph edge probability range.
    #[arg(long, default_value_t = 1.0)]
    pub p_max: f64,
    /// Exhaustive mode: every labeled graph instead of one per isomorphism class.
    #[arg(long)]
    pub labeled: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    G6,
    Dimacs,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PriorityArg {
    Cheap,
    CutsetsFirst,
}

impl From<PriorityArg> for Priority {
    fn from(p: PriorityArg) -> Self {
        match p {
            PriorityArg::Cheap => Priority::Cheap,
            PriorityArg::CutsetsFirst => Priority::CutsetsFirst,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    /// Four colours from distance layers, every layer bipartite.
    T12,
    /// Every pentagraph has a decomposition with a checkable certificate.
    T13,
    /// An induced P2 (outside the Petersen family) gives a P3-cutset or a
    /// strong parity star-cutset.
    T25,
    /// In P2-free graphs, two local jumps over a pentagon with one common
    /// end leave a short jump across it.
    T31,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
}

impl From<pentagraph::corpus::CorpusError> for CliError {
    fn from(e: pentagraph::corpus::CorpusError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Graphs read from `path` (`-` is stdin) with the format that was used.
pub fn load(path: &Path, format: Option<InputFormat>) -> Result<(Vec<Graph>, InputFormat), CliError> {
    let name = path.display().to_string();
    let io = |source| CliError::Io { path: name.clone(), source };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    let format = format
        .or_else(|| match Format::from_path(path)? {
            Format::Graph6 => Some(InputFormat::G6),
            Format::Dimacs => Some(InputFormat::Dimacs),
            Format::Json => Some(InputFormat::Json),
        })
        .unwrap_or(InputFormat::G6);
    let lib_format = match format {
        InputFormat::G6 => Format::Graph6,
        InputFormat::Dimacs => Format::Dimacs,
        InputFormat::Json => Format::Json,
    };
    let graphs = read_graphs(&text, lib_format).map_err(|source| CliError::Parse { path: name.clone(), source })?;
    Ok((graphs, format))
}

/// Output of one run.
#[derive(Debug)]
pub struct Outcome {
    /// The report, DOT text, or generated corpus; goes to `--out` or stdout.
    pub text: String,
    /// The report of a `corpus` run; goes to stdout when the corpus went to
    /// `--out`, to stderr otherwise.
    pub side_report: Option<String>,
    pub exit_code: i32,
}

/// Runs a parsed command line. Errors map to [`EXIT_ERROR`].
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| commands::dispatch(cli))
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
