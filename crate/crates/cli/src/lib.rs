//! Command-line surface for `interval_spectrum`.
//!
//! Every subcommand builds a JSON report; `--pretty` renders that same JSON
//! as indented text. [`run`] is the whole program minus process plumbing,
//! so tests drive it in-process.
//!
//! Exit codes:
//! * `0`: success;
//! * `1`: usage or input error (bad flags, unreadable or malformed files);
//! * `2`: negative outcome (infeasible, not interval, failed check) under
//!   `--strict`, and any failed suite in `audit`;
//! * `3`: some search hit its limit and nothing failed, under `--strict`
//!   and in `audit`.

mod audit;
mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use interval_spectrum::solver::EdgeOrder;
use thiserror::Error;

pub use audit::{AuditConfig, CorpusSource, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Seed used by `generate` and `audit` when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0;

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "INTERVAL_SPECTRUM_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Family(#[from] interval_spectrum::families::FamilyError),
    #[error(transparent)]
    Solver(#[from] interval_spectrum::solver::SolverError),
    #[error(transparent)]
    Bounds(#[from] interval_spectrum::bounds::BoundsError),
    #[error(transparent)]
    Certify(#[from] interval_spectrum::certify::CertifyError),
    #[error("invalid audit config: {0}")]
    Config(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "interval-spectrum",
    version,
    about = "Interval edge-colorings: verify, search, bound and certify"
)]
struct Cli {
    /// Human-readable output rendered from the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Exit 2 on negative outcomes and 3 on unresolved searches.
    #[arg(long, global = true)]
    strict: bool,
    /// Also write a run manifest (inputs, digests, config, results) here.
    #[arg(long, global = true, value_name = "FILE")]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph file: edge list ("n; u-v ...") or graph6 (.g6 / .graph6).
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    /// Override the format guessed from the file extension.
    #[arg(long, value_enum)]
    graph_format: Option<FormatArg>,
}

#[derive(Debug, Clone, Args)]
struct LimitArgs {
    /// Search nodes allowed per value of t.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock budget per value of t, in milliseconds.
    #[arg(long)]
    time_limit_ms: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Bfs)]
    edge_order: OrderArg,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// path, cycle, star, fan, complete, complete_bipartite, hypercube,
    /// caterpillar or random_planar.
    #[arg(long)]
    family: String,
    /// Vertex count; first part size for complete_bipartite; dimension for
    /// hypercube.
    #[arg(long)]
    n: Option<usize>,
    /// Second part size for complete_bipartite; edge count for random_planar.
    #[arg(long)]
    m: Option<usize>,
    /// Caterpillar leaves per spine vertex, e.g. 2,0,1.
    #[arg(long, value_delimiter = ',')]
    leaves: Vec<usize>,
    /// Seed for random_planar.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Bfs,
    DegreeDesc,
    Input,
}

impl From<OrderArg> for EdgeOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Bfs => EdgeOrder::Bfs,
            OrderArg::DegreeDesc => EdgeOrder::DegreeDesc,
            OrderArg::Input => EdgeOrder::Input,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChainArg {
    Planar,
    Outerplanar,
    Auto,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a coloring file against a graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Coloring file: "t; i:c i:c ...".
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
    },
    /// Decide one t, or find the largest feasible t when --t is absent.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        t: Option<u32>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Decide every t between the lower bound and the bounds ceiling.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Class profile and the catalog of upper bounds.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        /// Include the source of every bound.
        #[arg(long)]
        explain: bool,
    },
    /// Replay the unique-color decomposition on an interval coloring.
    Certify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = ChainArg::Auto)]
        chain: ChainArg,
    },
    /// Build a family member or a seeded random planar graph.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the graph here instead of only embedding it in the report.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// Compare the solver with the known spectrum of a family member.
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Run the invariant suites over a corpus.
    Audit {
        /// JSON config {corpus: [...], limits: {...}, seed}; a built-in
        /// corpus is used when absent.
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Solve { .. } => "solve",
            Command::Spectrum { .. } => "spectrum",
            Command::Bounds { .. } => "bounds",
            Command::Certify { .. } => "certify",
            Command::Generate { .. } => "generate",
            Command::Oracle { .. } => "oracle",
            Command::Audit { .. } => "audit",
        }
    }
}

/// How a finished command came out, before `--strict` maps it to an exit
/// code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Ok,
    Unknown,
    Negative,
}

/// A finished command: its JSON payload plus what went into it.
pub struct Report {
    pub payload: serde_json::Value,
    pub verdict: Verdict,
    /// Effective configuration, recorded in the manifest.
    pub config: serde_json::Value,
    pub seed: Option<u64>,
    /// Audit exits nonzero on failures even without `--strict`.
    pub always_strict: bool,
}

/// Files read while running a command, with their SHA-256 digests.
#[derive(Default)]
pub struct Inputs {
    digests: std::collections::BTreeMap<String, String>,
}

impl Inputs {
    pub fn read(&mut self, path: &std::path::Path) -> Result<String, CliError> {
        let bytes = std::fs::read(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })?;
        self.digests
            .insert(path.display().to_string(), output::sha256_hex(&bytes));
        String::from_utf8(bytes).map_err(|_| CliError::Input {
            path: path.display().to_string(),
            message: "not valid UTF-8".into(),
        })
    }
}

fn thread_count() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn dispatch(command: &Command, inputs: &mut Inputs) -> Result<Report, CliError> {
    match command {
        Command::Verify { input, coloring } => commands::verify(input, coloring, inputs),
        Command::Solve { input, t, limits } => commands::solve(input, *t, limits, inputs),
        Command::Spectrum { input, limits } => commands::spectrum(input, limits, inputs),
        Command::Bounds { input, explain } => commands::bounds(input, *explain, inputs),
        Command::Certify {
            input,
            coloring,
            chain,
        } => commands::certify(input, coloring, *chain, inputs),
        Command::Generate {
            family,
            out,
            format,
        } => commands::generate(family, out.as_deref(), *format),
        Command::Oracle { family, limits } => commands::oracle(family, limits),
        Command::Audit { config } => audit::run(config.as_deref(), inputs),
    }
}

/// Runs the program on `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, argv, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, argv: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let report = match thread_count()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
            .install(|| dispatch(&cli.command, &mut inputs))?,
        None => dispatch(&cli.command, &mut inputs)?,
    };
    let text = if cli.pretty {
        output::render_pretty(&report.payload)
    } else {
        output::canonical_json(&report.payload)
    };
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Write {
            path: "<stdout>".into(),
            source,
        })?;
    if let Some(path) = &cli.manifest {
        let manifest = output::RunManifest {
            command: cli.command.name(),
            argv: argv.get(1..).unwrap_or_default(),
            input_digests: &inputs.digests,
            seed: report.seed,
            config: &report.config,
            tool_version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: start.elapsed().as_millis() as u64,
            results: &report.payload,
        };
        let text =
            output::canonical_json(&serde_json::to_value(&manifest).expect("manifest is JSON"));
        std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(match report.verdict {
        Verdict::Ok => EXIT_OK,
        _ if !(cli.strict || report.always_strict) => EXIT_OK,
        Verdict::Negative => EXIT_NEGATIVE,
        Verdict::Unknown => EXIT_UNKNOWN,
    })
}
