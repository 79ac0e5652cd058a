//! Batch front end: ingest matrices or invoke named examples, run the
//! checker/dynamics pipelines, and emit machine-readable reports and CSV
//! plot data.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 numerical failure,
//! 3 a property was violated under `--assert`.

mod commands;
mod input;
mod report;

use clap::{Args, Parser, Subcommand};

use logconvex::props::DEFAULT_SEED;

#[derive(Parser)]
#[command(
    name = "logconvex",
    version,
    about = "Operator property checks and decay diagnostics for non-selfadjoint matrices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all property checks (accretivity grades, hyponormality,
    /// accretive square, sector, log-convexity criterion).
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Evolve u(t) = e^{-tA} u0, emit the height series and convexity
    /// verdicts.
    Evolve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        config: ConfigArgs,
        /// Initial state: `e<k>` (basis vector, 1-based), "ones",
        /// "witness" (criterion minimizer), or "random".
        #[arg(long, default_value = "ones")]
        u0: String,
    },
    /// Sample the numerical range boundary as CSV plot data.
    Range {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Operator-norm series E(t) with the E'(0) / spectral-abscissa summary.
    Norms {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        config: ConfigArgs,
        /// Also tabulate h(t) for this initial state alongside E(t).
        #[arg(long)]
        u0: Option<String>,
    },
    /// Materialize a named example as a matrix JSON file.
    Emit {
        #[command(flatten)]
        input: InputArgs,
        /// Destination path (stdout if omitted).
        #[arg(long)]
        out: Option<String>,
    },
}

/// Operator source: a matrix file or a named generator.
#[derive(Args, Clone)]
struct InputArgs {
    /// Matrix JSON file ({"n": ..., "entries": [[[re, im], ...], ...]}).
    #[arg(long, conflicts_with = "example")]
    matrix: Option<String>,
    /// Named example: showex2 | showex | adr | contrast | random.
    #[arg(long)]
    example: Option<String>,
    /// showex2: eigenvalue scale lambda (> 0).
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// showex2 / showex: sector parameter delta.
    #[arg(long, default_value_t = 0.5)]
    delta: f64,
    /// showex: smaller eigenvalue of the Hermitian part.
    #[arg(long, default_value_t = 1.0)]
    lambda1: f64,
    /// showex: larger eigenvalue of the Hermitian part.
    #[arg(long, default_value_t = 4.0)]
    lambda2: f64,
    /// showex: ambient dimension (>= 2).
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// adr: left endpoint.
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// adr: right endpoint.
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// adr: interior grid size (matrix has n+1 unknowns).
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// random: family kind (normal-accretive | strictly-accretive |
    /// sectorial-quarter | unrestricted).
    #[arg(long, default_value = "unrestricted")]
    kind: String,
    /// random: matrix dimension.
    #[arg(long, default_value_t = 4)]
    size: usize,
}

/// Tolerances, seed, grid and sinks.
#[derive(Args, Clone)]
struct ConfigArgs {
    /// Seed for every randomized stage (deterministic by default).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol_rel: f64,
    /// Time horizon (default: 10 / max(m(A), 0.1)).
    #[arg(long)]
    t_max: Option<f64>,
    /// Grid points (>= 3).
    #[arg(long, default_value_t = 200)]
    n_points: usize,
    /// Grid clustering: hybrid (geometric near 0, then linear) or uniform.
    #[arg(long, default_value = "hybrid")]
    grid: String,
    /// Angle count for the numerical range sweep.
    #[arg(long, default_value_t = 64)]
    angles: usize,
    /// Criterion optimizer: seeded sample count.
    #[arg(long, default_value_t = 2048)]
    samples: usize,
    /// Criterion optimizer: gradient-descent starts.
    #[arg(long, default_value_t = 16)]
    starts: usize,
    /// Criterion optimizer: iteration cap per start.
    #[arg(long, default_value_t = 500)]
    iters: usize,
    /// Report sink (stdout if omitted).
    #[arg(long)]
    out: Option<String>,
    /// Series CSV sink (evolve/norms: omitted = no CSV; range: stdout).
    #[arg(long)]
    csv: Option<String>,
    /// Exit 3 when any checked property is violated.
    #[arg(long)]
    assert: bool,
    /// Omit the timestamp so identical runs are byte-identical.
    #[arg(long)]
    no_timestamp: bool,
}

/// Process-level failure classification.
enum Failure {
    Usage(String),
    Numerical(String),
    Violated,
}

impl From<logconvex::Error> for Failure {
    fn from(e: logconvex::Error) -> Self {
        match e {
            logconvex::Error::Domain(_) | logconvex::Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            logconvex::Error::NonConvergence { .. } | logconvex::Error::Numerical(_) => {
                Failure::Numerical(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("json error: {e}"))
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version are successful exits; everything else is usage.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };

    let outcome = match cli.command {
        Command::Check { input, config } => commands::cmd_check(&input, &config),
        Command::Evolve { input, config, u0 } => commands::cmd_evolve(&input, &config, &u0),
        Command::Range { input, config } => commands::cmd_range(&input, &config),
        Command::Norms { input, config, u0 } => commands::cmd_norms(&input, &config, u0.as_deref()),
        Command::Emit { input, out } => commands::cmd_emit(&input, out.as_deref()),
    };

    match outcome {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(Failure::Violated) => {
            std::process::exit(3);
        }
    }
}
