use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edgeideal::{Error, Field, Settings};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "edgeideal", version, about = "Regularity, h-polynomials and Betti numbers of edge ideals")]
struct Cli {
    /// Coefficient field for homology: gf2, a prime such as 3, or q.
    #[arg(long, global = true, env = "EDGEIDEAL_FIELD", default_value = "gf2")]
    field: Field,

    /// Largest vertex count for the 2^n subset scan (Betti numbers, reg).
    #[arg(long, global = true, default_value_t = edgeideal::invariants::DEFAULT_DESK_CAP)]
    cap: usize,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "EDGEIDEAL_WORKERS")]
    workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Kdd,
    Star,
    Matching,
    Ribbon,
    Gr,
    Realize,
    Cone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphOutput {
    Graph6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every invariant of one graph; exit 1 if a proven bound fails.
    Invariants {
        #[arg(long, required_unless_present = "edges", conflicts_with = "edges")]
        graph6: Option<String>,
        /// Edge-list file: vertex count on the first line, then `u v` lines.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Build a graph family; `--check` compares against its expected invariants.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short = 'r')]
        r: Option<usize>,
        #[arg(short = 'd')]
        d: Option<usize>,
        /// Vertex count (star).
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Edge count (matching).
        #[arg(short = 'm')]
        m: Option<usize>,
        /// Base graph for `cone`, as graph6.
        #[arg(long)]
        base: Option<String>,
        /// Cone subset for `cone`, e.g. "0,1,4".
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphOutput::Graph6)]
        output: GraphOutput,
        #[arg(long)]
        check: bool,
    },
    /// (reg, deg h) table over all graphs on n vertices, or over a corpus.
    Enumerate {
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        /// graph6 corpus, one graph per line, instead of generating.
        #[arg(long, conflicts_with = "n")]
        input: Option<PathBuf>,
        /// Keep connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Pairs that must not occur, e.g. "3,1;4,1;4,2".
        #[arg(long)]
        expect_absent: Option<String>,
        /// No progress on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Invariant reports and checks over a graph6 corpus.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated: reg-bound, sum-bound, hochster-hilbert, lemma-additivity.
        #[arg(long, default_value = "reg-bound,sum-bound,hochster-hilbert,lemma-additivity")]
        checks: String,
    },
    /// Seeded random graphs G(n, p) as graph6 lines.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::CapExceeded { .. } | Error::Overflow(_)) => 3,
            CliError::Core(Error::BoundViolation { .. } | Error::PureResolutionViolation { .. }) => 1,
            CliError::Check(_) => 1,
            CliError::Core(_) | CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }

    fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(Error::CapExceeded { .. }) => {
                Some("raise --cap to allow it; every extra vertex doubles the work")
            }
            _ => None,
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub struct Config {
    pub settings: Settings,
    pub format: Format,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if cli.cap > edgeideal::MAX_VERTICES {
        return Err(CliError::Usage(format!("--cap must be at most {}", edgeideal::MAX_VERTICES)));
    }
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        // Fails only if the pool already exists, which it cannot here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let config = Config { settings: Settings { field: cli.field, desk_cap: cli.cap }, format: cli.format };
    match cli.command {
        Command::Invariants { graph6, edges } => commands::invariants(&config, graph6, edges),
        Command::Construct { family, r, d, n, m, base, subset, output, check } => {
            let params = commands::FamilyParams { family, r, d, n, m, base, subset };
            commands::construct(&config, &params, output, check)
        }
        Command::Enumerate { n, input, connected, expect_absent, quiet } => {
            commands::enumerate(&config, n, input, connected, expect_absent, quiet)
        }
        Command::Verify { input, checks } => commands::verify(&config, &input, &checks),
        Command::Sample { n, count, seed, p } => commands::sample(n, count, seed, p),
    }
}

/// Die quietly on a closed pipe (`edgeideal ... | head`) instead of panicking in `println!`.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
