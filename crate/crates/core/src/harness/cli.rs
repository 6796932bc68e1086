//! Command-line front end: `classify`, `solve`, `reduce`, `sweep`, `verify`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use thiserror::Error as ThisError;

use crate::arcs::{AnnotatedSequence, MatchConstraint};
use crate::error::Error;
use crate::harness::sweep::{
    default_exhaustive_order, rows_to_csv, run_sweep, GraphSource, KPolicy, SweepConfig,
};
use crate::reductions::{check_equivalence, reduce, Graph, OracleBudget, Theorem};
use crate::solvers::{solve_with_budget, SearchBudget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lapcs",
    version,
    about = "Arc-preserving common subsequences and IS reductions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the structure level of an annotated sequence file.
    Classify { file: PathBuf },
    /// Solve LAPCS for two annotated sequence files.
    Solve(SolveArgs),
    /// Build a reduction instance from a DIMACS graph.
    Reduce(ReduceArgs),
    /// Run an equivalence sweep and write CSV + JSON reports.
    Sweep(SweepArgs),
    /// Check a single (graph, k) row.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Maximum branch-and-bound nodes for exact search.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
}

impl BudgetArgs {
    fn search(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(nodes) = self.budget_nodes {
            b.max_nodes = nodes;
        }
        b
    }

    fn oracle(&self) -> OracleBudget {
        OracleBudget {
            search: self.search(),
            ..OracleBudget::default()
        }
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("constraint").args(["unconstrained", "fragment", "diagonal"])))]
pub struct SolveArgs {
    pub file1: PathBuf,
    pub file2: PathBuf,
    /// No match constraint (default).
    #[arg(long)]
    pub unconstrained: bool,
    /// c-fragment constraint.
    #[arg(long, value_name = "C")]
    pub fragment: Option<usize>,
    /// c-diagonal constraint.
    #[arg(long, value_name = "C")]
    pub diagonal: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub graph: PathBuf,
    pub k: usize,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub theorem: u8,
    /// Output prefix; writes `<prefix>_a1.txt` and `<prefix>_a2.txt`.
    #[arg(long, default_value = "instance")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub theorem: u8,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Use a single k instead of every k in 1..=n.
    #[arg(long)]
    pub k: Option<usize>,
    /// Sample this many random graphs instead of enumerating all of them.
    #[arg(long, value_name = "COUNT", requires = "seed")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Override the exhaustive order limit.
    #[arg(long)]
    pub max_exhaustive_order: Option<usize>,
    /// CSV output path; the JSON summary goes next to it.
    #[arg(long, default_value = "sweep.csv")]
    pub out: PathBuf,
    /// Exit with status 3 if any counterexample is found.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub k: usize,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub theorem: u8,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: Error },
    #[error(transparent)]
    Lapcs(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lapcs(e) | CliError::File { source: e, .. } if e.is_budget() => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn in_file<T>(path: &Path, r: crate::error::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::File {
        path: path.to_owned(),
        source,
    })
}

fn read_sequence(path: &Path) -> Result<AnnotatedSequence, CliError> {
    in_file(path, AnnotatedSequence::parse_text(&read(path)?))
}

/// Reads a DIMACS graph. The block construction needs a simple graph; the
/// first construction merges repeated edges.
fn read_graph(path: &Path, theorem: Theorem) -> Result<Graph, CliError> {
    let text = read(path)?;
    match theorem {
        Theorem::Two => in_file(path, Graph::parse_dimacs(&text)),
        Theorem::One => {
            let parsed = crate::reductions::parse_dimacs_edges(&text).and_then(|(n, edges)| {
                if let Some(&(line, v, _)) = edges.iter().find(|(_, a, b)| a == b) {
                    return Err(Error::parse(line, format!("loop at vertex {v}")));
                }
                Graph::new_merging(n, edges.into_iter().map(|(_, a, b)| (a, b)))
            });
            in_file(path, parsed)
        }
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit status.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CliError> {
    match cli.command {
        Command::Classify { file } => {
            let a = read_sequence(&file)?;
            writeln!(out, "{}", a.structure()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Solve(args) => {
            let a1 = read_sequence(&args.file1)?;
            let a2 = read_sequence(&args.file2)?;
            let mc = match (args.fragment, args.diagonal) {
                (Some(c), _) => MatchConstraint::fragment(c)?,
                (_, Some(c)) => MatchConstraint::diagonal(c),
                _ => MatchConstraint::Unconstrained,
            };
            let r = solve_with_budget(&a1, &a2, mc, &args.budget.search())?;
            write!(out, "{}\n{}", r.length, r.witness.to_lines()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Reduce(args) => {
            let theorem = Theorem::from_number(args.theorem)?;
            let g = read_graph(&args.graph, theorem)?;
            let inst = reduce(&g, args.k, theorem)?;
            let prefix = args.out.to_string_lossy().into_owned();
            for (suffix, a) in [("_a1.txt", &inst.a1), ("_a2.txt", &inst.a2)] {
                write(Path::new(&format!("{prefix}{suffix}")), &a.to_text()?)?;
            }
            writeln!(out, "threshold {}", inst.threshold).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Sweep(args) => {
            let theorem = Theorem::from_number(args.theorem)?;
            let source = match args.random {
                Some(count) => GraphSource::Random {
                    count,
                    edge_probability: args.edge_prob,
                    seed: args.seed.expect("clap enforces --seed with --random"),
                },
                None => GraphSource::Exhaustive,
            };
            let cfg = SweepConfig {
                theorem,
                n_min: args.n_min,
                n_max: args.n_max,
                k_policy: args.k.map_or(KPolicy::All, KPolicy::Fixed),
                source,
                budget: args.budget.oracle(),
                max_exhaustive_order: args
                    .max_exhaustive_order
                    .unwrap_or_else(|| default_exhaustive_order(theorem)),
            };
            let report = run_sweep(&cfg)?;
            let json_path = report.write(&args.out).map_err(|source| CliError::Io {
                path: args.out.clone(),
                source,
            })?;
            let s = &report.summary;
            writeln!(
                out,
                "rows {} skipped {} forward_failures {} backward_failures {} spot_checked {} spot_mismatches {}",
                s.rows,
                s.skipped_rows,
                s.forward_failures,
                s.backward_failures,
                s.spot_checked,
                s.spot_check_mismatches.len()
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "wrote {} and {}",
                args.out.display(),
                json_path.display()
            )
            .map_err(io_err)?;
            Ok(if s.skipped_rows > 0 || s.spot_check_skipped > 0 {
                EXIT_BUDGET
            } else if args.strict && report.has_counterexamples() {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            })
        }
        Command::Verify(args) => {
            let theorem = Theorem::from_number(args.theorem)?;
            let g = read_graph(&args.graph, theorem)?;
            let row = check_equivalence(&g, args.k, theorem, &args.budget.oracle())?;
            out.write_all(rows_to_csv(std::slice::from_ref(&row))?.as_bytes())
                .map_err(io_err)?;
            Ok(if row.is_skipped() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            })
        }
    }
}

/// Parses `args` and runs the command, printing errors to stderr.
pub fn main_with_args<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
