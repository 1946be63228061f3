//! Command-line front end for the `spantree` library.
//!
//! Data goes to the output stream, diagnostics to the error stream. Exit
//! codes: 0 success, 1 a mathematical check failed, 2 usage or input error.

pub mod bench;
pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use spantree::graph::{parse_edge_list, serialize_edge_list};
use spantree::spanning::{decimal_digits, tau_bruteforce, tau_with_drop, SpanningError};
use spantree::{
    complete_graph, cycle_graph, det, entropy_estimate, entropy_limit, friendship_graph,
    EngineKind, ExactMatrix, Family, Graph,
};

use crate::format::decimal;

/// Cofactor expansion is refused above this order.
pub const MAX_COFACTOR_ORDER: usize = 9;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            _ => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(source: io::Error) -> Self {
        CliError::Io {
            context: "write failed".into(),
            source,
        }
    }
}

fn usage(err: impl ToString) -> CliError {
    CliError::Usage(err.to_string())
}

fn spanning_error(err: SpanningError) -> CliError {
    match err {
        SpanningError::NonIntegralDeterminant { .. }
        | SpanningError::NegativeDeterminant { .. } => CliError::CheckFailed(err.to_string()),
        other => usage(other),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "spantree",
    version,
    about = "Exact spanning-tree counting via the matrix-tree theorem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as an edge list
    Gen(GenArgs),
    /// Count spanning trees of a graph
    Tau(TauArgs),
    /// Exact determinant of a matrix file
    Det(DetArgs),
    /// Spanning-tree entropy table for the friendship families
    Entropy(EntropyArgs),
    /// Cross-engine verification suite
    Verify(verify::VerifyArgs),
    /// Time engines on a family sweep
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFamily {
    /// k triangles sharing a hub
    Friendship,
    /// subdivision of the friendship graph
    Subdivided,
    /// cycle on n vertices
    Cycle,
    /// complete graph on n vertices
    Complete,
}

impl GraphFamily {
    pub fn build(self, param: usize) -> Result<Graph, CliError> {
        let g = match self {
            GraphFamily::Friendship => friendship_graph(param),
            GraphFamily::Subdivided => friendship_graph(param).map(|g| g.subdivide()),
            GraphFamily::Cycle => cycle_graph(param),
            GraphFamily::Complete => complete_graph(param),
        };
        g.map_err(usage)
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: GraphFamily,
    /// k for the friendship families, n for cycle and complete
    pub param: usize,
    /// Output file (stdout when omitted)
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    /// Edge-list file (`-` for stdin)
    #[arg(conflicts_with_all = ["family", "k"], required_unless_present = "family")]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "k")]
    pub family: Option<GraphFamily>,
    /// Family parameter
    #[arg(long, requires = "family")]
    pub k: Option<usize>,
    #[arg(long, default_value = "bareiss")]
    pub engine: EngineKind,
    /// Vertex whose row and column are deleted
    #[arg(long, default_value_t = 0)]
    pub drop: usize,
    /// Also count by brute-force enumeration and compare
    #[arg(long)]
    pub check_bruteforce: bool,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    /// Matrix file (`-` for stdin)
    pub input: PathBuf,
    #[arg(long, default_value = "bareiss")]
    pub engine: EngineKind,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    /// friendship or subdivided; both when omitted
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long, default_value_t = 10)]
    pub k_max: usize,
    /// Write the CSV table to this file instead of stdout
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                context: "reading stdin".into(),
                source,
            })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|source| CliError::Io {
        context: format!("reading {}", path.display()),
        source,
    })
}

/// Runs `body` against either the file at `path` or `out`.
pub(crate) fn with_sink<T>(
    path: Option<&Path>,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<T, CliError>,
) -> Result<T, CliError> {
    match path {
        Some(p) => {
            let mut file = fs::File::create(p).map_err(|source| CliError::Io {
                context: format!("creating {}", p.display()),
                source,
            })?;
            let result = body(&mut file)?;
            file.flush()?;
            Ok(result)
        }
        None => body(out),
    }
}

pub(crate) fn refuse_large_cofactor(engine: EngineKind, order: usize) -> Result<(), CliError> {
    if engine == EngineKind::Cofactor && order > MAX_COFACTOR_ORDER {
        return Err(usage(format!(
            "cofactor expansion refused for order {order} (limit {MAX_COFACTOR_ORDER}); choose a polynomial engine"
        )));
    }
    Ok(())
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = args.family.build(args.param)?;
    let text = serialize_edge_list(&g);
    with_sink(args.out.as_deref(), out, |w| {
        Ok(w.write_all(text.as_bytes())?)
    })
}

fn cmd_tau(args: &TauArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = match (&args.input, args.family, args.k) {
        (Some(path), _, _) => parse_edge_list(&read_input(path)?).map_err(usage)?,
        (None, Some(family), Some(k)) => family.build(k)?,
        _ => return Err(usage("give an edge-list file or --family with --k")),
    };
    refuse_large_cofactor(args.engine, g.vertex_count().saturating_sub(1))?;

    let start = Instant::now();
    let t = tau_with_drop(&g, args.engine, args.drop).map_err(spanning_error)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    writeln!(
        out,
        "tau={t} engine={} drop={} n={} m={} millis={}",
        args.engine,
        args.drop,
        g.vertex_count(),
        g.edge_count(),
        decimal(millis)
    )?;

    if args.check_bruteforce {
        let oracle = tau_bruteforce(&g).map_err(spanning_error)?;
        let agree = oracle == t;
        writeln!(
            out,
            "bruteforce={oracle} {}",
            if agree { "agree" } else { "disagree" }
        )?;
        if !agree {
            return Err(CliError::CheckFailed(format!(
                "{} gives {t} but brute force gives {oracle}",
                args.engine
            )));
        }
    }
    Ok(())
}

fn cmd_det(args: &DetArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let m =
        ExactMatrix::parse(&text).map_err(|e| usage(format!("{}: {e}", args.input.display())))?;
    refuse_large_cofactor(args.engine, m.order())?;
    writeln!(out, "{}", det(&m, args.engine))?;
    Ok(())
}

pub const ENTROPY_HEADER: [&str; 7] = [
    "family",
    "k",
    "n",
    "tau_digits",
    "entropy",
    "limit",
    "abs_gap",
];

fn cmd_entropy(args: &EntropyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.k_max == 0 {
        return Err(usage("--k-max must be at least 1"));
    }
    let families: Vec<Family> = match args.family {
        Some(f) => vec![f],
        None => Family::ALL.to_vec(),
    };
    with_sink(args.csv.as_deref(), out, |w| {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(ENTROPY_HEADER)?;
        for family in families {
            let limit = decimal(entropy_limit(family));
            for k in 1..=args.k_max {
                let est = entropy_estimate(family, k).map_err(spanning_error)?;
                let tau = family.closed_form(k).map_err(spanning_error)?;
                csv.write_record([
                    family.name().to_string(),
                    k.to_string(),
                    est.n.to_string(),
                    decimal_digits(&tau).to_string(),
                    decimal(est.value),
                    limit.clone(),
                    decimal(est.gap()),
                ])?;
            }
            csv.write_record([family.name(), "limit", "", "", &limit, &limit, "0"])?;
        }
        csv.flush()?;
        Ok(())
    })
}

/// Parses `args` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Tau(a) => cmd_tau(a, out),
        Command::Det(a) => cmd_det(a, out),
        Command::Entropy(a) => cmd_entropy(a, out),
        Command::Verify(a) => verify::cmd_verify(a, out, &verify::default_engines()),
        Command::Bench(a) => bench::cmd_bench(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
