//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification refutes a claim, 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::connectivity::{edge_connectivity, vertex_connectivity, ConnectivityClass};
use crate::constructors::{self, BasicKind, ConstructError};
use crate::enumeration::{self, EnumError, EnumOptions};
use crate::format::{self, FormatError};
use crate::graph::Graph;
use crate::indices::{ln_biguint, m1_m2, pi1, pi2, Pi2Form};
use crate::verifier::{self, Claim, Status, SuiteConfig, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Multiplicative Zagreb indices, connectivity and extremal graph verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Zagreb indices of each input graph.
    Index(IndexArgs),
    /// Print "kappa kappa_prime" for each input graph.
    Connectivity(InputArgs),
    /// Build a named graph.
    Construct(ConstructArgs),
    /// List graphs on n vertices up to isomorphism, one graph6 line each.
    Enumerate(EnumerateArgs),
    /// Run the exhaustive verification suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph file (`-` for standard input). Format follows the extension
    /// (.g6 or .edges) unless --format is given.
    #[arg(long, conflicts_with = "g6")]
    input: Option<PathBuf>,
    /// A graph6 string given inline.
    #[arg(long)]
    g6: Option<String>,
    /// Input format override.
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexName {
    Pi1,
    Pi2,
    M1,
    M2,
}

#[derive(Debug, Args)]
struct IndexArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print only this index; otherwise all four as name=value pairs.
    #[arg(long, value_enum)]
    index: Option<IndexName>,
    /// Print the natural log to 12 significant digits instead of the integer.
    #[arg(long)]
    log: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Complete,
    Path,
    Star,
    Knk,
    Sandwich,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    /// Vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// K_n^k join size, or the middle clique size of a sandwich without --h.
    #[arg(long)]
    k: Option<usize>,
    /// Size of the first sandwich clique.
    #[arg(long)]
    j: Option<usize>,
    /// File holding the middle graph of a sandwich.
    #[arg(long)]
    h: Option<PathBuf>,
    /// Size of the second sandwich clique; defaults to n - j - |H|.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "g6")]
    format: GraphFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Trees only.
    #[arg(long)]
    trees: bool,
    /// Keep graphs with vertex connectivity at most K.
    #[arg(long, value_name = "K", conflicts_with = "kappa_prime_max")]
    kappa_max: Option<usize>,
    /// Keep graphs with edge connectivity at most K.
    #[arg(long, value_name = "K")]
    kappa_prime_max: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated claim ids, or `all`.
    #[arg(long, default_value = "all")]
    claims: String,
    #[arg(long, default_value_t = enumeration::DEFAULT_MAX_N)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Record elapsed_ms per entry (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{origin}: {source}")]
    Parse { origin: String, source: FormatError },
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Index(args) => {
            let graphs = read_graphs(&args.input, stdin)?;
            let text: String = graphs
                .iter()
                .map(|g| index_line(g, args.index, args.log) + "\n")
                .collect();
            emit(args.input.output.as_deref(), out, &text)?;
        }
        Command::Connectivity(args) => {
            let graphs = read_graphs(&args, stdin)?;
            let text: String = graphs
                .iter()
                .map(|g| format!("{} {}\n", vertex_connectivity(g), edge_connectivity(g)))
                .collect();
            emit(args.output.as_deref(), out, &text)?;
        }
        Command::Construct(args) => {
            let g = construct(&args)?;
            let text = match args.format {
                GraphFormat::G6 => format::encode_graph6(&g) + "\n",
                GraphFormat::Edges => format::write_edge_list(&g),
            };
            emit(args.output.as_deref(), out, &text)?;
        }
        Command::Enumerate(args) => {
            let text = enumerate(&args)?;
            emit(args.output.as_deref(), out, &text)?;
        }
        Command::Verify(args) => return verify(&args, out, err),
    }
    Ok(EXIT_OK)
}

fn emit(path: Option<&Path>, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn read_graphs(args: &InputArgs, stdin: &mut dyn Read) -> Result<Vec<Graph>, CliError> {
    if let Some(text) = &args.g6 {
        let g = format::decode_graph6(text).map_err(|source| CliError::Parse {
            origin: "--g6".into(),
            source,
        })?;
        return Ok(vec![g]);
    }
    let path = args.input.as_deref().filter(|p| *p != Path::new("-"));
    let (origin, text) = match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            (p.display().to_string(), text)
        }
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            ("<stdin>".to_string(), text)
        }
    };
    parse_graphs(&text, detect_format(args.format, path, &text))
        .map_err(|source| CliError::Parse { origin, source })
}

fn parse_graphs(text: &str, format: GraphFormat) -> Result<Vec<Graph>, FormatError> {
    match format {
        GraphFormat::Edges => Ok(vec![format::parse_edge_list(text)?]),
        GraphFormat::G6 => {
            let graphs = format::decode_graph6_lines(text)?;
            if graphs.is_empty() {
                return Err(FormatError::Syntax {
                    line: 1,
                    message: "no graphs in input".into(),
                });
            }
            Ok(graphs)
        }
    }
}

/// Explicit flag, then file extension, then a look at the first line: an
/// edge-list header is two integers.
fn detect_format(flag: Option<GraphFormat>, path: Option<&Path>, text: &str) -> GraphFormat {
    if let Some(f) = flag {
        return f;
    }
    match path.and_then(Path::extension).and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => return GraphFormat::G6,
        Some("edges" | "el") => return GraphFormat::Edges,
        _ => {}
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let fields: Vec<&str> = first.split_whitespace().collect();
    if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
        GraphFormat::Edges
    } else {
        GraphFormat::G6
    }
}

fn index_line(g: &Graph, which: Option<IndexName>, log: bool) -> String {
    let (m1, m2) = m1_m2(g);
    let p1 = pi1(g);
    let p2 = pi2(g, Pi2Form::Vertex);
    let render = |name: IndexName| -> String {
        match (name, log) {
            (IndexName::Pi1, false) => p1.to_string(),
            (IndexName::Pi2, false) => p2.to_string(),
            (IndexName::M1, false) => m1.to_string(),
            (IndexName::M2, false) => m2.to_string(),
            (IndexName::Pi1, true) => significant(ln_biguint(p1.value())),
            (IndexName::Pi2, true) => significant(ln_biguint(p2.value())),
            (IndexName::M1, true) => significant((m1 as f64).ln()),
            (IndexName::M2, true) => significant((m2 as f64).ln()),
        }
    };
    match which {
        Some(name) => render(name),
        None => format!(
            "pi1={} pi2={} m1={} m2={}",
            render(IndexName::Pi1),
            render(IndexName::Pi2),
            render(IndexName::M1),
            render(IndexName::M2)
        ),
    }
}

/// Formats with 12 significant digits.
fn significant(x: f64) -> String {
    if !x.is_finite() {
        return if x < 0.0 { "-inf".into() } else { "inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn construct(args: &ConstructArgs) -> Result<Graph, CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("{:?} needs --{flag}", args.family)))
    };
    let g = match args.family {
        Family::Complete => constructors::basic(BasicKind::Complete, need(args.n, "n")?)?,
        Family::Path => constructors::basic(BasicKind::Path, need(args.n, "n")?)?,
        Family::Star => constructors::basic(BasicKind::Star, need(args.n, "n")?)?,
        Family::Knk => constructors::knk(need(args.n, "n")?, need(args.k, "k")?)?,
        Family::Sandwich => {
            let j = need(args.j, "j")?;
            let h = match (&args.h, args.k) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    let mut graphs = parse_graphs(&text, detect_format(None, Some(path), &text))
                        .map_err(|source| CliError::Parse {
                            origin: path.display().to_string(),
                            source,
                        })?;
                    if graphs.len() != 1 {
                        return Err(CliError::Usage(format!(
                            "{} must hold exactly one graph",
                            path.display()
                        )));
                    }
                    graphs.remove(0)
                }
                (None, Some(k)) => constructors::complete(k).map_err(ConstructError::from)?,
                (None, None) => {
                    return Err(CliError::Usage("sandwich needs --h PATH or --k K".into()))
                }
            };
            if let (Some(k), Some(_)) = (args.k, &args.h) {
                if k != h.order() {
                    return Err(CliError::Usage(format!(
                        "--k {k} disagrees with |H| = {}",
                        h.order()
                    )));
                }
            }
            let m = match (args.m, args.n) {
                (Some(m), None) => m,
                (Some(m), Some(n)) if n == j + h.order() + m => m,
                (Some(m), Some(n)) => {
                    return Err(CliError::Usage(format!(
                        "n = {n} but j + |H| + m = {}",
                        j + h.order() + m
                    )))
                }
                (None, Some(n)) if n > j + h.order() => n - j - h.order(),
                (None, Some(n)) => {
                    return Err(CliError::Usage(format!(
                        "n = {n} leaves no room for the second clique"
                    )))
                }
                (None, None) => return Err(CliError::Usage("sandwich needs --m or --n".into())),
            };
            constructors::sandwich(j, &h, m)?
        }
    };
    Ok(g)
}

fn enumerate(args: &EnumerateArgs) -> Result<String, CliError> {
    let opts = EnumOptions::from_env().with_jobs(args.jobs);
    let filter = match (args.kappa_max, args.kappa_prime_max) {
        (Some(k), _) => Some((k, ConnectivityClass::Vertex)),
        (None, Some(k)) => Some((k, ConnectivityClass::Edge)),
        (None, None) => None,
    };
    let stream = match (args.trees, filter) {
        (false, Some((k, class))) => enumeration::class_members_with(args.n, k, class, &opts)?,
        (false, None) => enumeration::connected_graphs_with(args.n, &opts)?,
        (true, _) => enumeration::trees(args.n)?,
    };
    let mut text = String::new();
    for g in stream {
        if args.trees {
            if let Some((k, class)) = filter {
                if !crate::connectivity::in_class(&g, k, class).map_err(EnumError::from)? {
                    continue;
                }
            }
        }
        text.push_str(&format::encode_graph6(&g));
        text.push('\n');
    }
    Ok(text)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let claims = Claim::parse_list(&args.claims)?;
    if claims.is_empty() {
        return Err(CliError::Usage("no claims selected".into()));
    }
    let mut config = SuiteConfig::new(claims, args.n_max).with_jobs(args.jobs);
    config.timings = args.timings;
    let report = verifier::verify_suite(&config)?;
    emit(args.report.as_deref(), out, &report.to_json())?;
    let count = |s: Status| report.entries.iter().filter(|e| e.status == s).count();
    let _ = writeln!(
        err,
        "{} entries: {} confirmed, {} confirmed with correction, {} refuted, {} observations",
        report.entries.len(),
        count(Status::Confirmed),
        count(Status::ConfirmedWithCorrection),
        count(Status::Refuted),
        count(Status::Observed) + count(Status::NotObserved),
    );
    Ok(if report.is_refuted() {
        EXIT_REFUTED
    } else {
        EXIT_OK
    })
}
