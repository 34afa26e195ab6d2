//! Command-line front end. Exit codes: 0 success, 1 validation failure,
//! 2 parse or usage error, 3 when a fixed-`k` run certifies a large width.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::ParseError;
use crate::generators::{gnp, partial_k_tree, random_tree, scale_corpus, seeded};
use crate::graph::Graph;
use crate::io::{emit_decomposition, emit_graph, parse_decomposition, parse_graph};
use crate::report::{append_reports, AlgoReport};
use crate::separators::Alpha;
use crate::triangulation::{decompose, Algorithm, Mode, TriangOutcome};
use crate::validate::{check_tree_decomposition, exact_treewidth, EXACT_TREEWIDTH_MAX_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EXCEEDS: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tw-approx",
    version,
    about = "Treewidth approximation by balanced separators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangulate a graph and write its tree decomposition.
    Decompose(DecomposeArgs),
    /// Check a tree decomposition against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
    /// Exact treewidth of a small graph.
    Exact {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run algorithms over every .gr file of a directory.
    Bench {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "mindeg,half45,rs4")]
        algos: Vec<String>,
        #[arg(long)]
        report: PathBuf,
        #[arg(long, default_value = "4/3")]
        alpha: Alpha,
        /// Directory receiving one .td file per (graph, algorithm).
        #[arg(long)]
        td_dir: Option<PathBuf>,
    },
    /// Write random graphs in .gr format.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Width of partial k-trees.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Edge probability (gnp) or kept-edge probability (partial k-trees).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file, or output directory for `corpus`.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Tree,
    Gnp,
    PartialKTree,
    /// The five-graph scale corpus.
    Corpus,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long, default_value = "bg367", value_parser = ["rs4", "half45", "bg367", "mindeg", "generic"])]
    algo: String,
    /// Run once at this k.
    #[arg(long, conflicts_with_all = ["search", "adaptive"])]
    k: Option<usize>,
    /// Smallest k that succeeds (the default).
    #[arg(long)]
    search: bool,
    /// Search with a gradually grown padding set.
    #[arg(long, conflicts_with = "search")]
    adaptive: bool,
    #[arg(long, default_value = "4/3")]
    alpha: Alpha,
    #[arg(long = "in")]
    input: PathBuf,
    /// Decomposition output; stdout if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// CSV file receiving one appended row.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Failures mapped to exit codes.
enum Failure {
    Parse(String),
    Invalid(Vec<String>),
    Exceeds(usize),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Other)
}

fn parse_err(path: &Path, e: ParseError) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let parsed = parse_graph(&read(path)?).map_err(|e| parse_err(path, e))?;
    if parsed.dropped > 0 {
        eprintln!(
            "warning: {}: dropped {} self-loop or duplicate edge line(s)",
            path.display(),
            parsed.dropped
        );
    }
    Ok(parsed.graph)
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_decompose(a: DecomposeArgs) -> Result<(), Failure> {
    let g = load_graph(&a.input)?;
    let algo = Algorithm::from_id(&a.algo, a.alpha).expect("validated by clap");
    let mode = match (a.k, a.adaptive) {
        (Some(0), _) => return Err(Failure::Other(anyhow::anyhow!("--k must be at least 1"))),
        (Some(k), _) => Mode::Fixed(k),
        (None, true) => Mode::Adaptive,
        (None, false) => Mode::Search,
    };
    let d = decompose(&g, algo, mode);
    if let Some(report) = &a.report {
        append_reports(report, &[AlgoReport::new(&graph_name(&a.input), &g, algo, mode, &d)])?;
    }
    match &d.outcome {
        TriangOutcome::Success(_, td) => {
            eprintln!(
                "{}: k = {}, width + 1 = {}",
                algo.id(),
                d.k_used.map_or("-".into(), |k| k.to_string()),
                td.width() + 1
            );
            write_out(a.out.as_deref(), &emit_decomposition(td, g.n()))
        }
        TriangOutcome::Exceeds(k) => Err(Failure::Exceeds(*k)),
    }
}

fn run_validate(graph: &Path, td_path: &Path) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let parsed = parse_decomposition(&read(td_path)?).map_err(|e| parse_err(td_path, e))?;
    let mut problems = Vec::new();
    if parsed.n != g.n() {
        problems.push(format!(
            "decomposition declares {} vertices, graph has {}",
            parsed.n,
            g.n()
        ));
    }
    if let Err(vs) = check_tree_decomposition(&g, &parsed.td) {
        problems.extend(vs.iter().map(ToString::to_string));
    }
    if !problems.is_empty() {
        return Err(Failure::Invalid(problems));
    }
    println!("valid, width {}", parsed.td.width());
    Ok(())
}

fn run_exact(input: &Path) -> Result<(), Failure> {
    let g = load_graph(input)?;
    if g.n() > EXACT_TREEWIDTH_MAX_N {
        return Err(Failure::Parse(format!(
            "{}: exact treewidth is limited to {EXACT_TREEWIDTH_MAX_N} vertices, got {}",
            input.display(),
            g.n()
        )));
    }
    println!("{}", exact_treewidth(&g).expect("size checked"));
    Ok(())
}

fn run_bench(dir: &Path, algos: &[String], report: &Path, alpha: Alpha, td_dir: Option<&Path>) -> Result<(), Failure> {
    let algos: Vec<Algorithm> = algos
        .iter()
        .map(|id| Algorithm::from_id(id.trim(), alpha).ok_or_else(|| anyhow::anyhow!("unknown algorithm `{id}`")))
        .collect::<anyhow::Result<_>>()?;
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot list {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gr"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::Other(anyhow::anyhow!("no .gr files in {}", dir.display())));
    }
    for file in &files {
        let g = load_graph(file)?;
        let name = graph_name(file);
        for &algo in &algos {
            let d = decompose(&g, algo, Mode::Search);
            if let Some((_, td)) = d.outcome.success() {
                if let Err(vs) = check_tree_decomposition(&g, td) {
                    return Err(Failure::Invalid(
                        vs.iter().map(|v| format!("{name}/{}: {v}", algo.id())).collect(),
                    ));
                }
                if let Some(out) = td_dir {
                    let path = out.join(format!("{name}.{}.td", algo.id()));
                    write_out(Some(&path), &emit_decomposition(td, g.n()))?;
                }
            }
            let row = AlgoReport::new(&name, &g, algo, Mode::Search, &d);
            eprintln!(
                "{name}: {} width+1 = {} in {:.1} ms",
                row.algorithm,
                row.width_plus_one.map_or("-".into(), |w| w.to_string()),
                row.wall_ms
            );
            append_reports(report, &[row])?;
        }
    }
    Ok(())
}

fn run_generate(family: Family, n: usize, k: usize, p: f64, seed: u64, out: &Path) -> Result<(), Failure> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::Other(anyhow::anyhow!("--p must lie in [0, 1]")));
    }
    let mut rng = seeded(seed);
    let g = match family {
        Family::Tree => random_tree(n, &mut rng),
        Family::Gnp => gnp(n, p, &mut rng),
        Family::PartialKTree => {
            if n <= k {
                return Err(Failure::Other(anyhow::anyhow!("partial k-trees need --n > --k")));
            }
            partial_k_tree(n, k, p, &mut rng)
        }
        Family::Corpus => {
            fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
            for c in scale_corpus(seed) {
                write_out(Some(&out.join(format!("{}.gr", c.name))), &emit_graph(&c.graph))?;
            }
            return Ok(());
        }
    };
    write_out(Some(out), &emit_graph(&g))
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose(a) => run_decompose(a),
        Command::Validate { graph, td } => run_validate(&graph, &td),
        Command::Exact { input } => run_exact(&input),
        Command::Bench {
            dir,
            algos,
            report,
            alpha,
            td_dir,
        } => run_bench(&dir, &algos, &report, alpha, td_dir.as_deref()),
        Command::Generate {
            family,
            n,
            k,
            p,
            seed,
            out,
        } => run_generate(family, n, k, p, seed, &out),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Invalid(problems)) => {
            for p in problems {
                println!("violation: {p}");
            }
            EXIT_INVALID
        }
        Err(Failure::Exceeds(k)) => {
            eprintln!("the treewidth exceeds {}", k - 1);
            EXIT_EXCEEDS
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            EXIT_PARSE
        }
    }
}
