use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lss_core::{
    cycle_gadget, intersection_lss, ones_modulo, product, tightness_search, unary_residue,
    Alphabet, Budget, Dfa, SearchOptions,
};
use serde::Serialize;

use crate::dot::{render, StateNames};
use crate::report::{self, LssSummary, SearchSummary, WitnessReport};

#[derive(Debug, Parser)]
#[command(
    name = "lss",
    version,
    about = "Shortest words in intersections of small DFAs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the m- and n-state pair and check its shortest common word is m·n − 1.
    Witness(WitnessArgs),
    /// Run `witness` for every 1 ≤ m ≤ n ≤ max-n.
    Verify(VerifyArgs),
    /// Exhaustively search tuples of small binary DFAs for the longest shortest common word.
    Search(SearchArgs),
    /// Shortest word accepted by every DFA read from interchange files.
    Lss(LssArgs),
    /// Render an automaton as a Graphviz digraph.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Add a generation timestamp to structured output.
    #[arg(long)]
    pub timestamp: bool,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Directory to write DOT files for both automata and their product.
    #[arg(long, value_name = "DIR")]
    pub dot: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-n")]
    pub max_n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Comma-separated state counts, e.g. `2,2,3`.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
    /// Maximum number of language tuples to examine.
    #[arg(long)]
    pub budget: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LssArgs {
    /// DFA interchange file; repeat for an intersection.
    #[arg(long = "dfa", required = true)]
    pub dfas: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// m states, counts 1s modulo m.
    OnesModulo,
    /// n states, needs m ≤ n.
    CycleGadget,
    /// Product of the ones-modulo and cycle-gadget pair.
    Product,
    /// m states over one letter, accepting lengths ≡ m − 1 (mod m).
    Unary,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    #[arg(
        long,
        value_enum,
        conflicts_with = "dfas",
        required_unless_present = "dfas"
    )]
    pub family: Option<Family>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// DFA interchange file; several files render their product.
    #[arg(long = "dfa")]
    pub dfas: Vec<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A checked claim did not hold, or the intersection was empty.
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
    pub status: Status,
}

impl Output {
    fn new(stdout: String, pass: bool) -> Self {
        Output {
            stdout,
            notes: Vec::new(),
            status: if pass {
                Status::Success
            } else {
                Status::Failure
            },
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Witness(args) => witness(args),
        Command::Verify(args) => verify(args),
        Command::Search(args) => search(args),
        Command::Lss(args) => lss(args),
        Command::ExportDot(args) => export_dot(args),
    }
}

fn timestamp(output: &OutputArgs) -> Option<u64> {
    output.timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs())
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn witness(args: &WitnessArgs) -> Result<Output> {
    let r = report::witness_report(args.m, args.n)?;
    let stdout = match args.output.format {
        Format::Text => report::witness_text(&r),
        Format::Csv => report::witness_csv(std::slice::from_ref(&r)),
        Format::Structured => report::structured("witness", &r, timestamp(&args.output)),
    };
    let mut out = Output::new(stdout, r.pass);
    if r.swapped && args.output.format != Format::Text {
        out.notes
            .push(format!("note: sizes swapped to m = {}, n = {}", r.m, r.n));
    }
    if let Some(dir) = &args.dot {
        out.notes.extend(write_pair_dots(dir, &r)?);
    }
    Ok(out)
}

fn write_pair_dots(dir: &Path, r: &WitnessReport) -> Result<Vec<String>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let (m, n) = (r.m, r.n);
    let first = ones_modulo(m)?;
    let second = cycle_gadget(m, n)?;
    let (pair, tag) = product(&[&first, &second])?;
    let files = [
        (
            format!("ones_modulo_{m}.dot"),
            render(
                &first,
                &format!("ones_modulo({m})"),
                StateNames::Prefixed("p"),
            ),
        ),
        (
            format!("cycle_gadget_{m}_{n}.dot"),
            render(
                &second,
                &format!("cycle_gadget({m},{n})"),
                StateNames::Prefixed("q"),
            ),
        ),
        (
            format!("product_{m}_{n}.dot"),
            render(
                &pair,
                &format!("product({m},{n})"),
                StateNames::Product(&tag, &["p", "q"]),
            ),
        ),
    ];
    let mut notes = Vec::new();
    for (name, text) in files {
        let path = dir.join(name);
        write_file(&path, &text)?;
        notes.push(format!("wrote {}", path.display()));
    }
    Ok(notes)
}

#[derive(Serialize)]
struct VerifyPayload<'a> {
    max_n: usize,
    pairs: usize,
    failed: usize,
    rows: &'a [WitnessReport],
}

fn verify(args: &VerifyArgs) -> Result<Output> {
    let rows = report::verify_range(args.max_n)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    let stdout = match args.output.format {
        Format::Text => report::verify_text(&rows),
        Format::Csv => report::witness_csv(&rows),
        Format::Structured => report::structured(
            "verify",
            &VerifyPayload {
                max_n: args.max_n,
                pairs: rows.len(),
                failed,
                rows: &rows,
            },
            timestamp(&args.output),
        ),
    };
    Ok(Output::new(stdout, failed == 0))
}

fn search(args: &SearchArgs) -> Result<Output> {
    if args.sizes.is_empty() {
        bail!("--sizes needs at least one size");
    }
    let mut budget = Budget::default();
    if let Some(t) = args.budget {
        budget.max_tuples = t;
    }
    let options = SearchOptions {
        workers: usize::try_from(args.workers).context("--workers too large")?,
        budget,
    };
    let report = tightness_search(&args.sizes, &Alphabet::binary(), options)?;
    let summary = SearchSummary::from(&report);
    let stdout = match args.output.format {
        Format::Text => report::search_text(&summary),
        Format::Csv => report::search_csv(&summary),
        Format::Structured => report::structured("search", &summary, timestamp(&args.output)),
    };
    // The search answers a question; either answer is a successful run.
    Ok(Output::new(stdout, summary.bound_violations == 0))
}

fn load_dfa(path: &Path) -> Result<Dfa> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Dfa::from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn lss(args: &LssArgs) -> Result<Output> {
    let dfas = args
        .dfas
        .iter()
        .map(|p| load_dfa(p))
        .collect::<Result<Vec<_>>>()?;
    let result = intersection_lss(&dfas)?;
    let summary = LssSummary::new(dfas.len(), dfas[0].alphabet(), result.as_ref());
    let stdout = match args.output.format {
        Format::Text => report::lss_text(&summary),
        Format::Csv => report::lss_csv(&summary),
        Format::Structured => report::structured("lss", &summary, timestamp(&args.output)),
    };
    Ok(Output::new(stdout, !summary.empty))
}

fn require(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required for {family:?}"))
}

fn export_dot(args: &ExportDotArgs) -> Result<Output> {
    let text = match args.family {
        Some(family) => {
            let m = require(args.m, "m", family)?;
            match family {
                Family::OnesModulo => render(
                    &ones_modulo(m)?,
                    &format!("ones_modulo({m})"),
                    StateNames::Prefixed("p"),
                ),
                Family::Unary => render(
                    &unary_residue(m.saturating_sub(1), m)?,
                    &format!("unary_residue({},{m})", m.saturating_sub(1)),
                    StateNames::Plain,
                ),
                Family::CycleGadget => {
                    let n = require(args.n, "n", family)?;
                    render(
                        &cycle_gadget(m, n)?,
                        &format!("cycle_gadget({m},{n})"),
                        StateNames::Prefixed("q"),
                    )
                }
                Family::Product => {
                    let n = require(args.n, "n", family)?;
                    let (p, tag) = product(&[ones_modulo(m)?, cycle_gadget(m, n)?])?;
                    render(
                        &p,
                        &format!("product({m},{n})"),
                        StateNames::Product(&tag, &["p", "q"]),
                    )
                }
            }
        }
        None => {
            let dfas = args
                .dfas
                .iter()
                .map(|p| load_dfa(p))
                .collect::<Result<Vec<_>>>()?;
            if let [single] = dfas.as_slice() {
                render(single, "dfa", StateNames::Plain)
            } else {
                let (p, tag) = product(&dfas)?;
                render(&p, "product", StateNames::Product(&tag, &[]))
            }
        }
    };
    match &args.dot {
        Some(path) => {
            write_file(path, &text)?;
            let mut out = Output::new(String::new(), true);
            out.notes.push(format!("wrote {}", path.display()));
            Ok(out)
        }
        None => Ok(Output::new(text, true)),
    }
}
