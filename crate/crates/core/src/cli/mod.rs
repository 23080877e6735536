//! The `mcluster-d` command line. Output is collected and written once;
//! diagnostics go to standard error.
//!
//! Exit codes: 0 success / property holds, 1 property fails, 2 usage or
//! input error (including even m for the torsion commands).

mod literal;
mod render;

use std::io::Write as _;
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use literal::{format_set, parse_arc_list, parse_arc_literal, SetDocument};
pub use render::render_svg;

use crate::arcset::ArcSet;
use crate::context::Model;
use crate::error::Error;
use crate::model::ModelParams;
use crate::polygon::{enumerate_m_arcs, ArcUniverse, PairedArc};
use crate::ptolemy::Strategy;
use crate::quiver::{build_delta, build_gamma, export_quiver, ExportFormat};

#[derive(Parser, Debug)]
#[command(
    name = "mcluster-d",
    version,
    about = "Arc models, Ptolemy diagrams and torsion pairs for m-cluster categories of type D"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ModelArgs {
    /// Rank n (at least 3).
    #[arg(long)]
    n: Option<u32>,
    /// Level m (at least 1).
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct SetArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Comma-separated arc literals, e.g. "1-5,4-8,d1r".
    #[arg(long, conflicts_with = "file")]
    set: Option<String>,
    /// JSON set document {"n":…,"m":…,"arcs":[…]}.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Ptolemy,
    Rigid,
    Angulation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Closure,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuiverModel {
    Polygon,
    Punctured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the m-arcs of the 2N-gon.
    Arcs {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the Ptolemy conditions; exit 1 on violations.
    Check {
        #[command(flatten)]
        input: SetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Right (U^⊥) or left (⊥U) perpendicular set.
    Perp {
        #[command(flatten)]
        input: SetArgs,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Smallest Ptolemy diagram containing the set.
    Complete {
        #[command(flatten)]
        input: SetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The torsion pair (U, U^⊥) of a Ptolemy diagram; exit 1 otherwise.
    Pair {
        #[command(flatten)]
        input: SetArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate Ptolemy diagrams, rigid sets or (m+2)-angulations.
    Enumerate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Ptolemy only.
        #[arg(long, value_enum, default_value = "exhaustive")]
        strategy: StrategyArg,
        /// Generator-set size bound for the closure strategy.
        #[arg(long, default_value_t = 2)]
        max_generators: usize,
        /// Number of random subsets tried by the random strategy.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print only the number of sets.
        #[arg(long)]
        count_only: bool,
        /// Stop after this many sets.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the translation quiver Δ (polygon) or Γ (punctured).
    Quiver {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long = "model", value_enum, default_value = "polygon")]
        model_kind: QuiverModel,
        #[arg(long, value_enum, default_value = "dot")]
        format: QuiverFormat,
    },
    /// Draw the set as SVG.
    Render {
        #[command(flatten)]
        input: SetArgs,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV census of Ptolemy diagrams, rigid sets and angulations.
    Census {
        /// Inclusive range of n, e.g. 3..5.
        #[arg(long)]
        n_range: String,
        /// Comma-separated odd levels, e.g. 1,3.
        #[arg(long)]
        m_list: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Generator-set size bound when the exhaustive census is capped.
        #[arg(long, default_value_t = 2)]
        max_generators: usize,
        /// Write 0 in the elapsed_ms column, for byte-stable output.
        #[arg(long)]
        no_timing: bool,
    },
}

/// Exit codes.
const OK: i32 = 0;
const FAILS: i32 = 1;
const USAGE: i32 = 2;

/// What a subcommand produced: text for standard out and an exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: OK }
    }
}

/// A failure that maps to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        match e {
            Error::EvenLevel { m } => Usage(format!(
                "m = {m} is even; crossings of diameters, perps and Ptolemy diagrams are only defined for odd m"
            )),
            other => Usage(other.to_string()),
        }
    }
}

type CliResult = std::result::Result<Outcome, Usage>;

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.stdout.as_bytes()).and_then(|_| out.flush()).is_err() {
                return USAGE;
            }
            outcome.code
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            USAGE
        }
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Arcs { model, format } => cmd_arcs(&model, format),
        Command::Check { input, format } => cmd_check(&input, format),
        Command::Perp { input, side, format } => cmd_perp(&input, side, format),
        Command::Complete { input, format } => cmd_complete(&input, format),
        Command::Pair { input, format } => cmd_pair(&input, format),
        Command::Enumerate {
            model,
            kind,
            strategy,
            max_generators,
            count,
            seed,
            count_only,
            limit,
            format,
        } => {
            let strategy = match strategy {
                StrategyArg::Exhaustive => Strategy::Exhaustive,
                StrategyArg::Closure => Strategy::ClosureGenerated { max_generators },
                StrategyArg::Random => Strategy::RandomSample { count, seed },
            };
            cmd_enumerate(&model, kind, strategy, count_only, limit, format)
        }
        Command::Quiver {
            model,
            model_kind,
            format,
        } => cmd_quiver(&model, model_kind, format),
        Command::Render { input, out } => cmd_render(&input, out),
        Command::Census {
            n_range,
            m_list,
            out,
            max_generators,
            no_timing,
        } => cmd_census(&n_range, &m_list, out, max_generators, no_timing),
    }
}

fn params_of(model: &ModelArgs) -> std::result::Result<ModelParams, Usage> {
    match (model.n, model.m) {
        (Some(n), Some(m)) => Ok(ModelParams::new(n, m)?),
        _ => Err(Usage("both --n and --m are required".into())),
    }
}

/// Model parameters and arcs from `--set` or `--file`.
fn read_input(input: &SetArgs) -> std::result::Result<(ModelParams, Vec<PairedArc>), Usage> {
    match (&input.set, &input.file) {
        (Some(text), None) => {
            let params = params_of(&input.model)?;
            Ok((params, parse_arc_list(&params, text)?))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
            let doc = SetDocument::parse(&text)?;
            for (flag, given, found) in [("--n", input.model.n, doc.n), ("--m", input.model.m, doc.m)] {
                if given.is_some_and(|g| g != found) {
                    return Err(Usage(format!("{flag} disagrees with the set document ({found})")));
                }
            }
            Ok((ModelParams::new(doc.n, doc.m)?, doc.arcs))
        }
        (None, None) => Err(Usage("give the set with --set or --file".into())),
        (Some(_), Some(_)) => Err(Usage("--set and --file are exclusive".into())),
    }
}

/// Odd-level model and the input set.
fn read_model_input(input: &SetArgs) -> std::result::Result<(Model, ArcSet), Usage> {
    let (params, arcs) = read_input(input)?;
    let model = Model::new(params)?;
    let set = model.set_of(&arcs)?;
    Ok((model, set))
}

fn document(model: &Model, set: &ArcSet) -> SetDocument {
    SetDocument {
        n: model.params().n(),
        m: model.params().m(),
        arcs: set.arcs(model.universe()).collect(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn set_output(model: &Model, set: &ArcSet, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", format_set(model.universe(), set)),
        Format::Json => to_json(&document(model, set)),
    }
}

fn cmd_arcs(model: &ModelArgs, format: Format) -> CliResult {
    let params = params_of(model)?;
    let arcs = enumerate_m_arcs(&params);
    Ok(Outcome::ok(match format {
        Format::Text => arcs.iter().map(|a| format!("{a}\n")).collect(),
        Format::Json => to_json(&arcs),
    }))
}

#[derive(Serialize)]
struct ViolationJson {
    first: PairedArc,
    second: PairedArc,
    missing: Vec<PairedArc>,
}

#[derive(Serialize)]
struct CheckJson {
    n: u32,
    m: u32,
    arcs: Vec<PairedArc>,
    ptolemy: bool,
    violations: Vec<ViolationJson>,
}

fn cmd_check(input: &SetArgs, format: Format) -> CliResult {
    let (model, set) = read_model_input(input)?;
    let violations = model.ptolemy_violations(&set)?;
    let code = if violations.is_empty() { OK } else { FAILS };
    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            if violations.is_empty() {
                s.push_str("ptolemy diagram: yes\n");
            } else {
                s.push_str(&format!("ptolemy diagram: no ({} violating pair(s))\n", violations.len()));
                for v in &violations {
                    s.push_str(&format!(
                        "  {} x {}: missing {}\n",
                        v.first,
                        v.second,
                        format_set(model.universe(), &v.missing)
                    ));
                }
            }
            s
        }
        Format::Json => {
            let doc = document(&model, &set);
            to_json(&CheckJson {
                n: doc.n,
                m: doc.m,
                arcs: doc.arcs,
                ptolemy: violations.is_empty(),
                violations: violations
                    .iter()
                    .map(|v| ViolationJson {
                        first: v.first,
                        second: v.second,
                        missing: v.missing.arcs(model.universe()).collect(),
                    })
                    .collect(),
            })
        }
    };
    Ok(Outcome { stdout, code })
}

fn cmd_perp(input: &SetArgs, side: Side, format: Format) -> CliResult {
    let (model, set) = read_model_input(input)?;
    let perp = match side {
        Side::Right => model.right_perp(&set)?,
        Side::Left => model.left_perp(&set)?,
    };
    Ok(Outcome::ok(set_output(&model, &perp, format)))
}

fn cmd_complete(input: &SetArgs, format: Format) -> CliResult {
    let (model, set) = read_model_input(input)?;
    let done = model.ptolemy_complete(&set)?;
    Ok(Outcome::ok(set_output(&model, &done, format)))
}

#[derive(Serialize)]
struct PairJson {
    n: u32,
    m: u32,
    torsion: Vec<PairedArc>,
    torsion_free: Vec<PairedArc>,
}

fn cmd_pair(input: &SetArgs, format: Format) -> CliResult {
    let (model, set) = read_model_input(input)?;
    let pair = match model.torsion_pair_of(&set) {
        Ok(pair) => pair,
        Err(e @ (Error::NotPtolemy(_) | Error::FixpointFailure(_))) => {
            eprintln!("{e}");
            if let Error::NotPtolemy(list) = &e {
                for (a, b, missing) in list {
                    let names: Vec<String> = missing.iter().map(|x| x.to_string()).collect();
                    eprintln!("  {a} x {b}: missing {{{}}}", names.join(","));
                }
            }
            return Ok(Outcome {
                stdout: String::new(),
                code: FAILS,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let stdout = match format {
        Format::Text => format!(
            "torsion: {}\ntorsion-free: {}\n",
            format_set(model.universe(), &pair.torsion),
            format_set(model.universe(), &pair.torsion_free)
        ),
        Format::Json => to_json(&PairJson {
            n: model.params().n(),
            m: model.params().m(),
            torsion: pair.torsion.arcs(model.universe()).collect(),
            torsion_free: pair.torsion_free.arcs(model.universe()).collect(),
        }),
    };
    Ok(Outcome::ok(stdout))
}

#[derive(Serialize)]
struct CountJson {
    n: u32,
    m: u32,
    kind: &'static str,
    strategy: &'static str,
    count: u64,
    exact: bool,
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Ptolemy => "ptolemy",
        Kind::Rigid => "rigid",
        Kind::Angulation => "angulation",
    }
}

/// Visits the sets of `kind` in their deterministic order; returns the
/// strategy name and whether the family is complete.
fn visit_sets(
    model: &Model,
    kind: Kind,
    strategy: Strategy,
    mut visit: impl FnMut(ArcSet) -> ControlFlow<()>,
) -> std::result::Result<(&'static str, bool), Usage> {
    match kind {
        Kind::Ptolemy => {
            let stream = model.enumerate_ptolemy(strategy)?;
            let exact = stream.exact;
            for set in stream {
                if visit(set).is_break() {
                    break;
                }
            }
            Ok((strategy.name(), exact))
        }
        Kind::Rigid => {
            model.for_each_rigid(visit)?;
            Ok(("exhaustive", true))
        }
        Kind::Angulation => {
            model.for_each_angulation(visit)?;
            Ok(("exhaustive", true))
        }
    }
}

/// Number of sets of `kind`; the exhaustive Ptolemy count runs in parallel.
fn count_sets(model: &Model, kind: Kind, strategy: Strategy) -> std::result::Result<(u64, &'static str, bool), Usage> {
    if kind == Kind::Ptolemy && strategy == Strategy::Exhaustive {
        return Ok((model.count_ptolemy_exhaustive()?, "exhaustive", true));
    }
    let mut count = 0u64;
    let (name, exact) = visit_sets(model, kind, strategy, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok((count, name, exact))
}

fn cmd_enumerate(
    model_args: &ModelArgs,
    kind: Kind,
    strategy: Strategy,
    count_only: bool,
    limit: Option<usize>,
    format: Format,
) -> CliResult {
    let model = Model::new(params_of(model_args)?)?;
    if count_only && limit.is_none() {
        let (count, name, exact) = count_sets(&model, kind, strategy)?;
        if !exact {
            eprintln!("note: the {name} strategy gives a lower bound, not the full census");
        }
        return Ok(Outcome::ok(match format {
            Format::Text => format!("{count}\n"),
            Format::Json => to_json(&CountJson {
                n: model.params().n(),
                m: model.params().m(),
                kind: kind_name(kind),
                strategy: name,
                count,
                exact,
            }),
        }));
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut sets = Vec::new();
    let (name, exact) = visit_sets(&model, kind, strategy, |s| {
        if sets.len() >= limit {
            return ControlFlow::Break(());
        }
        sets.push(s);
        ControlFlow::Continue(())
    })?;
    if !exact {
        eprintln!("note: the {name} strategy gives a lower bound, not the full census");
    }
    let stdout = if count_only {
        format!("{}\n", sets.len())
    } else {
        match format {
            Format::Text => sets
                .iter()
                .map(|s| format!("{}\n", format_set(model.universe(), s)))
                .collect(),
            Format::Json => {
                let docs: Vec<SetDocument> = sets.iter().map(|s| document(&model, s)).collect();
                to_json(&docs)
            }
        }
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_quiver(model: &ModelArgs, kind: QuiverModel, format: QuiverFormat) -> CliResult {
    let params = params_of(model)?;
    let format = match format {
        QuiverFormat::Dot => ExportFormat::Dot,
        QuiverFormat::Json => ExportFormat::Json,
    };
    Ok(Outcome::ok(match kind {
        QuiverModel::Polygon => export_quiver(&build_delta(&params), format),
        QuiverModel::Punctured => export_quiver(&build_gamma(&params), format),
    }))
}

fn write_or_return(out: Option<PathBuf>, text: String) -> CliResult {
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn cmd_render(input: &SetArgs, out: Option<PathBuf>) -> CliResult {
    let (params, arcs) = read_input(input)?;
    let universe = ArcUniverse::new(params);
    let set = ArcSet::from_arcs(&universe, &arcs)?;
    write_or_return(out, render_svg(&universe, &set))
}

/// `A..B` (inclusive) or a single number.
fn parse_range(text: &str) -> std::result::Result<Vec<u32>, Usage> {
    let bad = || Usage(format!("--n-range `{text}`: expected A..B"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v: u32 = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn parse_levels(text: &str) -> std::result::Result<Vec<u32>, Usage> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Usage(format!("--m-list: `{t}` is not a level")))
        })
        .collect()
}

fn cmd_census(
    n_range: &str,
    m_list: &str,
    out: Option<PathBuf>,
    max_generators: usize,
    no_timing: bool,
) -> CliResult {
    let ns = parse_range(n_range)?;
    let ms = parse_levels(m_list)?;
    let mut csv = String::from("n,m,arc_universe_size,kind,strategy,count,exact,elapsed_ms\n");
    for &n in &ns {
        for &m in &ms {
            let model = Model::new(ModelParams::new(n, m)?)?;
            for kind in [Kind::Ptolemy, Kind::Rigid, Kind::Angulation] {
                let strategy = if kind == Kind::Ptolemy && model.len() > model.exhaustive_cap() {
                    Strategy::ClosureGenerated { max_generators }
                } else {
                    Strategy::Exhaustive
                };
                let start = Instant::now();
                let (count, name, exact) = match count_sets(&model, kind, strategy) {
                    Ok(row) => row,
                    Err(Usage(msg)) => {
                        eprintln!("skipping n={n} m={m} {}: {msg}", kind_name(kind));
                        continue;
                    }
                };
                let elapsed = if no_timing { 0 } else { start.elapsed().as_millis() };
                csv.push_str(&format!(
                    "{n},{m},{},{},{name},{count},{exact},{elapsed}\n",
                    model.len(),
                    kind_name(kind)
                ));
            }
        }
    }
    write_or_return(out, csv)
}
