use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use domset::bench::{rows_to_csv, run_bench, BenchConfig};
use domset::generators::{self, fixture, random_connected_graph, RandomSpec, FIXTURES};
use domset::io::{parse_graph, parse_vertex_list, write_graph, GraphFormat};
use domset::oracle::{exact_gamma, DEFAULT_LIMIT};
use domset::{solve, DominationResult, Graph, PurifyMode, SolverConfig, TieBreak, VertexSet};

const SEED_VAR: &str = "DOMSET_SEED";

/// Appends one formatted line to a `String` buffer.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

#[derive(Parser)]
#[command(
    name = "domset",
    version,
    about = "Approximate minimum dominating sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run greedy selection and purification on a graph.
    Solve(SolveArgs),
    /// Check whether a vertex set is dominating and minimal.
    Verify(VerifyArgs),
    /// Compute the domination number exactly (small graphs only).
    Exact(ExactArgs),
    /// Write a generated graph or a fixture.
    Gen(GenArgs),
    /// Run both stages on a batch of seeded random graphs.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Extended,
}

impl From<ModeArg> for PurifyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => PurifyMode::Strict,
            ModeArg::Extended => PurifyMode::Extended,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableOutput {
    Csv,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or the name of a built-in fixture.
    input: String,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct StrategyArgs {
    /// min-index, max-index, random or random:SEED.
    #[arg(long, default_value = "min-index")]
    tie_break: String,
    /// Seed for `--tie-break random`; DOMSET_SEED overrides it.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "extended")]
    purify_mode: ModeArg,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArgs,
    /// Drop redundant vertices from the purified set.
    #[arg(long)]
    ensure_minimal: bool,
    /// Solve each connected component separately.
    #[arg(long)]
    components: bool,
    /// Add the exact domination number when n is at most --limit.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Vertices of the set, comma or space separated.
    #[arg(long)]
    set: String,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Null,
    Random,
    Corona,
    W,
    T,
    TPrime,
    Fixture,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order for path, cycle, complete, null and random; leaves for star.
    #[arg(long)]
    n: Option<usize>,
    /// Edge count for random graphs.
    #[arg(long)]
    m: Option<usize>,
    /// Seed for random graphs; DOMSET_SEED overrides it.
    #[arg(long)]
    seed: Option<u64>,
    /// Base graph for corona, w, t and t-prime, e.g. `cycle:5`.
    #[arg(long)]
    base: Option<String>,
    /// Graph attached by corona and t, e.g. `complete:1`.
    #[arg(long)]
    attach: Option<String>,
    /// Inflation per base edge for w, in edge order.
    #[arg(long)]
    k: Option<String>,
    /// Pendants per base vertex for w.
    #[arg(long)]
    t: Option<String>,
    /// Null-graph order for t-prime.
    #[arg(long)]
    p: Option<usize>,
    /// Fixture name for `--family fixture`.
    #[arg(long)]
    name: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// Order range `LO..HI` (inclusive) or a single order.
    #[arg(long, default_value = "10..18")]
    n: String,
    /// Edges per vertex: m = round(factor * n).
    #[arg(long, default_value_t = 1.3)]
    m_factor: f64,
    /// DOMSET_SEED overrides it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Add exact domination numbers and realized ratios.
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value = "min-index")]
    tie_break: String,
    #[arg(long, value_enum, default_value = "extended")]
    purify_mode: ModeArg,
    #[arg(long, value_enum, default_value = "csv")]
    output: TableOutput,
}

fn env_seed() -> Result<Option<u64>> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("{SEED_VAR} must be an unsigned integer, got `{v}`")),
        Err(_) => Ok(None),
    }
}

fn seed_or(flag: Option<u64>) -> Result<Option<u64>> {
    Ok(env_seed()?.or(flag))
}

fn tie_break(spec: &str, seed: Option<u64>) -> Result<TieBreak> {
    if spec == "random" {
        return Ok(TieBreak::Random(seed_or(seed)?.unwrap_or(0)));
    }
    Ok(spec.parse()?)
}

struct Loaded {
    graph: Graph,
    labels: Option<Vec<String>>,
}

fn load(input: &InputArgs) -> Result<Loaded> {
    let path = Path::new(&input.input);
    if !path.exists() && FIXTURES.contains(&input.input.as_str()) {
        let f = fixture(&input.input)?;
        return Ok(Loaded {
            graph: f.graph,
            labels: Some(f.labels),
        });
    }
    let graph = parse_graph(path, input.format.map(Into::into))
        .with_context(|| format!("reading {}", input.input))?;
    Ok(Loaded {
        graph,
        labels: None,
    })
}

fn print_json(value: &impl Serialize) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn show(vertices: &[usize], labels: &Option<Vec<String>>) -> String {
    match labels {
        Some(l) => {
            let names: Vec<&str> = vertices.iter().map(|&v| l[v].as_str()).collect();
            format!("{vertices:?} ({})", names.join(", "))
        }
        None => format!("{vertices:?}"),
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    input: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: &'a Option<Vec<String>>,
    #[serde(flatten)]
    result: &'a DominationResult,
}

fn solve_cmd(args: SolveArgs) -> Result<()> {
    let loaded = load(&args.input)?;
    let config = SolverConfig {
        tie_break: tie_break(&args.strategy.tie_break, args.strategy.seed)?,
        mode: args.strategy.purify_mode.into(),
        ensure_minimal: args.ensure_minimal,
        components: args.components,
        exact_limit: args.exact.then_some(args.limit),
    };
    let r = solve(&loaded.graph, &config)?.result;
    if args.output == Output::Json {
        return print_json(&SolveOutput {
            input: &args.input.input,
            labels: &loaded.labels,
            result: &r,
        });
    }
    let l = &loaded.labels;
    let mut out = String::new();
    say!(
        out,
        "graph: n = {}, m = {}, components = {}",
        r.n,
        r.m,
        r.components
    );
    say!(out, "tie-break: {}, purify mode: {}", r.tie_break, r.mode);
    say!(
        out,
        "greedy |S| = {}: {}",
        r.greedy_size(),
        show(&r.greedy_set, l)
    );
    say!(
        out,
        "purified |S*| = {}: {}",
        r.purified_size(),
        show(&r.purified_set, l)
    );
    if !r.sweep_removed.is_empty() {
        say!(out, "sweep removed: {}", show(&r.sweep_removed, l));
    }
    say!(
        out,
        "tied pairs: {}, forest trees: {}",
        r.tied_pairs.len(),
        r.forest_trees
    );
    for c in &r.certificates {
        if c.is_granted() {
            say!(out, "certificate {:?}: {}", c.kind, c.detail);
        } else {
            say!(out, "no certificate: {}", c.detail);
        }
    }
    let rep = &r.report;
    say!(
        out,
        "Parekh bound {:.4}, gamma bounds [{}, {}]",
        rep.parekh_bound,
        rep.gamma_lower,
        rep.gamma_upper
    );
    if let (Some(g), Some(w)) = (r.gamma, &r.gamma_witness) {
        say!(out, "gamma = {g}, witness {}", show(w, l));
        say!(
            out,
            "ratios: greedy {:.4}, overall {:.4}; ln(D+1)+1 = {:.4}, (D+1)/2 = {:.4}",
            rep.realized_greedy_ratio.unwrap_or(f64::NAN),
            rep.realized_ratio.unwrap_or(f64::NAN),
            rep.eq4,
            rep.eq5
        );
    }
    for note in &r.notes {
        say!(out, "note: {note}");
    }
    say!(
        out,
        "time: greedy {:.3} ms, forest {:.3} ms, purify {:.3} ms, total {:.3} ms",
        r.timings.greedy_ms,
        r.timings.forest_ms,
        r.timings.purify_ms,
        r.timings.total_ms
    );
    emit(&out)
}

#[derive(Serialize)]
struct VerifyOutput {
    set: Vec<usize>,
    dominating: bool,
    minimal: bool,
    independent: bool,
    undominated: Vec<usize>,
    redundant: Vec<usize>,
}

fn verify_cmd(args: VerifyArgs) -> Result<()> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    let vertices = parse_vertex_list(&args.set)?;
    let set = VertexSet::from_vertices(g.n(), vertices)?;
    let undominated = g
        .vertices()
        .filter(|&v| !set.contains(v) && !g.neighbors(v).iter().any(|&u| set.contains(u)))
        .collect();
    let redundant = set
        .iter()
        .filter(|&v| {
            let mut rest = set.clone();
            rest.remove(v);
            g.is_dominating(&rest)
        })
        .collect();
    let v = VerifyOutput {
        set: set.to_vec(),
        dominating: g.is_dominating(&set),
        minimal: g.is_minimal_dominating(&set),
        independent: g.is_independent(&set),
        undominated,
        redundant,
    };
    if args.output == Output::Json {
        return print_json(&v);
    }
    let mut out = String::new();
    say!(out, "set: {:?}", v.set);
    say!(out, "dominating: {}", v.dominating);
    say!(out, "minimal: {}", v.minimal);
    say!(out, "independent: {}", v.independent);
    if !v.undominated.is_empty() {
        say!(out, "undominated: {:?}", v.undominated);
    }
    if !v.redundant.is_empty() {
        say!(out, "redundant: {:?}", v.redundant);
    }
    emit(&out)
}

fn exact_cmd(args: ExactArgs) -> Result<()> {
    let loaded = load(&args.input)?;
    let r = exact_gamma(&loaded.graph, args.limit)?;
    if args.output == Output::Json {
        return print_json(&r);
    }
    let mut out = String::new();
    say!(out, "gamma = {}", r.gamma);
    say!(out, "witness: {}", show(&r.witness, &loaded.labels));
    say!(out, "explored: {}", r.explored);
    emit(&out)
}

/// `path:4`, `cycle:5`, `complete:3`, `star:4` or `null:2`.
fn small_graph(spec: &str) -> Result<Graph> {
    let (kind, size) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("graph spec `{spec}` must look like `cycle:5`"))?;
    let size: usize = size
        .parse()
        .with_context(|| format!("bad size in graph spec `{spec}`"))?;
    Ok(match kind {
        "path" => generators::path(size),
        "cycle" => generators::cycle(size)?,
        "complete" => generators::complete(size),
        "star" => generators::star(size),
        "null" => generators::null(size),
        _ => bail!("unknown graph kind `{kind}` (path, cycle, complete, star, null)"),
    })
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("--{flag} is required for --family {family}"))
}

fn generate(args: &GenArgs) -> Result<Graph> {
    let n = || required(args.n, "n", "this family");
    let base = || small_graph(&required(args.base.clone(), "base", "this family")?);
    let attach = || small_graph(&required(args.attach.clone(), "attach", "this family")?);
    let list = |value: &Option<String>, flag| -> Result<Vec<usize>> {
        Ok(parse_vertex_list(&required(value.clone(), flag, "w")?)?)
    };
    Ok(match args.family {
        Family::Path => generators::path(n()?),
        Family::Cycle => generators::cycle(n()?)?,
        Family::Complete => generators::complete(n()?),
        Family::Star => generators::star(n()?),
        Family::Null => generators::null(n()?),
        Family::Random => random_connected_graph(RandomSpec {
            n: n()?,
            m: required(args.m, "m", "random")?,
            seed: seed_or(args.seed)?.unwrap_or(0),
        })?,
        Family::Corona => generators::corona(&base()?, &attach()?),
        Family::W => generators::w_family(&base()?, &list(&args.k, "k")?, &list(&args.t, "t")?)?,
        Family::T => generators::t_family(&base()?, &attach()?),
        Family::TPrime => generators::t_prime_family(&base()?, required(args.p, "p", "t-prime")?)?,
        Family::Fixture => fixture(&required(args.name.clone(), "name", "fixture")?)?.graph,
    })
}

fn gen_cmd(args: GenArgs) -> Result<()> {
    let text = write_graph(&generate(&args)?, args.format.into());
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => emit(&text)?,
    }
    Ok(())
}

fn order_range(spec: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .with_context(|| format!("bad order `{s}` in --n"))
    };
    match spec.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => {
            let n = parse(spec)?;
            Ok((n, n))
        }
    }
}

#[derive(Serialize)]
struct BenchJson<'a> {
    config: &'a BenchConfig,
    #[serde(flatten)]
    report: &'a domset::bench::BenchReport,
}

fn bench_cmd(args: BenchArgs) -> Result<()> {
    let (n_min, n_max) = order_range(&args.n)?;
    let seed = seed_or(Some(args.seed))?.unwrap_or(0);
    let config = BenchConfig {
        count: args.count,
        n_min,
        n_max,
        m_factor: args.m_factor,
        seed,
        exact: args.exact,
        tie_break: tie_break(&args.tie_break, Some(seed))?,
        mode: args.purify_mode.into(),
        threads: args.threads,
    };
    let report = run_bench(&config)?;
    for skip in &report.skipped {
        eprintln!(
            "skipped instance {} (n = {}, m = {}): {}",
            skip.no, skip.n, skip.m, skip.reason
        );
    }
    match args.output {
        TableOutput::Csv => {
            emit(&rows_to_csv(&report.rows)?)?;
            if let Some(mean) = report.mean_reduction_pct {
                eprintln!(
                    "mean reduction: {mean:.2}% over {} instances",
                    report.rows.len()
                );
            }
        }
        TableOutput::Json => print_json(&BenchJson {
            config: &config,
            report: &report,
        })?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(a) => solve_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Exact(a) => exact_cmd(a),
        Command::Gen(a) => gen_cmd(a),
        Command::Bench(a) => bench_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = e
                .downcast_ref::<domset::Error>()
                .is_some_and(domset::Error::is_internal);
            ExitCode::from(if internal { 2 } else { 1 })
        }
    }
}
