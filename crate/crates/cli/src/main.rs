//! `graphon`: build graphon specs, sample G(n,W), compute densities and
//! entropies, emit plot data, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 on assertion or computation failure, 2 on
//! usage errors (including missing seeds for randomized runs).

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use graphon_cli::{
    build_spec, density_json, entropy_csv, entropy_json, entropy_rows, method_is_random,
    parse_n_range, parse_target, require_seed, sample_lines, suites,
};
use graphon_lab::GraphonSpec;

#[derive(Parser)]
#[command(name = "graphon", version, about = "graphon constructions, samplers, densities and entropy")]
struct Cli {
    /// RNG seed; required for every randomized run
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output file (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<String>,

    /// Output format where both are supported
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graphon spec as JSON
    Build(BuildArgs),
    /// Sample graphs from a graphon spec (one edge-list line per graph)
    Sample(SampleArgs),
    /// Compute a subgraph/bigraph density
    Density(DensityArgs),
    /// Compute or estimate Ent(G(n,W)) over a range of n
    Entropy(EntropyArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Emit CSV curve data (same engine as `entropy`, CSV always)
    Curve(EntropyArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Construction kind
    #[arg(value_enum)]
    kind: Kind,
    /// Step measures, comma-separated (step)
    #[arg(long)]
    measures: Option<String>,
    /// Step value matrix, rows semicolon-separated (step)
    #[arg(long)]
    values: Option<String>,
    /// Truncation depth (diagonal-block)
    #[arg(long)]
    depth: Option<u32>,
    /// Rate function: inverse-n | exp-decay (transversal)
    #[arg(long)]
    alpha: Option<String>,
    /// Number of materialized interval groups (transversal)
    #[arg(long, default_value_t = 64)]
    k_max: u32,
    /// Forbidden K_{t,t} parameter (ktt-mixture)
    #[arg(long)]
    t: Option<usize>,
    /// Enumeration cap on block vertex count (ktt-mixture)
    #[arg(long)]
    nmax: Option<usize>,
    /// Explicit block lengths, comma-separated (ktt-mixture)
    #[arg(long)]
    lengths: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Step,
    DiagonalBlock,
    Transversal,
    KttMixture,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Step => "step",
            Kind::DiagonalBlock => "diagonal-block",
            Kind::Transversal => "transversal",
            Kind::KttMixture => "ktt-mixture",
        }
    }
}

#[derive(Args)]
struct SampleArgs {
    /// Graphon spec JSON file
    #[arg(long)]
    graphon: String,
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Number of graphs
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Append the latent assignment as JSON per line
    #[arg(long)]
    with_latent: bool,
}

#[derive(Args)]
struct DensityArgs {
    /// hom | induced | induced-graphon | bigraph
    #[arg(long)]
    mode: String,
    /// Pattern file (graph text; bigraph text for --mode bigraph)
    #[arg(long)]
    pattern: String,
    /// Target file: graph text or graphon spec JSON
    #[arg(long)]
    target: String,
    /// Monte Carlo trials (exact computation when omitted)
    #[arg(long)]
    trials: Option<u64>,
}

#[derive(Args)]
struct EntropyArgs {
    /// Graphon spec JSON file
    #[arg(long)]
    graphon: String,
    /// Vertex count range A:B (inclusive) or a single N
    #[arg(long)]
    n: String,
    /// exact | plugin | transversal-lb | diagonal-exact
    #[arg(long)]
    method: String,
    /// Monte Carlo trials / sample count
    #[arg(long)]
    trials: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Trial count override
    #[arg(long)]
    trials: Option<u64>,
    /// Vertex count override
    #[arg(long)]
    n: Option<usize>,
    /// Maximum n for the janson suite
    #[arg(long)]
    nmax: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Uniformity,
    LemmaConditional,
    Thm1Chain,
    Eq1Limit,
    LemmaApprox,
    Janson,
    Remark2,
    SupportBound,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // distinguish usage-level errors (bad config, missing seed,
            // infeasible bounds) from assertion failures
            match e {
                graphon_lab::Error::Parse(_)
                | graphon_lab::Error::Unsupported(_)
                | graphon_lab::Error::SizeBound(_)
                | graphon_lab::Error::Json(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> graphon_lab::Result<ExitCode> {
    match &cli.command {
        Command::Build(args) => {
            let spec = build_spec(
                args.kind.as_str(),
                args.measures.as_deref(),
                args.values.as_deref(),
                args.depth,
                args.alpha.as_deref(),
                args.k_max,
                args.t,
                args.nmax,
                args.lengths.as_deref(),
            )?;
            emit(cli, &spec.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample(args) => {
            let seed = require_seed(cli.seed)?;
            let spec = read_spec(&args.graphon)?;
            let lines = sample_lines(&spec, args.n, args.count, seed, args.with_latent)?;
            emit(cli, &lines)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Density(args) => {
            if args.trials.is_some() {
                require_seed(cli.seed)?;
            }
            let pattern = fs::read_to_string(&args.pattern).map_err(io_err)?;
            let target_text = fs::read_to_string(&args.target).map_err(io_err)?;
            let target = parse_target(&target_text)?;
            let json = density_json(&args.mode, &pattern, &target, args.trials, cli.seed)?;
            emit(cli, &json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Entropy(args) | Command::Curve(args) => {
            if method_is_random(&args.method) {
                require_seed(cli.seed)?;
            }
            let spec = read_spec(&args.graphon)?;
            let range = parse_n_range(&args.n).map_err(graphon_lab::Error::Parse)?;
            let rows = entropy_rows(&spec, range, &args.method, args.trials, cli.seed)?;
            let is_curve = matches!(cli.command, Command::Curve(_));
            let text = match (is_curve, cli.format) {
                (true, _) | (false, Format::Csv) => entropy_csv(&rows),
                (false, Format::Json) => entropy_json(&rows),
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let report = run_suite(args, cli.seed)?;
            emit(cli, &report.render())?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_suite(args: &VerifyArgs, seed: Option<u64>) -> graphon_lab::Result<suites::SuiteReport> {
    match args.suite {
        Suite::Uniformity => {
            suites::uniformity(args.trials.unwrap_or(100_000), require_seed(seed)?)
        }
        Suite::LemmaConditional => suites::lemma_conditional(
            args.trials.unwrap_or(10_000),
            args.n.unwrap_or(12),
            require_seed(seed)?,
        ),
        Suite::Thm1Chain => suites::thm1_chain(args.trials.unwrap_or(1000), require_seed(seed)?),
        Suite::Eq1Limit => suites::eq1_limit(require_seed(seed)?),
        Suite::LemmaApprox => {
            suites::lemma_approx(args.trials.unwrap_or(200), require_seed(seed)?)
        }
        Suite::Janson => suites::janson(args.nmax.unwrap_or(9)),
        Suite::Remark2 => suites::remark2(
            args.trials.unwrap_or(10_000),
            args.n.unwrap_or(6),
            require_seed(seed)?,
        ),
        Suite::SupportBound => {
            suites::support_bound(args.trials.unwrap_or(20), require_seed(seed)?)
        }
    }
}

fn read_spec(path: &str) -> graphon_lab::Result<GraphonSpec> {
    GraphonSpec::from_json(&fs::read_to_string(path).map_err(io_err)?)
}

fn io_err(e: std::io::Error) -> graphon_lab::Error {
    graphon_lab::Error::Parse(format!("i/o: {e}"))
}

fn emit(cli: &Cli, text: &str) -> graphon_lab::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}
