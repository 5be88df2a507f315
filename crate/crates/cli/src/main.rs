//! `aspl`: generate, evaluate, bound and optimize regular graphs of
//! diameter 3.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aspl_core::{
    graph, io, optimize, Algorithm, BoundsReport, Error, Graph, GraphStats, RunConfig, RunReport,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "aspl", version, about)]
struct Cli {
    /// Directory for output files whose path is not given explicitly.
    #[arg(long, global = true, env = "ASPL_OUT_DIR", default_value = ".")]
    out_dir: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a random d-regular graph of order n.
    Gen(GenArgs),
    /// Exact ASPL, diameter and motif statistics of an edge-list file.
    Eval(InputArgs),
    /// Inclusion-exclusion bounds and the diameter-3 ASPL identity.
    Bounds(BoundsArgs),
    /// Iterative first improvement.
    Ifi(OptimizeArgs),
    /// Simulated annealing.
    Sa(OptimizeArgs),
    /// Simulated annealing followed by iterative first improvement.
    Pipeline(OptimizeArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(short, long)]
    n: usize,
    #[arg(short, long)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Randomizing switches (default: 10 per edge).
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Largest truncation order.
    #[arg(long, default_value_t = 3)]
    t_max: usize,
}

#[derive(Debug, Args)]
struct OptimizeArgs {
    /// Start from this graph instead of a random one.
    #[arg(short, long, conflicts_with_all = ["n", "d"])]
    input: Option<PathBuf>,
    #[arg(short, long, requires = "d")]
    n: Option<usize>,
    #[arg(short, long, requires = "n")]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Annealing steps (evaluated neighbourhoods).
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: u64,
    /// Cap on first-improvement evaluations (default: run to a local optimum).
    #[arg(long)]
    ifi_max_evaluations: Option<u64>,
    /// Wall-clock limit per phase, in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = aspl_core::anneal::DEFAULT_SCHEDULE_C)]
    schedule_c: f64,
    #[arg(long, default_value_t = 50)]
    sort_interval: u64,
    /// Independent runs with seeds seed, seed+1, …; the best is kept.
    #[arg(long, default_value_t = 1)]
    runs: u64,
    /// Log progress to stderr every this many evaluations.
    #[arg(long)]
    log_every: Option<u64>,
    /// Keep at most one trajectory point per this many evaluations.
    #[arg(long, default_value_t = 10_000)]
    trajectory_stride: u64,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Report path (default: standard output).
    #[arg(long)]
    report: Option<PathBuf>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible { .. }
        | Error::TooLarge { .. }
        | Error::DiameterMismatch { .. }
        | Error::Saturated { .. } => 2,
        Error::Io(_) | Error::Parse { .. } | Error::InvalidGraph(_) => 3,
        Error::Overflow(_) | Error::Invariant(_) => 4,
    }
}

/// Error with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let log_level = match &cli.command {
        Command::Ifi(a) | Command::Sa(a) | Command::Pipeline(a) if a.log_every.is_some() => "info",
        _ => "warn",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(log_level))
        .target(env_logger::Target::Stderr)
        .init();

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out_dir = cli.out_dir;
    match cli.command {
        Command::Gen(a) => cmd_gen(&out_dir, a),
        Command::Eval(a) => cmd_eval(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Ifi(a) => cmd_optimize(&out_dir, Algorithm::Ifi, a),
        Command::Sa(a) => cmd_optimize(&out_dir, Algorithm::Sa, a),
        Command::Pipeline(a) => cmd_optimize(&out_dir, Algorithm::Pipeline, a),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn resolve(out_dir: &Path, explicit: Option<PathBuf>, default_name: String) -> PathBuf {
    explicit.unwrap_or_else(|| out_dir.join(default_name))
}

#[derive(Serialize)]
struct GenOutput<'a> {
    path: &'a Path,
    seed: u64,
    #[serde(flatten)]
    stats: GraphStats,
}

fn cmd_gen(out_dir: &Path, a: GenArgs) -> Result<(), Failure> {
    let base = Graph::new_base_regular(a.n, a.d)?;
    let rounds = a.rounds.unwrap_or_else(|| graph::default_rounds(&base));
    let g = graph::randomize(base, rounds, a.seed);
    let path = resolve(
        out_dir,
        a.out,
        format!("random-n{}-d{}-s{}.edges", a.n, a.d, a.seed),
    );
    io::save(&g, &path)?;
    print_json(&GenOutput {
        path: &path,
        seed: a.seed,
        stats: GraphStats::new(&g)?,
    });
    Ok(())
}

#[derive(Serialize)]
struct EvalOutput {
    regular: bool,
    bounds_applicable: bool,
    #[serde(flatten)]
    stats: GraphStats,
}

fn cmd_eval(a: InputArgs) -> Result<(), Failure> {
    let g = io::load(&a.input)?;
    let stats = GraphStats::new(&g)?;
    let regular = stats.d.is_some();
    if !regular {
        log::warn!(
            "{} is not regular; Moore bound and gap omitted",
            a.input.display()
        );
    }
    print_json(&EvalOutput {
        regular,
        bounds_applicable: regular && stats.is_diameter3(),
        stats,
    });
    Ok(())
}

fn cmd_bounds(a: BoundsArgs) -> Result<(), Failure> {
    if a.t_max == 0 {
        return Err(usage("--t-max must be at least 1"));
    }
    let g = io::load(&a.input)?;
    if g.order() < 2 {
        return Err(usage("bounds need at least two nodes"));
    }
    let report = BoundsReport::<f64>::new(&g, a.t_max)?;
    if !report.diameter_verified {
        log::warn!(
            "diameter is {}, not 3: equality inapplicable",
            report.diameter
        );
    }
    print_json(&report);
    Ok(())
}

#[derive(Serialize)]
struct RunSummary {
    seed: u64,
    final_g: i64,
    final_aspl: Option<f64>,
}

#[derive(Serialize)]
struct MultiRunReport<'a> {
    best: &'a RunReport,
    runs: Vec<RunSummary>,
}

fn cmd_optimize(out_dir: &Path, algorithm: Algorithm, a: OptimizeArgs) -> Result<(), Failure> {
    if a.runs == 0 {
        return Err(usage("--runs must be at least 1"));
    }
    if a.schedule_c <= 0.0 {
        return Err(usage("--schedule-c must be positive"));
    }
    if a.time_limit.is_some_and(|t| t <= 0.0) {
        return Err(usage("--time-limit must be positive"));
    }
    let input = match &a.input {
        Some(path) => {
            let g = io::load(path)?;
            if g.regular_degree().is_none() {
                return Err(usage(format!("{} is not a regular graph", path.display())));
            }
            Some(g)
        }
        None => None,
    };
    let (n, d) = match (&input, a.n, a.d) {
        (Some(g), _, _) => (g.order(), g.regular_degree().unwrap_or(0)),
        (None, Some(n), Some(d)) => {
            graph::check_feasible(n, d)?;
            (n, d)
        }
        _ => return Err(usage("give either --input or both --n and --d")),
    };

    let config_for = |seed: u64| {
        let mut cfg = RunConfig::new(algorithm, seed);
        cfg.sa.max_steps = a.max_steps;
        cfg.sa.schedule_c = a.schedule_c;
        cfg.sa.time_limit_secs = a.time_limit;
        cfg.sa.trajectory_stride = a.trajectory_stride;
        cfg.sa.log_every = a.log_every;
        cfg.ifi.sort_interval = a.sort_interval;
        cfg.ifi.max_evaluations = a.ifi_max_evaluations;
        cfg.ifi.time_limit_secs = a.time_limit;
        cfg.ifi.trajectory_stride = a.trajectory_stride;
        cfg.ifi.log_every = a.log_every;
        cfg.record_wall_time = a.timing;
        cfg
    };
    let one_run = |seed: u64| -> aspl_core::Result<(Graph, RunReport)> {
        let start = match &input {
            Some(g) => g.clone(),
            None => graph::random_regular(n, d, seed)?,
        };
        optimize(start, &config_for(seed))
    };

    let seeds: Vec<u64> = (0..a.runs).map(|i| a.seed.wrapping_add(i)).collect();
    let results: Vec<aspl_core::Result<(Graph, RunReport)>> = std::thread::scope(|s| {
        let handles: Vec<_> = seeds
            .iter()
            .map(|&seed| s.spawn(move || one_run(seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("run thread panicked"))
            .collect()
    });
    let mut runs = Vec::with_capacity(results.len());
    for r in results {
        runs.push(r?);
    }
    let best = runs
        .iter()
        .min_by(|(_, x), (_, y)| {
            let key =
                |r: &RunReport| (r.final_stats.g, r.final_stats.aspl.unwrap_or(f64::INFINITY));
            let (kx, ky) = (key(x), key(y));
            kx.0.cmp(&ky.0)
                .then(kx.1.total_cmp(&ky.1))
                .then(x.seed.cmp(&y.seed))
        })
        .expect("at least one run");

    let name = match algorithm {
        Algorithm::Ifi => "ifi",
        Algorithm::Sa => "sa",
        Algorithm::Pipeline => "pipeline",
    };
    let path = resolve(
        out_dir,
        a.out,
        format!("{name}-n{n}-d{d}-s{}.edges", best.1.seed),
    );
    io::save(&best.0, &path)?;

    let json = if runs.len() == 1 {
        best.1.to_json()
    } else {
        let summary = MultiRunReport {
            best: &best.1,
            runs: runs
                .iter()
                .map(|(_, r)| RunSummary {
                    seed: r.seed,
                    final_g: r.final_stats.g,
                    final_aspl: r.final_stats.aspl,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&summary).expect("serializable")
    };
    match a.report {
        Some(p) => std::fs::write(&p, json + "\n").map_err(Error::from)?,
        None => println!("{json}"),
    }
    Ok(())
}
