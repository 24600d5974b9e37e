//! `pebbling`: construct graphs, solve configurations, compute pebbling
//! numbers, partition, sweep thresholds, and run the check suite.
//!
//! Exit codes: 0 success, 1 negative answer (unsolvable, not Class 0,
//! failed check), 2 usage or input error, 3 budget exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pebbling_core::acceptance::{self, Level};
use pebbling_core::extremal::{build_bipartite, build_general, extremal_config, LabeledGraph};
use pebbling_core::pebbling::{
    is_class0_with, pebbling_number_with, RootOutcome, SearchOptions, Solver, DEFAULT_LEVEL_BUDGET,
    DEFAULT_STATE_BUDGET,
};
use pebbling_core::star_partition::build_star_partition;
use pebbling_core::threshold::{threshold_sweep, SweepSpec};
use pebbling_core::{generators, io as formats, Family, Graph, SolverKind, TSpec};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "pebbling", version, about = "Graph pebbling toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph family member as an edge list (plus roles and the
    /// unsolvable configuration for the extremal families).
    Construct {
        /// complete, cycle, path, hypercube, petersen, bipartite-extremal,
        /// general-extremal or random-mindeg
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<u32>,
        /// Minimum degree floor for random-mindeg.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Edge list path; `.roles` and `.config` files go next to it.
        /// Without it the edge list goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a configuration can put a pebble on a root.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        root: usize,
        /// Print the move sequence after a positive answer.
        #[arg(long)]
        witness: bool,
        /// Maximum configurations explored.
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: u64,
    },
    /// Compute the pebbling number.
    Pi {
        #[arg(long)]
        graph: PathBuf,
        /// Maximum configurations explored per solvability query.
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: u64,
        /// Maximum configurations enumerated per level.
        #[arg(long, default_value_t = DEFAULT_LEVEL_BUDGET)]
        level_budget: u64,
        /// Only test root 0. Correct only for vertex-transitive graphs.
        #[arg(long)]
        symmetric: bool,
    },
    /// Decide whether the pebbling number equals the vertex count.
    Class0 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_LEVEL_BUDGET)]
        level_budget: u64,
        #[arg(long)]
        symmetric: bool,
    },
    /// Print the greedy star partition.
    Partition {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Estimate solvability probabilities over a grid and write CSV.
    Threshold {
        /// complete, extremal-G or random-mindeg[:FRACTION]
        #[arg(long)]
        family: String,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// abs:T1,T2,..  sqrt:C1,C2,..  or omega:W1,W2,..
        #[arg(long)]
        t_spec: String,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// exact, star or greedy
        #[arg(long, default_value = "exact")]
        solver: String,
        /// Output path; stdout when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the reproducible check suite and print a pass/fail table.
    VerifyPaper {
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pebbling_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 3,
            CliError::Core(pebbling_core::Error::RetriesExhausted { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(formats::read_edge_list(&read(path)?)?)
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("family {family} requires --{flag}")))
}

fn sibling(path: &Path, ext: &str) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(ext);
    PathBuf::from(name)
}

/// Exit status of a successful run: 0, or 1 for a negative answer.
struct Answer(bool);

fn construct(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    d: Option<u32>,
    delta: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> CliResult<Answer> {
    let mut labeled: Option<LabeledGraph> = None;
    let graph = match family {
        "complete" => generators::complete(need(n, "n", family)?)?,
        "cycle" => generators::cycle(need(n, "n", family)?)?,
        "path" => generators::path(need(n, "n", family)?)?,
        "hypercube" => generators::hypercube(need(d, "d", family)?)?,
        "petersen" => generators::petersen(),
        "bipartite-extremal" => {
            let lg = build_bipartite(need(m, "m", family)?)?;
            let g = lg.graph.clone();
            labeled = Some(lg);
            g
        }
        "general-extremal" => {
            let lg = build_general(need(n, "n", family)?)?;
            let g = lg.graph.clone();
            labeled = Some(lg);
            g
        }
        "random-mindeg" => generators::random_connected_min_degree(
            need(n, "n", family)?,
            need(delta, "delta", family)?,
            need(seed, "seed", family)?,
        )?,
        other => return Err(CliError::Usage(format!("unknown family '{other}'"))),
    };
    let edge_list = formats::write_edge_list(&graph);
    let Some(out) = out else {
        print!("{edge_list}");
        return Ok(Answer(true));
    };
    write(&out, &edge_list)?;
    println!("graph: {}", out.display());
    if let Some(lg) = labeled {
        // Small members of the families have no unsolvable configuration.
        let config = extremal_config(&lg).ok();
        let extra = config.as_ref().map(|c| c.role_lines()).unwrap_or_default();
        let roles_path = sibling(&out, ".roles");
        write(&roles_path, &formats::write_roles(&lg, &extra))?;
        println!("roles: {}", roles_path.display());
        if let Some(cfg) = config {
            let config_path = sibling(&out, ".config");
            write(&config_path, &formats::write_configuration(&cfg.config))?;
            println!("config: {}", config_path.display());
            println!("root: {}", cfg.root);
        }
    }
    Ok(Answer(true))
}

fn solve(
    graph: &Path,
    config: &Path,
    root: usize,
    witness: bool,
    budget: u64,
) -> CliResult<Answer> {
    let g = load_graph(graph)?;
    let c = formats::read_configuration(&read(config)?)?;
    if root >= g.n() {
        return Err(CliError::Usage(format!(
            "root {root} out of range for graph on {} vertices",
            g.n()
        )));
    }
    let solver = Solver::new(&g)?.with_state_budget(budget);
    match solver.r_solve(&c, root)? {
        RootOutcome::Solvable(w) => {
            if !w.certifies(&g, &c, root) {
                return Err(CliError::Usage(
                    "internal error: witness failed replay".into(),
                ));
            }
            println!("solvable");
            if witness {
                print!("{}", formats::write_witness(&w));
            }
            Ok(Answer(true))
        }
        RootOutcome::Unsolvable => {
            println!("unsolvable");
            Ok(Answer(false))
        }
    }
}

fn search_options(budget: u64, level_budget: u64, symmetric: bool) -> SearchOptions {
    SearchOptions {
        state_budget: budget,
        level_budget,
        vertex_transitive: symmetric,
    }
}

fn threshold(
    family: &str,
    sizes: Vec<usize>,
    t_spec: &str,
    trials: u64,
    seed: u64,
    solver: &str,
    csv: Option<PathBuf>,
) -> CliResult<Answer> {
    let spec = SweepSpec {
        family: family.parse::<Family>()?,
        sizes,
        t_spec: t_spec.parse::<TSpec>()?,
        trials,
        seed,
        solver: solver.parse::<SolverKind>()?,
    };
    if spec.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let curve = threshold_sweep(&spec)?;
    match csv {
        Some(path) => write(&path, &curve.to_csv())?,
        None => print!("{}", curve.to_csv()),
    }
    Ok(Answer(true))
}

fn run(cli: Cli) -> CliResult<Answer> {
    match cli.command {
        Command::Construct {
            family,
            n,
            m,
            d,
            delta,
            seed,
            out,
        } => construct(&family, n, m, d, delta, seed, out),
        Command::Solve {
            graph,
            config,
            root,
            witness,
            budget,
        } => solve(&graph, &config, root, witness, budget),
        Command::Pi {
            graph,
            budget,
            level_budget,
            symmetric,
        } => {
            let g = load_graph(&graph)?;
            let pi = pebbling_number_with(&g, &search_options(budget, level_budget, symmetric))?;
            println!("{pi}");
            Ok(Answer(true))
        }
        Command::Class0 {
            graph,
            budget,
            level_budget,
            symmetric,
        } => {
            let g = load_graph(&graph)?;
            let class0 = is_class0_with(&g, &search_options(budget, level_budget, symmetric))?;
            println!("{class0}");
            Ok(Answer(class0))
        }
        Command::Partition { graph } => {
            let g = load_graph(&graph)?;
            print!("{}", formats::write_partition(&build_star_partition(&g)?));
            Ok(Answer(true))
        }
        Command::Threshold {
            family,
            sizes,
            t_spec,
            trials,
            seed,
            solver,
            csv,
        } => threshold(&family, sizes, &t_spec, trials, seed, &solver, csv),
        Command::VerifyPaper { level } => {
            let level: Level = level.parse()?;
            let reports = acceptance::run_all(level);
            print!("{}", acceptance::format_table(&reports));
            Ok(Answer(reports.iter().all(|r| r.passed())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli);
    io::stdout().flush().ok();
    match result {
        Ok(Answer(true)) => ExitCode::SUCCESS,
        Ok(Answer(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
