mod repro;
mod spec;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathchroma::chroma::{chromatic_number, export_cnf, k_colourable, DEFAULT_NODE_LIMIT};
use pathchroma::graphs::{
    explicit_sixteen_classes, neighbourhood_graph, parse_dimacs, successor_graph_of, to_dimacs,
    verify_partition, worst_case_successor_graph, WindowMode,
};
use pathchroma::model::{bounds_report, exhaustive_properness_check, is_proper, run_algorithm};
use pathchroma::reduce::{plan_schedule, Pipeline};
use pathchroma::speedup::{iterate_speed_up, output_relation, successor_relation};
use pathchroma::{Budget, Error, Magnitude, Topology};

use crate::repro::Claim;

#[derive(Parser)]
#[command(name = "pathchroma", version, about = "Colour reduction on directed paths")]
struct Cli {
    /// Enumeration budget (evaluations of a base rule).
    #[arg(long, global = true, env = "PATHCHROMA_BUDGET")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm on an instance and check the output.
    Simulate(SimulateArgs),
    /// Print or run a schedule reducing n colours to 3.
    Reduce(ReduceArgs),
    /// Iterate the speed-up transform and report each level.
    Speedup(SpeedupArgs),
    /// Build a graph and write it as DIMACS.
    Graph {
        #[command(subcommand)]
        kind: GraphKind,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Decide colourability of a DIMACS graph.
    Colour(ColourArgs),
    /// Print round and log* bounds for n.
    Bounds {
        /// Palette size: an integer or `pt:h`, `pt:h+d`, `pt:h-d`.
        #[arg(long)]
        n: String,
    },
    /// Re-run every computer-checked claim and print PASS/FAIL lines.
    ReproPaper {
        /// Run a single claim.
        #[arg(long, value_enum)]
        only: Option<Claim>,
    },
}

#[derive(Args)]
struct SimulateArgs {
    /// `ns:k=3[,n=..]`, `cv:k=3`, `shift:k=4`, `4to3`, `id:n=5`, `schedule:n=..`
    #[arg(long)]
    alg: String,
    /// Instance file or `random:n,len,seed`.
    #[arg(long)]
    input: String,
    /// Topology of random instances.
    #[arg(long, default_value = "cycle")]
    topology: Topology,
    /// Print only the summary lines.
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// Plan a schedule for this many colours (integer or `pt:h[+d]`).
    #[arg(long, conflicts_with = "pipeline", required_unless_present = "pipeline")]
    n: Option<String>,
    /// Load a pipeline file instead.
    #[arg(long)]
    pipeline: Option<PathBuf>,
    /// Run the loaded pipeline on this input (file or `random:n,len,seed`).
    #[arg(long, requires = "pipeline")]
    input: Option<String>,
}

#[derive(Args)]
struct SpeedupArgs {
    #[arg(long)]
    alg: String,
    /// Number of speed-ups.
    #[arg(long, short, default_value_t = 1)]
    k: usize,
    /// Print a relation of the last level.
    #[arg(long, value_enum)]
    relation: Option<RelationArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Successor,
    Output,
}

#[derive(Subcommand)]
enum GraphKind {
    /// Windows of 2t+1 colours over [n].
    Neighbourhood {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: usize,
        /// Only require adjacent window entries to differ.
        #[arg(long)]
        adjacent: bool,
    },
    /// The worst-case level-two successor graph.
    WorstCase,
    /// Successor graph of an algorithm after k speed-ups.
    Successor {
        #[arg(long)]
        alg: String,
        #[arg(long, short)]
        k: usize,
    },
    /// The sixteen classes of the worst-case graph, one per line.
    Classes,
}

#[derive(Args)]
struct ColourArgs {
    /// DIMACS .col file.
    #[arg(long)]
    graph: PathBuf,
    /// Number of colours.
    #[arg(long, required_unless_present = "chromatic")]
    k: Option<u32>,
    /// Compute the chromatic number instead.
    #[arg(long, conflicts_with_all = ["k", "cnf"])]
    chromatic: bool,
    /// Emit the DIMACS CNF encoding instead of searching.
    #[arg(long)]
    cnf: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

/// Exit statuses beyond success.
enum Status {
    Ok,
    Refuted,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.map_or(Budget::DEFAULT, Budget);
    match run(cli.command, budget) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Refuted) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded { .. } | Error::NodeLimit { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Refuted
    }
}

fn run(command: Command, budget: Budget) -> Result<Status> {
    let mut out = io::stdout().lock();
    match command {
        Command::Simulate(args) => {
            let alg = spec::parse_algorithm(&args.alg)?;
            let input = spec::parse_input(&args.input, args.topology)?;
            let output = run_algorithm(&alg, &input.instance)?;
            let proper = is_proper(&output);
            if !args.summary {
                write!(out, "{output}")?;
            }
            writeln!(out, "alg={}", alg.name())?;
            if let Some(seed) = input.seed {
                writeln!(out, "seed={seed}")?;
            }
            writeln!(out, "rounds={}", alg.rounds())?;
            writeln!(out, "proper={proper}")?;
            Ok(verdict(proper))
        }
        Command::Reduce(args) => {
            if let Some(n) = args.n {
                let n: Magnitude = n.parse()?;
                let plan = plan_schedule(&n)?;
                write!(out, "{plan}")?;
                writeln!(out, "rounds={}", plan.rounds())?;
                return Ok(Status::Ok);
            }
            let path = args.pipeline.expect("clap requires --n or --pipeline");
            let text = fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let pipeline: Pipeline = text.parse()?;
            writeln!(out, "in={}", pipeline.input().size())?;
            writeln!(out, "out={}", pipeline.output().size())?;
            writeln!(out, "rounds={}", pipeline.rounds())?;
            match args.input {
                Some(spec) => {
                    let input = spec::parse_input(&spec, Topology::Cycle)?;
                    let proper = is_proper(&pipeline.run(&input.instance)?);
                    writeln!(out, "proper={proper}")?;
                    Ok(verdict(proper))
                }
                None => Ok(Status::Ok),
            }
        }
        Command::Speedup(args) => {
            let alg = spec::parse_algorithm(&args.alg)?;
            let levels = iterate_speed_up(&alg, args.k, budget)?;
            let mut all_proper = true;
            for level in &levels {
                let a = level.algorithm();
                let proper = exhaustive_properness_check(a, budget)?;
                all_proper &= proper;
                writeln!(
                    out,
                    "level={} rounds={} palette={} colours={} proper={proper}",
                    level.k(),
                    a.rounds(),
                    a.output().size(),
                    level.colours().len()
                )?;
            }
            let last = levels.last().expect("level 0 is always present");
            match args.relation {
                Some(RelationArg::Successor) => write!(out, "{}", successor_relation(last, budget)?)?,
                Some(RelationArg::Output) => write!(out, "{}", output_relation(last, budget)?)?,
                None => {}
            }
            Ok(verdict(all_proper))
        }
        Command::Graph { kind, output } => {
            let text = match kind {
                GraphKind::Neighbourhood { n, t, adjacent } => {
                    let mode = if adjacent { WindowMode::AdjacentDistinct } else { WindowMode::AllDistinct };
                    to_dimacs(&neighbourhood_graph(n, t, mode)?)
                }
                GraphKind::WorstCase => to_dimacs(&worst_case_successor_graph()),
                GraphKind::Successor { alg, k } => {
                    let alg = spec::parse_algorithm(&alg)?;
                    to_dimacs(&successor_graph_of(&alg, k, budget)?)
                }
                GraphKind::Classes => {
                    let p = explicit_sixteen_classes();
                    let valid = verify_partition(&worst_case_successor_graph(), &p);
                    let mut text = String::new();
                    for class in &p.classes {
                        text.push_str(&format!("{} {}\n", class.name, class.members.join(" ")));
                    }
                    text.push_str(&format!("valid={valid}\n"));
                    text
                }
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(Status::Ok)
        }
        Command::Colour(args) => {
            let text = fs::read_to_string(&args.graph)
                .with_context(|| format!("cannot read {}", args.graph.display()))?;
            let g = parse_dimacs(&text)?;
            if args.chromatic {
                writeln!(out, "chromatic_number={}", chromatic_number(&g, args.node_limit)?)?;
                return Ok(Status::Ok);
            }
            let k = args.k.expect("clap requires --k");
            if args.cnf {
                write!(out, "{}", export_cnf(&g, k))?;
            } else {
                write!(out, "{}", k_colourable(&g, k, args.node_limit)?)?;
            }
            Ok(Status::Ok)
        }
        Command::Bounds { n } => {
            let n: Magnitude = n.parse()?;
            write!(out, "{}", bounds_report(&n)?)?;
            Ok(Status::Ok)
        }
        Command::ReproPaper { only } => {
            let claims = match only {
                Some(c) => vec![c],
                None => Claim::ALL.to_vec(),
            };
            let mut all = true;
            for claim in claims {
                let v = repro::check(claim, budget)?;
                all &= v.passed;
                let tag = if v.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} {}", claim.name(), v.detail)?;
                out.flush()?;
            }
            Ok(verdict(all))
        }
    }
}
