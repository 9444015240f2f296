use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cclosure::cliques::maximal_cliques;
use cclosure::error::Error;
use cclosure::format::{read_file, serialize, GraphFile};
use cclosure::generate::{generate, Model};
use cclosure::kernel::{kernelize, BipartiteMode, KernelOptions};
use cclosure::oracle::{Oracle, HARD_LIMIT};
use cclosure::ramsey::{clique_or_independent_set, thresholds, CliqueOrIs};
use cclosure::solver::{solve_ds, solve_tds};
use cclosure::verify::{self, VerifyConfig, SCHEMA};
use cclosure::{compute_closure, Instance, KernelOutcome, Problem, Result, VertexSet, Witness};

#[derive(Parser)]
#[command(
    name = "cclosure",
    version,
    about = "Kernels and exact solvers for c-closed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closure `c` of a graph.
    Closure {
        input: PathBuf,
        /// Full report as JSON, including the witness pair.
        #[arg(long)]
        json: bool,
    },
    /// List maximal cliques, one per line.
    Cliques {
        input: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Ramsey thresholds, and a clique or independent set when a graph is given.
    Ramsey {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        input: Option<PathBuf>,
    },
    /// Reduce an instance; prints the decision or writes the reduced instance.
    Kernelize {
        #[arg(long)]
        problem: Problem,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        r: usize,
        /// Closure bound; computed from the input when absent.
        #[arg(long)]
        c: Option<usize>,
        /// Use the bipartite kernel (ds, bwtds, im).
        #[arg(long)]
        bipartite: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Closure)]
        mode: ModeArg,
        /// Write the outcome and rule trace here as JSON.
        #[arg(long, value_name = "PATH")]
        emit_trace: Option<PathBuf>,
        #[arg(long)]
        require_witness: bool,
        input: PathBuf,
        /// Reduced instance is written here.
        output: PathBuf,
    },
    /// Decide an instance exactly and print a witness.
    Solve {
        #[arg(long)]
        problem: Problem,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Method::Branch)]
        method: Method,
        input: PathBuf,
    },
    /// Random instances checked against the exhaustive oracle.
    Verify {
        #[arg(long)]
        problem: Problem,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Largest threshold drawn for tds and bwtds.
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long)]
        bipartite: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Closure)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random or structured graph.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 2)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Delta,
    Closure,
}

impl From<ModeArg> for BipartiteMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Delta => BipartiteMode::Delta,
            ModeArg::Closure => BipartiteMode::Closure,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Branch,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Cliques,
    Theta,
    Er,
    ClosureRepair,
}

enum Failure {
    Disagreement,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => 3,
                Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Closure { input, json } => {
            let f = read_file(&input)?;
            let report = compute_closure(&f.graph);
            if json {
                print_json(&report);
            } else {
                println!("c={}", report.c);
            }
        }
        Command::Cliques { input, count_only } => {
            let cliques = maximal_cliques(&read_file(&input)?.graph);
            if count_only {
                println!("{}", cliques.len());
            } else {
                for cl in &cliques {
                    println!("{}", join(cl));
                }
            }
        }
        Command::Ramsey { c, a, b, input } => {
            let t = thresholds(c, a, b)?;
            println!("R={} Q={} Q'={} Q''={}", t.r_c, t.q_c, t.q1_c, t.q2_c);
            if let Some(path) = input {
                match clique_or_independent_set(&read_file(&path)?.graph, c, a, b)? {
                    CliqueOrIs::Clique(s) => println!("clique {}", join(&s)),
                    CliqueOrIs::IndependentSet(s) => println!("independent {}", join(&s)),
                }
            }
        }
        Command::Kernelize {
            problem,
            k,
            r,
            c,
            bipartite,
            mode,
            emit_trace,
            require_witness,
            input,
            output,
        } => {
            let f = read_file(&input)?;
            let inst = instance(problem, f, k, r);
            let c = c.unwrap_or_else(|| compute_closure(&inst.graph).c);
            let opts = KernelOptions {
                require_witness,
                bipartite: bipartite.then(|| mode.into()),
                ..Default::default()
            };
            let out = kernelize(&inst, c, &opts)?;
            match &out {
                KernelOutcome::Decided {
                    answer, witness, ..
                } => {
                    println!("decided {}", yes_no(*answer));
                    if let Some(w) = witness {
                        println!("witness {}", witness_text(w));
                    }
                }
                KernelOutcome::Reduced { instance, .. } => {
                    write_instance(&output, instance)?;
                    println!(
                        "reduced n={} m={} k={}",
                        instance.graph.vertex_count(),
                        instance.graph.edge_count(),
                        instance.k
                    );
                }
            }
            if let Some(path) = emit_trace {
                #[derive(Serialize)]
                struct TraceOut<'a> {
                    schema: u32,
                    c: usize,
                    #[serde(flatten)]
                    outcome: &'a KernelOutcome,
                }
                let text = serde_json::to_string_pretty(&TraceOut {
                    schema: SCHEMA,
                    c,
                    outcome: &out,
                })
                .expect("serializable");
                fs::write(path, text + "\n").map_err(Error::from)?;
            }
        }
        Command::Solve {
            problem,
            k,
            r,
            method,
            input,
        } => {
            let f = read_file(&input)?;
            let inst = instance(problem, f, k, r);
            let witness = if method == Method::Oracle {
                Oracle::new(HARD_LIMIT).solve(&inst)?
            } else {
                let c = compute_closure(&inst.graph).c;
                let sol = match problem {
                    Problem::DominatingSet => solve_ds(&inst.graph, c, k)?,
                    Problem::ThresholdDominatingSet => solve_tds(&inst.graph, c, r, k)?,
                    _ => {
                        return Err(Error::InvalidArgument(
                            "the branching solver handles ds and tds; use --method oracle".into(),
                        )
                        .into())
                    }
                };
                eprintln!(
                    "nodes={} leaves={} max_branch_width={}",
                    sol.stats.nodes, sol.stats.leaves, sol.stats.max_branch_width
                );
                sol.witness
            };
            println!("{}", yes_no(witness.is_some()));
            if let Some(w) = witness {
                println!("witness {}", witness_text(&w));
            }
        }
        Command::Verify {
            problem,
            n_max,
            trials,
            seed,
            r,
            k_max,
            bipartite,
            mode,
            json,
        } => {
            let cfg = VerifyConfig {
                bipartite: bipartite.then(|| mode.into()),
                r_max: r,
                k_max,
                ..VerifyConfig::new(problem, n_max, trials, seed)
            };
            let report = verify::run(&cfg)?;
            if json {
                print_json(&report);
            } else {
                println!("{}/{} trials agree", report.passed, report.trials.len());
                for rep in &report.reproducers {
                    println!("trial {}: {}", rep.index, rep.failures.join("; "));
                    print!("{}", rep.graph);
                }
            }
            if !report.all_agree() {
                if json {
                    for rep in &report.reproducers {
                        eprint!("{}", rep.graph);
                    }
                }
                return Err(Failure::Disagreement);
            }
        }
        Command::Gen {
            model,
            count,
            size,
            n,
            p,
            c,
            seed,
            output,
        } => {
            let model = match model {
                ModelArg::Cliques => Model::DisjointCliques { count, size },
                ModelArg::Theta => Model::Theta { paths: count },
                ModelArg::Er => Model::Er { n, p },
                ModelArg::ClosureRepair => Model::ClosureRepair { n, p, c },
            };
            let text = serialize(&generate(&model, seed)?, None, None);
            match output {
                Some(path) => fs::write(path, text).map_err(Error::from)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn instance(problem: Problem, f: GraphFile, k: usize, r: usize) -> Instance {
    let mut inst = Instance::new(problem, f.graph, k);
    if problem.has_threshold() {
        inst = inst.with_r(r);
    }
    if let Some(col) = f.coloring {
        inst = inst.with_coloring(col);
    }
    if let Some(parts) = f.bipartition {
        inst = inst.with_bipartition(parts);
    }
    inst
}

fn write_instance(path: &Path, inst: &Instance) -> Result<()> {
    let text = serialize(
        &inst.graph,
        inst.coloring.as_ref(),
        inst.bipartition.as_ref(),
    );
    let mut head = format!("# problem {} k {}", inst.problem, inst.k);
    if inst.problem.has_threshold() {
        head.push_str(&format!(" r {}", inst.threshold()));
    }
    fs::write(path, format!("{head}\n{text}"))?;
    Ok(())
}

fn witness_text(w: &Witness) -> String {
    match (w.vertex_set(), w.edge_set()) {
        (Some(s), _) => join(s),
        (_, Some(edges)) => edges
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" "),
        _ => String::new(),
    }
}

fn join(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}
