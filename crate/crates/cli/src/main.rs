//! `eulerswitch` command-line tool.
//!
//! Exit codes: 0 success, 2 infeasible or absent result, 1 usage or I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eulerswitch::codec::{decode_edgelist, decode_graph6, encode_edgelist, encode_graph6};
use eulerswitch::explorer::{self, HamiltonOutcome};
use eulerswitch::generator::{construction_for, random_eulerian};
use eulerswitch::hardness;
use eulerswitch::transform::{switch_distance, transform};
use eulerswitch::{generate, in_p, named, Error, Graph, SwitchSequence};

const SCHEMA: &str = "eulerswitch/1";

#[derive(Parser)]
#[command(name = "eulerswitch", version, about = "Eulerian graphs under edge switches")]
struct Cli {
    /// Write a JSON report here as well.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Paths,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Labeled,
    Unlabeled,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Connectivity,
    Hamiltonicity,
    Stats,
}

#[derive(Subcommand)]
enum Command {
    /// Build an Eulerian graph with n vertices and m edges.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Classify a graph, or an (n, m) pair when no graph is given.
    Check {
        graph: Option<String>,
        #[arg(long, requires = "m", conflicts_with = "graph")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
    },
    /// 2-switch sequence from G to H with every step Eulerian.
    Transform {
        source: String,
        target: String,
        /// Write the move log here instead of standard output.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Replay a move log from G and check it ends at H through Eulerian graphs.
    Verify {
        source: String,
        log: PathBuf,
        target: String,
    },
    /// Fewest 2-switches between two Eulerian graphs.
    Distance {
        source: String,
        target: String,
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
    },
    /// Hang n pendant paths (or a tree with n leaves) off a vertex of a cubic graph.
    Gadget {
        base: String,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, value_enum, default_value = "paths")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Fewest 1-switches making a graph Eulerian.
    #[command(name = "solve-1switch")]
    Solve1Switch {
        graph: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Compare Hamiltonicity, decomposition and gadget solvability for a cubic graph.
    ReduceCheck { base: String },
    /// Enumerate Eulerian graphs with (n, m) and examine their 2-switch graph.
    Explore {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "labeled")]
        mode: Mode,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "connectivity,stats")]
        check: Vec<Check>,
        /// Seconds allowed for the Hamiltonicity search.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
    /// Random walk of 2-switches from the generated graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Absent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Absent(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Infeasible { .. }
            | Error::NotEulerian
            | Error::NotConnected
            | Error::ParameterMismatch { .. }
            | Error::DegreeMismatch
            | Error::StateCapExceeded { .. }
            | Error::ReplayMismatch(_) => Failure::Absent(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Result of a command: text for stdout, a JSON body, and whether the answer was "absent".
struct Outcome {
    text: String,
    report: Value,
    absent: bool,
}

impl Outcome {
    fn ok(text: String, report: Value) -> Outcome {
        Outcome { text, report, absent: false }
    }
}

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if let Some(name) = arg.strip_prefix('@') {
        return named::by_name(name).ok_or_else(|| {
            Failure::Usage(format!(
                "unknown built-in graph @{name}; known: {}",
                named::BUILTIN_NAMES.map(|n| format!("@{n}")).join(", ")
            ))
        });
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
    let parsed = if path.extension().is_some_and(|x| x == "g6") {
        decode_graph6(&text)
    } else {
        decode_edgelist(&text)
    };
    parsed.map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => encode_graph6(g) + "\n",
        Format::Edges => encode_edgelist(g),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.edge_count(),
        "graph6": encode_graph6(g),
        "edges": g.edges(),
    })
}

fn moves_json(seq: &SwitchSequence) -> Value {
    seq.moves.iter().map(|m| m.to_log_line()).collect()
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Gen { n, m, format } => {
            let pair = in_p(n, m);
            if !pair.is_feasible() {
                return Ok(Outcome {
                    text: format!("({n}, {m}) is infeasible: {}\n", pair.classification),
                    report: json!({ "params": pair }),
                    absent: true,
                });
            }
            let construction = construction_for(n, m)?;
            let g = generate(n, m)?;
            Ok(Outcome::ok(
                render(&g, format),
                json!({ "params": pair, "construction": format!("{construction:?}"), "graph": graph_json(&g) }),
            ))
        }
        Command::Check { graph: Some(arg), .. } => {
            let g = load_graph(&arg)?;
            let profile = g.degree_profile();
            let connected = g.is_connected();
            let eulerian = g.is_eulerian();
            let pair = in_p(g.n(), g.edge_count());
            let text = format!(
                "n {} m {}\nconnected {connected}\nodd-degree vertices {}\neulerian {eulerian}\n(n, m) {}\n",
                g.n(),
                g.edge_count(),
                profile.odd_count,
                pair.classification
            );
            Ok(Outcome {
                text,
                report: json!({
                    "graph": graph_json(&g),
                    "connected": connected,
                    "degrees": profile.degrees,
                    "odd_count": profile.odd_count,
                    "eulerian": eulerian,
                    "params": pair,
                }),
                absent: !eulerian,
            })
        }
        Command::Check { graph: None, n, m } => {
            let (Some(n), Some(m)) = (n, m) else {
                return Err(Failure::Usage("check needs a graph or both --n and --m".into()));
            };
            let pair = in_p(n, m);
            Ok(Outcome {
                text: format!("({n}, {m}) {}\n", pair.classification),
                report: json!({ "params": pair }),
                absent: !pair.is_feasible(),
            })
        }
        Command::Transform { source, target, emit } => {
            let (g, h) = (load_graph(&source)?, load_graph(&target)?);
            let start = Instant::now();
            let seq = transform(&g, &h)?;
            let seconds = start.elapsed().as_secs_f64();
            let log = seq.to_log();
            let text = match &emit {
                Some(path) => {
                    fs::write(path, &log).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    format!("{} moves written to {}\n", seq.len(), path.display())
                }
                None => log,
            };
            Ok(Outcome::ok(
                text,
                json!({ "length": seq.len(), "moves": moves_json(&seq), "seconds": seconds }),
            ))
        }
        Command::Verify { source, log, target } => {
            let (g, h) = (load_graph(&source)?, load_graph(&target)?);
            let text = fs::read_to_string(&log).map_err(|e| Failure::Usage(format!("{}: {e}", log.display())))?;
            let seq = SwitchSequence::from_log(g, &text).map_err(|e| Failure::Usage(format!("{}: {e}", log.display())))?;
            let verdict = seq.verify_eulerian(&h);
            let text = match &verdict {
                Ok(()) => format!("ok: {} moves, every step Eulerian, ends at target\n", seq.len()),
                Err(e) => format!("rejected: {e}\n"),
            };
            Ok(Outcome {
                text,
                report: json!({
                    "length": seq.len(),
                    "valid": verdict.is_ok(),
                    "error": verdict.as_ref().err().map(ToString::to_string),
                }),
                absent: verdict.is_err(),
            })
        }
        Command::Distance { source, target, max_depth } => {
            let (g, h) = (load_graph(&source)?, load_graph(&target)?);
            let d = switch_distance(&g, &h, max_depth)?;
            let text = match d {
                Some(d) => format!("{d}\n"),
                None => format!("more than {max_depth}\n"),
            };
            Ok(Outcome {
                text,
                report: json!({ "distance": d, "max_depth": max_depth }),
                absent: d.is_none(),
            })
        }
        Command::Gadget { base, vertex, variant, format } => {
            let base = load_graph(&base)?;
            let inst = match variant {
                Variant::Paths => hardness::build_gadget(&base, vertex)?,
                Variant::Tree => hardness::build_gadget_deg4(&base, vertex)?,
            };
            Ok(Outcome::ok(
                render(&inst.gadget, format),
                json!({
                    "variant": inst.variant,
                    "anchor": inst.anchor,
                    "leaves": inst.leaves,
                    "odd_count": inst.gadget.degree_profile().odd_count,
                    "graph": graph_json(&inst.gadget),
                }),
            ))
        }
        Command::Solve1Switch { graph, budget } => {
            let g = load_graph(&graph)?;
            let found = hardness::min_1switches_to_eulerian(&g, budget);
            let text = match &found {
                Some(seq) if seq.is_empty() => "already Eulerian\n".to_string(),
                Some(seq) => seq.to_log(),
                None => format!("no solution with at most {budget} 1-switches\n"),
            };
            Ok(Outcome {
                text,
                report: json!({
                    "budget": budget,
                    "length": found.as_ref().map(SwitchSequence::len),
                    "moves": found.as_ref().map(moves_json),
                }),
                absent: found.is_none(),
            })
        }
        Command::ReduceCheck { base } => {
            let base = load_graph(&base)?;
            let r = hardness::reduction_check(&base)?;
            let fixable = match r.fixable_within_half {
                Some(f) => f.to_string(),
                None => format!("not searched (base above {} vertices)", hardness::SOLVER_BASE_LIMIT),
            };
            let text = format!(
                "hamiltonian {}\ndecomposition {}\ngadget {} vertices {} edges {} odd\nfixable with {} 1-switches {fixable}\nconsistent {}\n",
                r.hamiltonian,
                r.decomposition.is_some(),
                r.gadget_n,
                r.gadget_m,
                r.gadget_odd,
                r.half,
                r.consistent
            );
            let absent = !r.consistent;
            Ok(Outcome { text, report: serde_json::to_value(&r).expect("serializable"), absent })
        }
        Command::Explore { n, m, mode, check, budget } => {
            if !budget.is_finite() || budget < 0.0 {
                return Err(Failure::Usage(format!("invalid budget {budget}")));
            }
            let mode = match mode {
                Mode::Labeled => explorer::Mode::Labeled,
                Mode::Unlabeled => explorer::Mode::Unlabeled,
            };
            let start = Instant::now();
            let nodes = explorer::enumerate_eulerian(n, m, mode)?;
            let enumerate_seconds = start.elapsed().as_secs_f64();
            let mut report = json!({
                "params": in_p(n, m),
                "mode": mode,
                "nodes": nodes.len(),
                "timings": { "enumerate": enumerate_seconds },
            });
            let mut text = format!("{} Eulerian graphs ({mode:?})\n", nodes.len());
            if nodes.is_empty() {
                return Ok(Outcome { text, report, absent: true });
            }
            let start = Instant::now();
            let mg = explorer::build_meta(nodes, mode)?;
            report["timings"]["build"] = json!(start.elapsed().as_secs_f64());
            report["edges"] = json!(mg.edge_count());
            text += &format!("{} meta edges\n", mg.edge_count());
            if check.contains(&Check::Connectivity) {
                let connected = explorer::meta_connected(&mg);
                report["connected"] = json!(connected);
                text += &format!("connected {connected}\n");
            }
            if check.contains(&Check::Stats) {
                let start = Instant::now();
                let stats = explorer::meta_stats(&mg);
                report["timings"]["stats"] = json!(start.elapsed().as_secs_f64());
                text += &format!(
                    "degree {}..{} diameter {}\n",
                    stats.min_degree,
                    stats.max_degree,
                    stats.diameter.map_or("n/a".into(), |d| d.to_string())
                );
                report["stats"] = serde_json::to_value(&stats).expect("serializable");
            }
            if check.contains(&Check::Hamiltonicity) {
                let start = Instant::now();
                let outcome = explorer::meta_hamiltonian(&mg, Duration::from_secs_f64(budget));
                report["timings"]["hamiltonicity"] = json!(start.elapsed().as_secs_f64());
                let verdict = match &outcome {
                    HamiltonOutcome::Yes(_) => "yes",
                    HamiltonOutcome::No => "no",
                    HamiltonOutcome::Timeout => "timeout",
                };
                text += &format!("hamiltonian {verdict}\n");
                report["hamiltonian"] = json!(verdict);
                if let HamiltonOutcome::Yes(cycle) = outcome {
                    report["hamiltonian_cycle"] = json!(cycle);
                }
            }
            Ok(Outcome::ok(text, report))
        }
        Command::Random { n, m, seed, steps, format } => {
            let g = random_eulerian(n, m, seed, steps)?;
            Ok(Outcome::ok(
                render(&g, format),
                json!({ "params": in_p(n, m), "seed": seed, "steps": steps, "graph": graph_json(&g) }),
            ))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen { .. } => "gen",
        Command::Check { .. } => "check",
        Command::Transform { .. } => "transform",
        Command::Verify { .. } => "verify",
        Command::Distance { .. } => "distance",
        Command::Gadget { .. } => "gadget",
        Command::Solve1Switch { .. } => "solve-1switch",
        Command::ReduceCheck { .. } => "reduce-check",
        Command::Explore { .. } => "explore",
        Command::Random { .. } => "random",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let name = command_name(&cli.command);
    let (code, report) = match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            let status = if outcome.absent { "absent" } else { "ok" };
            (u8::from(outcome.absent) * 2, json!({ "status": status, "result": outcome.report }))
        }
        Err(f) => {
            let message = match &f {
                Failure::Usage(s) | Failure::Absent(s) => s.clone(),
            };
            eprintln!("error: {message}");
            let status = if f.code() == 2 { "absent" } else { "error" };
            (f.code(), json!({ "status": status, "error": message }))
        }
    };
    if let Some(path) = cli.out {
        let mut doc = json!({ "schema": SCHEMA, "command": name });
        doc.as_object_mut()
            .expect("object")
            .extend(report.as_object().expect("object").clone());
        let body = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
        if let Err(e) = fs::write(&path, body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
