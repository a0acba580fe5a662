//! `sgcolor`: color, classify and generate signed graphs from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure or
//! budget exceeded, 3 internal invariant violation.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use sgcolor::classify::{
    class_ratio, is_class_2pm_structural, probe_conjecture, signed_class, ProbeOptions, RatioOptions,
    DEFAULT_BUDGET,
};
use sgcolor::colorers::{auto_color_with, color_with, Method};
use sgcolor::exact::{exact_chromatic_index_with, SolverOptions};
use sgcolor::format::{parse_coloring, parse_signed_graph, serialize_coloring, serialize_signed_graph};
use sgcolor::gen::{generate, generate_signature, FamilySpec, SignatureMode};
use sgcolor::switching::{switch, SwitchSet};
use sgcolor::{par, verify_coloring, Error, IncidenceColoring, SignedGraph};

/// `println!` that reports write errors instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "sgcolor", version, about = "Edge coloring of signed graphs")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (ratio, classify, probe-conjecture).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the exact solver's edge-count guard.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a signed graph and write the coloring.
    Color {
        input: PathBuf,
        /// auto, exact, path, cycle, cactus, wheel, necklace or bipartite.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute Δ and the chromatic index exactly.
    ChromaticIndex {
        input: PathBuf,
        /// Write the witness coloring here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide class 1±, 2± or mixed for the underlying graph.
    Classify {
        input: PathBuf,
        /// Only run the matching-based class 2± test.
        #[arg(long)]
        structural_only: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Fraction of signatures whose chromatic index equals Δ.
    Ratio {
        input: PathBuf,
        /// Enumerate all 2^m signatures instead of one per switching class.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Generate a graph family.
    Gen {
        /// path, cycle, star, wheel, necklace, complete-bipartite, random-cactus, class2pm, triangle-chain.
        family: String,
        /// Sizes; lists are comma separated (e.g. `necklace 1,2,2`).
        #[arg(required = true)]
        params: Vec<String>,
        /// positive, negative, random or index:I.
        #[arg(long, default_value = "positive")]
        sign: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring against a signed graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Switch a signed graph at a vertex set.
    Switch {
        graph: PathBuf,
        /// Comma-separated 1-indexed vertices.
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare χ′ of K_{r,r} signatures with the even-r parity prediction.
    ProbeConjecture {
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with a chosen exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = err.downcast_ref::<Exit>() {
        return *code;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 2,
        Some(Error::Invariant(_)) => 3,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<(SignedGraph, Vec<String>)> {
    let f = parse_signed_graph(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    Ok((f.graph, f.comments))
}

/// Writes `text` to `path`, or to stdout when there is no path.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn coloring_json(sg: &SignedGraph, c: &IncidenceColoring) -> serde_json::Value {
    let g = sg.graph();
    let records: Vec<_> = c
        .incidences(g)
        .map(|(inc, color)| {
            let (u, v) = g.endpoints(inc.edge);
            json!({"vertex": inc.vertex + 1, "edge": [u + 1, v + 1], "color": color})
        })
        .collect();
    json!({"n": c.n(), "incidences": records})
}

fn run(cli: Cli) -> Result<()> {
    let solver = SolverOptions { force: cli.force };
    let json = cli.json;
    match cli.command {
        Command::Color { input, method, output } => {
            let (sg, _) = load_graph(&input)?;
            let (c, used) = if method == "auto" {
                auto_color_with(&sg, solver)?
            } else {
                let m: Method = method.parse()?;
                (color_with(&sg, m, solver)?, m)
            };
            let delta = sg.graph().max_degree();
            if json {
                if let Some(p) = &output {
                    emit(Some(p), &serialize_coloring(sg.graph(), &c))?;
                }
                print_json(&json!({
                    "method": used,
                    "delta": delta,
                    "n": c.n(),
                    "coloring": coloring_json(&sg, &c),
                }))?;
            } else if let Some(p) = &output {
                emit(Some(p), &serialize_coloring(sg.graph(), &c))?;
                out!("method={used} delta={delta} n={}", c.n());
            } else {
                eprintln!("method={used} delta={delta} n={}", c.n());
                emit(None, &serialize_coloring(sg.graph(), &c))?;
            }
        }
        Command::ChromaticIndex { input, output } => {
            let (sg, _) = load_graph(&input)?;
            let r = exact_chromatic_index_with(&sg, solver)?;
            if let Some(p) = &output {
                emit(Some(p), &serialize_coloring(sg.graph(), &r.witness))?;
            }
            if json {
                print_json(&json!({"delta": r.delta, "chi": r.chi}))?;
            } else {
                out!("delta={} chi={}", r.delta, r.chi);
            }
        }
        Command::Classify {
            input,
            structural_only,
            budget,
        } => {
            let (sg, _) = load_graph(&input)?;
            if sg.signature().negative_count() > 0 {
                eprintln!("warning: signs are ignored; classification depends only on the underlying graph");
            }
            let g = sg.graph();
            if structural_only {
                let s = is_class_2pm_structural(g);
                if json {
                    print_json(&s)?;
                } else {
                    out!(
                        "class_2pm={} delta={} reason={}",
                        s.class_2pm,
                        s.delta,
                        serde_json::to_value(s.reason)?.as_str().unwrap_or_default()
                    );
                }
            } else {
                let opts = RatioOptions {
                    budget,
                    solver,
                    ..Default::default()
                };
                let report = par::run_with_jobs(cli.jobs, || signed_class(g, opts))?;
                if json {
                    print_json(&report)?;
                } else {
                    out!("class={} ratio={}", report.verdict, report.ratio);
                }
            }
        }
        Command::Ratio { input, naive, budget } => {
            let (sg, _) = load_graph(&input)?;
            let opts = RatioOptions {
                budget,
                naive,
                solver,
                ..Default::default()
            };
            let report = par::run_with_jobs(cli.jobs, || class_ratio(sg.graph(), opts))?;
            if json {
                print_json(&report)?;
            } else {
                out!(
                    "ratio={} at_delta={} total={} delta={}",
                    report.ratio, report.classes_at_delta, report.total_classes, report.delta
                );
            }
        }
        Command::Gen {
            family,
            params,
            sign,
            seed,
            output,
        } => {
            let spec = FamilySpec::parse(&family, &params, seed)?;
            let out = generate(&spec)?;
            let mode = SignatureMode::parse(&sign, seed)?;
            let sig = generate_signature(&out.graph, mode)?;
            let sg = SignedGraph::new(out.graph, sig)?;
            let mut comments = out.meta.comment_lines();
            comments.push(format!("sign {sign}"));
            emit(output.as_deref(), &serialize_signed_graph(&sg, &comments))?;
            if json {
                let g = sg.graph();
                print_json(&json!({
                    "family": out.meta.family,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "delta": g.max_degree(),
                    "negative_edges": sg.signature().negative_count(),
                }))?;
            }
        }
        Command::Verify { graph, coloring } => {
            let (sg, _) = load_graph(&graph)?;
            let c = parse_coloring(&read(&coloring)?, sg.graph())
                .with_context(|| format!("in {}", coloring.display()))?;
            let report = verify_coloring(&sg, &c)?;
            if json {
                print_json(&json!({
                    "valid": report.is_valid(),
                    "n": c.n(),
                    "violations": report.violations,
                }))?;
            } else if report.is_valid() {
                out!("valid n={}", c.n());
            } else {
                out!("invalid violations={}", report.violations.len());
            }
            if !report.is_valid() {
                for v in &report.violations {
                    eprintln!("{}", serde_json::to_string(v)?);
                }
                return Err(Exit(2, "coloring failed verification".into()).into());
            }
        }
        Command::Switch {
            graph,
            vertices,
            output,
        } => {
            let (sg, comments) = load_graph(&graph)?;
            let n = sg.graph().vertex_count();
            if let Some(&bad) = vertices.iter().find(|&&v| v == 0 || v > n) {
                return Err(Exit(1, format!("vertex {bad} not in 1..={n}")).into());
            }
            let set = SwitchSet::new(vertices.iter().map(|v| v - 1));
            let switched = switch(&sg, &set)?;
            emit(output.as_deref(), &serialize_signed_graph(&switched, &comments))?;
            if json {
                print_json(&json!({"negative_edges": switched.signature().negative_count()}))?;
            }
        }
        Command::ProbeConjecture { r, trials, seed } => {
            let opts = ProbeOptions {
                trials,
                seed,
                solver,
                ..Default::default()
            };
            let report = par::run_with_jobs(cli.jobs, || probe_conjecture(r, opts))?;
            if json {
                print_json(&report)?;
            } else {
                out!(
                    "r={} delta={} checked={} exhaustive={} predicted_delta={} confirmed={} proven_checked={} proven_violations={} counterexamples={}",
                    report.r,
                    report.delta,
                    report.checked,
                    report.exhaustive,
                    report.predicted_delta,
                    report.predicted_delta_confirmed,
                    report.proven_direction_checked,
                    report.proven_violations.len(),
                    report.counterexamples.len()
                );
                for case in report.proven_violations.iter().chain(&report.counterexamples) {
                    out!("counterexample signature={} chi={}", case.signature, case.chi);
                }
            }
            if !report.proven_violations.is_empty() {
                return Err(Exit(3, "proven direction violated".into()).into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe is not an error
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
