//! `megset` command line: solve, certify, transform and benchmark
//! monitoring edge-geodetic set instances.
//!
//! Every run prints one JSON object on stdout (`bench` prints CSV); errors
//! print a JSON error object. Exit codes: 0 success, 1 usage error or
//! failed verification, 2 precondition error, 3 resource-budget error.

mod bench;
mod format;
mod generate;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use megset::{
    apx_vc, build_replicated_gadget, build_vc_gadget, coverage_map, exact_meg_with_budget,
    meg_apx, meg_check, vc_from_meg, Error as CoreError, GadgetInstance, Graph, Method,
    SolveBudget, SolveReport,
};
use sha2::{Digest, Sha256};

use format::{parse_document, serialize_document, FormatError, GraphDocument};
use report::{ErrorReport, PairEntry, RoleSidecar, RunReport};

#[derive(Parser)]
#[command(
    name = "megset",
    version,
    about = "Monitoring edge-geodetic sets: solvers, certification, reductions and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    Exact,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum monitoring set (exact, budgeted search).
    SolveExact {
        #[arg(long)]
        input: PathBuf,
        /// Cap on free vertices enumerated by the exact search.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Find a monitoring set with the greedy set-cover heuristic.
    SolveGreedy {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check whether a vertex set is a monitoring set of size at most k.
    /// Exits 0 exactly when the check passes.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List every vertex pair together with the edges it monitors.
    Pairs {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the single-copy gadget from a diameter-<=2 graph.
    ReduceVc2meg {
        #[arg(long)]
        input: PathBuf,
        /// Write the gadget document here (role sidecar goes to
        /// OUTPUT.roles.json).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the replicated gadget with the given copy count.
    ReduceReplicate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extract a vertex cover of the source from a monitoring set of a
    /// gadget (gadget document plus role sidecar).
    ExtractVc {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        roles: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Approximate a minimum vertex cover through the gadget pipeline.
    ApxVc {
        #[arg(long)]
        input: PathBuf,
        /// Ratio promised by the inner monitoring-set solver.
        #[arg(long, default_value_t = 1.0)]
        ratio: f64,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, value_enum, default_value_t = SolverKind::Exact)]
        solver: SolverKind,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate an instance document.
    Gen {
        #[arg(long, value_enum)]
        kind: generate::GraphKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a benchmark suite and print a CSV table.
    Bench {
        #[arg(long)]
        suite: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Precondition(String),
    Resource(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Precondition(_) => "precondition",
            CliError::Resource(_) => "resource",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) | CliError::Resource(m) => m,
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::BudgetExceeded(_) => CliError::Resource(err.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(err: FormatError) -> Self {
        CliError::Precondition(err.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            std::process::exit(0);
        }
        Err(err) => {
            let wrapped = CliError::Usage(err.to_string());
            emit_error(&wrapped);
            std::process::exit(wrapped.exit_code());
        }
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            emit_error(&err);
            std::process::exit(err.exit_code());
        }
    }
}

fn emit_error(err: &CliError) {
    let report = ErrorReport::new(err.kind(), err.message());
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("error report serializes")
    );
}

fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let digest = format!("sha256:{}", hex_digest(text.as_bytes()));
    Ok((text, digest))
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn emit_report(report: &RunReport, output: Option<&Path>) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report).expect("report serializes");
    println!("{json}");
    if let Some(path) = output {
        write_file(path, &format!("{json}\n"))?;
    }
    Ok(())
}

fn budget_from_flag(budget: Option<usize>) -> SolveBudget {
    match budget {
        Some(max_free_vertices) => SolveBudget {
            max_free_vertices,
            ..SolveBudget::default()
        },
        None => SolveBudget::default(),
    }
}

fn fill_solver_fields(report: &mut RunReport, solve: &SolveReport) {
    report.method = Some(solve.method.as_str().to_string());
    report.size = Some(solve.size);
    report.solution = Some(solve.solution.clone());
    report.certified = Some(solve.certified);
    report.counters = Some(solve.stats);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::SolveExact {
            input,
            budget,
            output,
        } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let solve = exact_meg_with_budget(&doc.graph, budget_from_flag(budget))?;
            let mut report = RunReport::new("solve-exact");
            report.input_digest = Some(digest);
            fill_solver_fields(&mut report, &solve);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(0)
        }
        Command::SolveGreedy { input, output } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let solve = meg_apx(&doc.graph)?;
            let mut report = RunReport::new("solve-greedy");
            report.input_digest = Some(digest);
            fill_solver_fields(&mut report, &solve);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            input,
            set,
            k,
            output,
        } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let certified = meg_check(&doc.graph, &set, k)?;
            let mut sorted = set.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let mut report = RunReport::new("verify");
            report.input_digest = Some(digest);
            report.k = Some(k);
            report.size = Some(sorted.len());
            report.solution = Some(sorted);
            report.certified = Some(certified);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(if certified { 0 } else { 1 })
        }
        Command::Pairs { input, output } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let all: Vec<usize> = (0..doc.graph.vertex_count()).collect();
            let coverage = coverage_map(&doc.graph, &all)?;
            let pairs: Vec<PairEntry> = coverage
                .iter()
                .map(|((x, y), set)| PairEntry {
                    x,
                    y,
                    edges: set.iter().map(|e| doc.graph.endpoints(e)).collect(),
                })
                .collect();
            let mut report = RunReport::new("pairs");
            report.input_digest = Some(digest);
            report.pairs = Some(pairs);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(0)
        }
        Command::ReduceVc2meg { input, output } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let inst = build_vc_gadget(&doc.graph)?;
            emit_gadget("reduce-vc2meg", digest, &inst, start, output.as_deref())
        }
        Command::ReduceReplicate {
            input,
            copies,
            output,
        } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let inst = build_replicated_gadget(&doc.graph, copies)?;
            emit_gadget("reduce-replicate", digest, &inst, start, output.as_deref())
        }
        Command::ExtractVc {
            input,
            roles,
            set,
            output,
        } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let sidecar_text = fs::read_to_string(&roles).map_err(|e| {
                CliError::Precondition(format!("cannot read {}: {e}", roles.display()))
            })?;
            let sidecar: RoleSidecar = serde_json::from_str(&sidecar_text).map_err(|e| {
                CliError::Precondition(format!("bad role sidecar {}: {e}", roles.display()))
            })?;
            let start = Instant::now();
            let inst =
                GadgetInstance::reassemble(doc.graph, sidecar.source_n, sidecar.copies)?;
            if RoleSidecar::from_instance(&inst).roles != sidecar.roles {
                return Err(CoreError::GadgetMismatch.into());
            }
            let cover = vc_from_meg(&inst, &set)?;
            let mut report = RunReport::new("extract-vc");
            report.input_digest = Some(digest);
            report.size = Some(cover.len());
            report.solution = Some(cover);
            report.certified = Some(true);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(0)
        }
        Command::ApxVc {
            input,
            ratio,
            epsilon,
            solver,
            budget,
            output,
        } => {
            let (text, digest) = read_input(&input)?;
            let doc = parse_document(&text)?;
            let start = Instant::now();
            let solve_budget = budget_from_flag(budget);
            let solve = match solver {
                SolverKind::Exact => apx_vc(
                    &doc.graph,
                    |g: &Graph| exact_meg_with_budget(g, solve_budget),
                    ratio,
                    epsilon,
                )?,
                SolverKind::Greedy => apx_vc(&doc.graph, meg_apx, ratio, epsilon)?,
            };
            debug_assert_eq!(solve.method, Method::ApxVc);
            let mut report = RunReport::new("apx-vc");
            report.input_digest = Some(digest);
            report.ratio = Some(ratio);
            report.epsilon = Some(epsilon);
            fill_solver_fields(&mut report, &solve);
            report.wall_us = start.elapsed().as_micros() as u64;
            emit_report(&report, output.as_deref())?;
            Ok(0)
        }
        Command::Gen {
            kind,
            n,
            seed,
            output,
        } => {
            let start = Instant::now();
            let graph = generate::generate(kind, n, seed)?;
            let document = serialize_document(&GraphDocument::unnamed(graph));
            let mut report = RunReport::new("gen");
            report.document = Some(document.clone());
            report.wall_us = start.elapsed().as_micros() as u64;
            if let Some(path) = &output {
                write_file(path, &document)?;
            }
            // The report itself is never written to --output here: the file
            // holds the document so it can feed other subcommands directly.
            emit_report(&report, None)?;
            Ok(0)
        }
        Command::Bench { suite, output } => {
            let text = fs::read_to_string(&suite).map_err(|e| {
                CliError::Precondition(format!("cannot read {}: {e}", suite.display()))
            })?;
            let rows = bench::parse_suite(&text).map_err(CliError::Precondition)?;
            let csv = bench::run_suite(&rows);
            print!("{csv}");
            if let Some(path) = &output {
                write_file(path, &csv)?;
            }
            Ok(0)
        }
    }
}

fn emit_gadget(
    command: &str,
    digest: String,
    inst: &GadgetInstance,
    start: Instant,
    output: Option<&Path>,
) -> Result<i32, CliError> {
    let document = serialize_document(&GraphDocument::unnamed(inst.graph.clone()));
    let sidecar = RoleSidecar::from_instance(inst);
    let mut report = RunReport::new(command);
    report.input_digest = Some(digest);
    report.document = Some(document.clone());
    report.roles = Some(sidecar.clone());
    report.wall_us = start.elapsed().as_micros() as u64;
    if let Some(path) = output {
        write_file(path, &document)?;
        let sidecar_json =
            serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
        let sidecar_path = PathBuf::from(format!("{}.roles.json", path.display()));
        write_file(&sidecar_path, &format!("{sidecar_json}\n"))?;
    }
    emit_report(&report, None)?;
    Ok(0)
}
