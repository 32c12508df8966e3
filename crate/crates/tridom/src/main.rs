//! Command-line front end.
//!
//! Exit codes are uniform across subcommands so scripts can branch on
//! them: 0 success, 1 internal inconsistency (a proved statement failed,
//! meaning a bug in this program), 2 a B8 counterexample was found and
//! confirmed, 3 unusable input (bad graph6, missing file, bad flags).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tridom::bounds::{self, B8ProvedCase, BoundId, Gamma2Identity};
use tridom::families::{self, FamilySpec};
use tridom::graph::Graph;
use tridom::graph6::parse_graph6;
use tridom::report::{self, VerificationReport};
use tridom::solve::{parameter_triple, ParameterTriple};
use tridom::verify::{find_tight, verify_corpus, CorpusSource, VerifyError, VerifyOptions};

const EXIT_OK: u8 = 0;
const EXIT_INCONSISTENT: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tridom",
    version,
    about = "Exact domination, total domination, and connected domination \
             numbers, with an inequality checker for graph corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one graph and print its parameters and bound verdicts
    Params {
        /// A graph6 string, or a family spec like cycle(9), p4grid(5), H
        graph: String,
    },
    /// Solve a whole corpus and check every bound on every graph
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Report format written to stdout (or --output)
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the report to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Most tight witnesses kept per bound in the report aggregates
        #[arg(long, value_name = "K", default_value_t = 5)]
        tight_cap: usize,
    },
    /// Scan a corpus for graphs where one bound holds with equality
    Tight {
        #[command(flatten)]
        source: SourceArgs,
        /// Which bound, B1 through B9
        #[arg(long, value_name = "ID")]
        bound: String,
        /// Stop after this many witnesses
        #[arg(long, value_name = "N", default_value_t = 10)]
        limit: usize,
    },
    /// List the built-in graph families
    Families {
        /// Solve family instances and compare against their closed forms
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// File of graph6 lines (as produced by geng), `-` for stdin
    #[arg(long, value_name = "PATH")]
    geng_file: Option<PathBuf>,
    /// All connected graphs on 1..=N vertices (N at most 8)
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Keep one representative per isomorphism class (with --enumerate)
    #[arg(long)]
    dedupe: bool,
}

impl SourceArgs {
    fn build(&self) -> Result<CorpusSource, String> {
        if self.dedupe && self.enumerate.is_none() {
            return Err("--dedupe only applies to --enumerate".to_string());
        }
        let mut parts = Vec::new();
        if let Some(max_n) = self.enumerate {
            parts.push(CorpusSource::Enumerate {
                max_n,
                dedupe: self.dedupe,
            });
        }
        if let Some(path) = &self.geng_file {
            parts.push(CorpusSource::Graph6File(path.clone()));
        }
        match parts.len() {
            0 => Err("no corpus: pass --geng-file and/or --enumerate".to_string()),
            1 => Ok(parts.pop().unwrap()),
            _ => Ok(CorpusSource::Chain(parts)),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads for solving; default is one per CPU
    #[arg(long, value_name = "W")]
    workers: Option<usize>,
    /// Per-graph time budget in seconds; 0 means unlimited
    #[arg(long, value_name = "SECS", default_value_t = 10.0)]
    budget_secs: f64,
}

impl RunArgs {
    fn options(&self, tight_cap: usize) -> Result<VerifyOptions, String> {
        if !self.budget_secs.is_finite() || self.budget_secs < 0.0 {
            return Err(format!(
                "--budget-secs must be >= 0, got {}",
                self.budget_secs
            ));
        }
        let budget = if self.budget_secs == 0.0 {
            None
        } else {
            Some(Duration::from_secs_f64(self.budget_secs))
        };
        Ok(VerifyOptions {
            workers: self.workers,
            budget,
            tight_cap,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not errors; everything else is bad
            // input and must not collide with the counterexample code.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_BAD_INPUT,
            };
            e.print().expect("write to stderr");
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Params { graph } => run_params(&graph),
        Command::Verify {
            source,
            run,
            format,
            output,
            tight_cap,
        } => run_verify(&source, &run, format, output.as_deref(), tight_cap),
        Command::Tight {
            source,
            bound,
            limit,
        } => run_tight(&source, &bound, limit),
        Command::Families { check } => run_families(check),
    };
    ExitCode::from(code)
}

/// Family specs win over graph6: the syntaxes barely overlap, and any
/// string that parses both ways names the same small-alphabet soup that
/// nobody writes by hand.
fn resolve_graph(input: &str) -> Result<(String, Graph), String> {
    match FamilySpec::from_str(input) {
        Ok(spec) => match spec.build() {
            Ok(g) => Ok((spec.to_string(), g)),
            Err(e) => Err(format!("error: {e}")),
        },
        Err(family_err) => match parse_graph6(input.trim()) {
            Ok(g) => Ok((format!("graph6 {}", input.trim()), g)),
            Err(graph6_err) => Err(format!(
                "error: could not interpret {input:?}\n  as a family spec: {family_err}\n  as graph6: {graph6_err}"
            )),
        },
    }
}

fn certificate_line(name: &str, size: usize, set: impl std::fmt::Display) -> String {
    format!("{name:<8} = {size}   e.g. {set}")
}

fn print_triple(g: &Graph, t: &ParameterTriple) {
    println!(
        "{}",
        certificate_line("gamma", t.gamma, t.gamma_certificate)
    );
    match (t.gamma_t, t.gamma_t_certificate) {
        (Some(v), Some(cert)) => println!("{}", certificate_line("gamma_t", v, cert)),
        _ => {
            let v = g
                .isolated_vertex()
                .expect("gamma_t only absent with an isolated vertex");
            println!("gamma_t  undefined (vertex {v} is isolated)");
        }
    }
    match (t.gamma_c, t.gamma_c_certificate) {
        (Some(v), Some(cert)) => println!("{}", certificate_line("gamma_c", v, cert)),
        _ => println!("gamma_c  undefined (graph is disconnected)"),
    }
}

fn print_bounds(t: &ParameterTriple) {
    println!("bounds:");
    for v in bounds::evaluate_all(t) {
        let numbers = match (v.lhs, v.rhs, v.slack) {
            (Some(lhs), Some(rhs), Some(slack)) => {
                let doubled = if v.doubled { ", doubled units" } else { "" };
                format!("lhs={lhs} rhs={rhs} slack={slack}{doubled}")
            }
            _ => String::new(),
        };
        println!(
            "  {}  {:<15} {:<34} {}",
            v.bound,
            v.status.as_str(),
            numbers,
            v.bound.formula()
        );
    }
    let identity = match bounds::check_gamma2_identity(t) {
        Gamma2Identity::Confirmed => "gamma=2 so gamma_t = gamma_c, as proved",
        Gamma2Identity::Refuted => "gamma=2 but gamma_t != gamma_c: SOLVER BUG",
        Gamma2Identity::NotApplicable => "gamma=2 identity: not applicable",
    };
    println!("{identity}");
    let case = match bounds::classify_b8_proved_case(t) {
        B8ProvedCase::Equal => "gamma_t = gamma_c",
        B8ProvedCase::OneBelow => "gamma_t = gamma_c - 1",
        B8ProvedCase::Neither => "neither",
    };
    println!("B8 proved case: {case}");
}

fn run_params(input: &str) -> u8 {
    let (label, g) = match resolve_graph(input) {
        Ok(pair) => pair,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_BAD_INPUT;
        }
    };
    println!("graph: {label}");
    println!("n = {}, m = {}", g.n(), g.edge_count());
    let triple = parameter_triple(&g);
    print_triple(&g, &triple);
    print_bounds(&triple);
    EXIT_OK
}

fn write_report(
    report: &VerificationReport,
    format: Format,
    output: Option<&std::path::Path>,
) -> io::Result<()> {
    let mut out: BufWriter<Box<dyn Write>> = match output {
        Some(path) => BufWriter::new(Box::new(File::create(path)?)),
        None => BufWriter::new(Box::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => report::write_csv(report, &mut out)?,
        Format::Json => report::write_json(report, &mut out)?,
    }
    out.flush()
}

fn report_verify_error(e: &VerifyError) -> u8 {
    match e {
        VerifyError::SolverInconsistency { .. } => {
            eprintln!("internal error: {e}");
            EXIT_INCONSISTENT
        }
        _ => {
            eprintln!("error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

fn run_verify(
    source_args: &SourceArgs,
    run: &RunArgs,
    format: Format,
    output: Option<&std::path::Path>,
    tight_cap: usize,
) -> u8 {
    let source = match source_args.build() {
        Ok(source) => source,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_BAD_INPUT;
        }
    };
    let options = match run.options(tight_cap) {
        Ok(options) => options,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_BAD_INPUT;
        }
    };
    let report = match verify_corpus(source, &options) {
        Ok(report) => report,
        Err(e) => return report_verify_error(&e),
    };
    if let Err(e) = write_report(&report, format, output) {
        eprintln!("error: writing report: {e}");
        return EXIT_BAD_INPUT;
    }
    for line in report::summary_lines(&report) {
        eprintln!("{line}");
    }
    if report.exit_code() == 0 {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn run_tight(source_args: &SourceArgs, bound: &str, limit: usize) -> u8 {
    let bound = match BoundId::from_str(bound) {
        Ok(bound) => bound,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_BAD_INPUT;
        }
    };
    let source = match source_args.build() {
        Ok(source) => source,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_BAD_INPUT;
        }
    };
    eprintln!("tight witnesses for {bound} ({}):", bound.formula());
    let witnesses = match find_tight(source, bound, limit) {
        Ok(witnesses) => witnesses,
        Err(e) => return report_verify_error(&e),
    };
    for w in &witnesses {
        println!(
            "{}  gamma={} gamma_t={} gamma_c={}",
            w.graph6, w.values.gamma, w.values.gamma_t, w.values.gamma_c
        );
    }
    eprintln!("found {}", witnesses.len());
    EXIT_OK
}

fn run_families(check: bool) -> u8 {
    if !check {
        println!("cycle(n)     n >= 3                    aliases: c(n)");
        println!("path(n)      n >= 1                    aliases: p(n)");
        println!("complete(n)  n >= 1                    aliases: k(n)");
        println!("star(k)      k >= 1 leaves, center 0");
        println!("p3grid(n)    P_3 x P_n grid, n >= 1");
        println!("p4grid(n)    P_4 x P_n grid, n >= 1");
        println!("H            15-vertex tree with triple (5, 10, 10)");
        println!("Gprime       6-vertex graph with triple (2, 2, 2)");
        println!();
        println!("`tridom families --check` compares solved values against the");
        println!("closed forms known for cycles and for P_3/P_4 grids.");
        return EXIT_OK;
    }

    // Closed forms under test, on ranges the solver handles in moments:
    // all of gamma, gamma_t, gamma_c for cycles and P_4 grids, and
    // gamma_t, gamma_c for P_3 grids.
    let mut rows: Vec<(FamilySpec, [Option<usize>; 3])> = Vec::new();
    for n in 3..=12 {
        rows.push((
            FamilySpec::Cycle(n),
            [
                Some(families::gamma_cycle(n).unwrap()),
                Some(families::gamma_t_cycle(n).unwrap()),
                Some(families::gamma_c_cycle(n).unwrap()),
            ],
        ));
    }
    for n in 3..=6 {
        rows.push((
            FamilySpec::GridP3(n),
            [
                None,
                Some(families::gamma_t_p3grid(n).unwrap()),
                Some(families::gamma_c_p3grid(n).unwrap()),
            ],
        ));
    }
    for n in 4..=5 {
        rows.push((
            FamilySpec::GridP4(n),
            [
                Some(families::gamma_p4grid(n).unwrap()),
                Some(families::gamma_t_p4grid(n).unwrap()),
                Some(families::gamma_c_p4grid(n).unwrap()),
            ],
        ));
    }

    let mut all_match = true;
    for (spec, expected) in rows {
        let g = spec
            .build()
            .expect("check table stays inside family ranges");
        let t = parameter_triple(&g);
        let solved = [t.gamma, t.gamma_t.unwrap(), t.gamma_c.unwrap()];
        let mut cells = Vec::new();
        let mut row_ok = true;
        for (name, (want, got)) in ["gamma", "gamma_t", "gamma_c"]
            .iter()
            .zip(expected.iter().zip(solved))
        {
            match want {
                Some(want) => {
                    if *want != got {
                        row_ok = false;
                    }
                    cells.push(format!("{name} {want}/{got}"));
                }
                None => cells.push(format!("{name} -/{got}")),
            }
        }
        all_match &= row_ok;
        println!(
            "{:<12} {}  {}",
            spec.to_string(),
            cells.join("  "),
            if row_ok { "ok" } else { "MISMATCH" }
        );
    }
    if all_match {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    }
}
