use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use heffter::constructions::SweepRow;
use heffter::{
    classify, generate, get_fixture, list_fixtures, search, sweep, verify_heffter, GenerateError, SearchBudget,
    SearchOutcome, VerificationReport,
};
use heffter_cli::format::{parse_any, to_json, to_text, Document};
use serde::Serialize;

const OUT_OF_SCOPE: u8 = 2;

#[derive(Parser)]
#[command(name = "heffter", version, about = "Build, check and search for square Heffter arrays H(n;k)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an H(n;k); exits 2 when the pair is not covered here.
    Generate {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an array file (text or JSON); exits 0 only if it is an H(n;k).
    Verify {
        path: PathBuf,
        /// Expected cells per line; inferred from the fill when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Report which construction covers (n, k).
    Classify {
        n: usize,
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generate and verify every pair 3 <= k < n <= max_n.
    Sweep {
        max_n: usize,
        /// Where to write the JSON summary.
        #[arg(long)]
        report: PathBuf,
    },
    /// Exhaustive search at tiny orders.
    Search {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 100_000_000)]
        nodes: u64,
        #[arg(long, default_value_t = 60)]
        seconds: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Printed example arrays.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Dump {
        name: String,
        /// Value of k for fixtures whose entries depend on it.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::FAILURE
}

fn emit(doc: &Document, format: Format, output: Option<&Path>) -> ExitCode {
    let body = match format {
        Format::Text => to_text(&doc.array, doc.k),
        Format::Json => to_json(doc) + "\n",
    };
    match output {
        Some(path) => match fs::write(path, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(format!("{}: {e}", path.display())),
        },
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
    }
}

fn print_report(r: &VerificationReport) {
    println!("order: {}", r.n);
    if let (Some(k), Some(m)) = (r.k, r.modulus) {
        println!("k: {k}");
        println!("modulus: {m}");
    }
    let hist: Vec<String> = r.fill_histogram.iter().map(|(c, lines)| format!("{c} cells x {lines} lines")).collect();
    println!("fill: {}", hist.join(", "));
    println!("verdict: {}", if r.is_valid() { "Valid" } else { "Invalid" });
    for v in &r.violations {
        println!("  {v}");
    }
}

fn cmd_verify(path: &Path, k: Option<usize>, json: bool) -> ExitCode {
    let input = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let doc = match parse_any(&input) {
        Ok(d) => d,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let Some(k) = k.or_else(|| doc.array.uniform_fill()).or((doc.k > 0).then_some(doc.k)) else {
        return fail("k not given and the fill is not uniform");
    };
    let r = verify_heffter(&doc.array, k);
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
    } else {
        print_report(&r);
    }
    if r.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

#[derive(Serialize)]
struct SweepReport {
    max_n: usize,
    pairs: usize,
    constructed: usize,
    valid: usize,
    seconds: f64,
    rows: Vec<SweepRow>,
}

fn cmd_sweep(max_n: usize, path: &Path) -> ExitCode {
    if max_n < 6 {
        return fail(format!("max_n must be at least 6, got {max_n}"));
    }
    let start = Instant::now();
    let rows = sweep(max_n);
    let constructed = rows.iter().filter(|r| r.valid.is_some()).count();
    let valid = rows.iter().filter(|r| r.valid == Some(true)).count();
    let report = SweepReport {
        max_n,
        pairs: rows.len(),
        constructed,
        valid,
        seconds: start.elapsed().as_secs_f64(),
        rows,
    };
    let body = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Err(e) = fs::write(path, body) {
        return fail(format!("{}: {e}", path.display()));
    }
    println!(
        "{} pairs, {constructed} constructed, {valid} valid, {:.2} s",
        report.pairs, report.seconds
    );
    for r in report.rows.iter().filter(|r| r.valid == Some(false)) {
        println!("  ({},{}) {}: {}", r.n, r.k, r.verdict, r.error.as_deref().unwrap_or("verifier rejected"));
    }
    if valid == constructed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Generate { n, k, format, output } => match generate(n, k) {
            Ok(a) => emit(&Document::new(a, k), format, output.as_deref()),
            Err(GenerateError::OutOfScope(c)) => {
                eprintln!("out of scope: ({n},{k}) is {}: {}", c.verdict, c.reason);
                ExitCode::from(OUT_OF_SCOPE)
            }
            Err(e) => fail(e),
        },
        Command::Verify { path, k, json } => cmd_verify(&path, k, json),
        Command::Classify { n, k, json } => {
            let c = classify(n, k);
            if json {
                println!("{}", serde_json::to_string_pretty(&c).expect("classification serializes"));
            } else {
                println!("{}: {}", c.verdict, c.reason);
            }
            if c.verdict.is_constructible() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(OUT_OF_SCOPE)
            }
        }
        Command::Sweep { max_n, report } => cmd_sweep(max_n, &report),
        Command::Search {
            n,
            k,
            nodes,
            seconds,
            format,
        } => match search(n, k, SearchBudget::new(nodes, Duration::from_secs(seconds))) {
            SearchOutcome::Found(a) => emit(&Document::new(a, k), format, None),
            SearchOutcome::Exhausted => {
                println!("exhausted: no H({n};{k}) exists");
                ExitCode::FAILURE
            }
            SearchOutcome::BudgetExceeded => fail("budget exceeded before the search finished"),
        },
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                for name in list_fixtures() {
                    println!("{name}");
                }
                ExitCode::SUCCESS
            }
            FixtureAction::Dump { name, k, format } => match get_fixture(&name, k) {
                Ok(f) => {
                    let k = f.heffter_k.or(f.array.uniform_fill()).unwrap_or(0);
                    let doc = Document {
                        array: f.array,
                        k,
                        masks: f.masks,
                    };
                    emit(&doc, format, None)
                }
                Err(e) => fail(e),
            },
        },
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
