use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use chevalley_core::chevalley::ChevalleyForm;
use chevalley_core::field::FiniteField;
use chevalley_core::group::{FiniteSubgroup, GroupError};
use chevalley_core::rootsystem::RootSystem;
use chevalley_core::scenarios::{self, Status, SuiteParams, SUITE_NAME};

const EXIT_FAIL: u8 = 1;
const EXIT_SKIP: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "chevalley", version, about = "Exact computations in Chevalley groups and the G2 characteristic-2 suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteField {
    Gf4,
    Gf8,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Scenario id (S1..S10); repeat or comma-separate for several.
        #[arg(long, value_delimiter = ',')]
        scenario: Vec<String>,
        /// Restrict q-sweeping scenarios to one field (default: both).
        #[arg(long, value_enum)]
        field: Option<SuiteField>,
        /// Write the JSON report array here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Maximum group elements any scenario may enumerate.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Roots, pairing table and prime classification.
    Rootsys {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, value_enum, default_value = "both")]
        format: Format,
    },
    /// Bad, good and very good primes.
    Primes {
        #[arg(long = "type")]
        kind: String,
    },
    /// Structure constants of the Chevalley basis.
    Structure {
        #[arg(long = "type")]
        kind: String,
    },
    /// Enumerate a finite matrix group by breadth-first closure.
    Closure {
        #[arg(long, default_value = "G2")]
        group: String,
        /// gfN for a prime power N.
        #[arg(long)]
        field: String,
        /// simple-roots, m or h.
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 2_000_000)]
        cap: usize,
        /// Write the element set as a binary dump.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
}

struct CliError(u8, String);

fn usage(msg: impl Into<String>) -> CliError {
    CliError(EXIT_USAGE, msg.into())
}

fn parse_root_system(kind: &str) -> Result<RootSystem, CliError> {
    kind.parse().map_err(|e| usage(format!("{e}")))
}

fn parse_field(text: &str) -> Result<FiniteField, CliError> {
    let n: u32 = text
        .strip_prefix("gf")
        .or_else(|| text.strip_prefix("GF"))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| usage(format!("field must look like gf4, got {text}")))?;
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).ok_or_else(|| usage(format!("no field of size {n}")))?;
    let (mut rest, mut m) = (n, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(usage(format!("{n} is not a prime power")));
    }
    FiniteField::new(p, m).map_err(|e| usage(e.to_string()))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn verify(
    suite: String,
    scenario: Vec<String>,
    field: Option<SuiteField>,
    out: Option<PathBuf>,
    budget: Option<usize>,
    no_timing: bool,
) -> Result<u8, CliError> {
    if suite != SUITE_NAME {
        return Err(usage(format!("unknown suite {suite}; the only suite is {SUITE_NAME}")));
    }
    let ids = if scenario.is_empty() { scenarios::all_ids() } else { scenario };
    let params = SuiteParams {
        qs: match field {
            None => vec![4, 8],
            Some(SuiteField::Gf4) => vec![4],
            Some(SuiteField::Gf8) => vec![8],
        },
        budget,
        timing: !no_timing,
    };
    let outcome = scenarios::run_suite(&ids, &params).map_err(|e| usage(e.to_string()))?;
    let text = serde_json::to_string_pretty(&outcome.reports).expect("serializable");
    for r in &outcome.reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let timing = r.timing_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
        eprintln!("{status} {:<4}{}{timing}", r.id, r.description);
        if let Some(f) = &r.failure {
            eprintln!("     first violated: {} {}", f.assertion, f.operands);
        }
        if let Some(s) = &r.skip_reason {
            eprintln!("     skipped: {s}");
        }
    }
    match out {
        Some(path) => {
            let mut w = File::create(&path).map_err(|e| CliError(EXIT_FAIL, format!("{}: {e}", path.display())))?;
            writeln!(w, "{text}").map_err(|e| CliError(EXIT_FAIL, e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(outcome.exit_code as u8)
}

fn closure(group: String, field: String, gens: String, cap: usize, dump: Option<PathBuf>, no_timing: bool) -> Result<u8, CliError> {
    if !group.eq_ignore_ascii_case("G2") {
        return Err(usage(format!("unsupported group {group}; closure supports G2")));
    }
    let f = parse_field(&field)?;
    let generators = scenarios::named_generators(&gens, &f).map_err(|e| usage(e.operands.as_str().unwrap_or("").to_string()))?;
    let start = Instant::now();
    let g = match FiniteSubgroup::closure(&generators, cap) {
        Ok(g) => g,
        Err(GroupError::CapExceeded { cap, partial }) => {
            print_json(&json!({"group": "G2", "field": f.to_string(), "gens": gens, "cap_exceeded": cap, "partial": partial}));
            return Ok(EXIT_SKIP);
        }
        Err(e) => return Err(CliError(EXIT_FAIL, e.to_string())),
    };
    let millis = start.elapsed().as_millis() as u64;
    let mut report = json!({
        "group": "G2",
        "field": f.to_string(),
        "gens": gens,
        "generators": g.generators().iter().map(|x| x.word().unwrap_or("?").to_string()).collect::<Vec<_>>(),
        "order": g.order(),
        "bfs_levels": g.stats().bfs_levels,
    });
    if !no_timing {
        report["millis"] = json!(millis);
    }
    if let Some(path) = dump {
        let file = File::create(&path).map_err(|e| CliError(EXIT_FAIL, format!("{}: {e}", path.display())))?;
        let mut w = BufWriter::new(file);
        g.write_dump(&mut w).map_err(|e| CliError(EXIT_FAIL, e.to_string()))?;
        w.flush().map_err(|e| CliError(EXIT_FAIL, e.to_string()))?;
        report["dump"] = json!(path.display().to_string());
    }
    print_json(&report);
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Verify {
            suite,
            scenario,
            field,
            out,
            budget,
            no_timing,
        } => verify(suite, scenario, field, out, budget, no_timing),
        Command::Rootsys { kind, format } => {
            let summary = parse_root_system(&kind)?.summary();
            if format != Format::Json {
                print!("{}", summary.to_text());
            }
            if format != Format::Text {
                print_json(&serde_json::to_value(&summary).expect("serializable"));
            }
            Ok(0)
        }
        Command::Primes { kind } => {
            let rs = parse_root_system(&kind)?;
            let c = rs.classify_primes();
            let small: Vec<u64> = [2u64, 3, 5, 7, 11, 13].to_vec();
            let table: Vec<_> = small
                .iter()
                .map(|&p| json!({"p": p, "good": c.is_good(p), "very_good": c.is_very_good(p)}))
                .collect();
            print_json(&json!({"type": rs.label(), "bad": c.bad, "type_a_order": c.type_a_order, "primes": table}));
            Ok(0)
        }
        Command::Structure { kind } => {
            let rs = parse_root_system(&kind)?;
            let label = rs.label();
            let form = ChevalleyForm::new(rs).map_err(|e| CliError(EXIT_FAIL, e.to_string()))?;
            let basis: Vec<String> = (0..form.dim()).map(|i| form.basis_label(i)).collect();
            print_json(&json!({
                "type": label,
                "dim": form.dim(),
                "basis": basis,
                "structure_constants": form.structure_constants(),
            }));
            Ok(0)
        }
        Command::Closure {
            group,
            field,
            gens,
            cap,
            dump,
            no_timing,
        } => closure(group, field, gens, cap, dump, no_timing),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
