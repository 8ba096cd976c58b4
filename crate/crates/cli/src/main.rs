//! `qcf`: list, verify and explore the identity registry.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use qcf_core::arith::{Rat, CF64};
use qcf_core::cfrac::convergents;
use qcf_core::objects::{named_fraction, root_of_unity_limit_sides, FRACTION_IDS};
use qcf_core::verifier::{self, registry, VerificationReport};
use qcf_core::Error;

/// `println!` that tolerates a closed stdout (e.g. piping into `head`).
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser, Debug)]
#[command(name = "qcf", version, about = "Exact verification of q-continued fractions and q-series identities")]
struct Cli {
    /// Truncation order in powers of q.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,
    /// Random draws for rows without a degree bound.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    draws: u64,
    /// Base seed; QCF_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Also write JSON to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List registry rows.
    List,
    /// Verify one registry row.
    Verify { id: String },
    /// Verify every registry row.
    VerifyAll,
    /// Print the N-th numerator and denominator of a named fraction.
    Convergents {
        id: String,
        #[arg(long = "N", short = 'N')]
        n: usize,
        /// Parameter value, e.g. `--set a=1/2`; repeatable.
        #[arg(long = "set", value_parser = parse_setting)]
        set: Vec<(String, Rat)>,
    },
    /// Floating-point checks.
    NumericCheck {
        #[command(subcommand)]
        check: NumericCheck,
    },
}

#[derive(Subcommand, Debug)]
enum NumericCheck {
    /// The order-m Ramanujan limit at depth mk + i − 1, for every residue i
    /// unless one is given.
    #[command(name = "theorem11")]
    RootOfUnity {
        #[arg(long)]
        m: u32,
        /// q as `re,im` (or just `re`).
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        q: CF64,
        #[arg(long, default_value_t = 40)]
        k: usize,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn parse_setting(s: &str) -> Result<(String, Rat), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let value = value.trim().parse::<Rat>().map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), value))
}

fn parse_complex(s: &str) -> Result<CF64, String> {
    CF64::parse_pair(s).map_err(|e| e.to_string())
}

/// Failures that end the run, with their exit code.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit_json(cli: &Cli, value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    if cli.json {
        say!("{text}");
    }
    if let Some(path) = &cli.out {
        std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn print_reports(reports: &[VerificationReport]) {
    say!("{:<16} {:<5} {:<22} {:>6} {:>9}  detail", "id", "status", "certificate", "points", "ms");
    for r in reports {
        let certificate = serde_json::to_value(r.certificate).expect("serializes");
        let detail = match (&r.first_mismatch, &r.error) {
            (Some(m), _) => format!(
                "{}: q^{} differs ({} vs {}) at {}",
                m.check, m.coefficient, m.lhs, m.rhs, r.assignments[m.assignment]
            ),
            (None, Some(e)) => e.clone(),
            (None, None) => String::new(),
        };
        say!(
            "{:<16} {:<6} {:<22} {:>6} {:>9}  {}",
            r.id,
            if r.passed() { "pass" } else { "FAIL" },
            certificate.as_str().unwrap_or_default(),
            r.assignments.len(),
            r.elapsed_ms,
            detail
        );
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let order = cli.order as usize;
    let draws = cli.draws as usize;
    let seed = match std::env::var("QCF_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("QCF_SEED={v:?} is not an integer")))?,
        Err(_) => cli.seed,
    };
    match &cli.command {
        Command::List => {
            let rows = verifier::list_identities();
            if cli.json || cli.out.is_some() {
                emit_json(cli, &serde_json::to_value(&rows).expect("serializes"))?;
            }
            if !cli.json {
                for row in &rows {
                    let kind = if row.complete { "complete" } else { "sampled" };
                    say!("{:<16} {:<9} [{}] {}", row.id, kind, row.parameters.join(", "), row.statement);
                }
            }
            Ok(())
        }
        Command::Verify { id } => {
            let report = verifier::verify(id, order, draws, seed)?;
            finish(cli, vec![report])
        }
        Command::VerifyAll => {
            let mut reports: Vec<VerificationReport> = registry()
                .par_iter()
                .map(|case| verifier::verify(case.id, order, draws, seed))
                .collect::<Result<_, _>>()?;
            reports.sort_by(|a, b| a.id.cmp(&b.id));
            finish(cli, reports)
        }
        Command::Convergents { id, n, set } => {
            let upper = id.to_ascii_uppercase();
            if !FRACTION_IDS.contains(&upper.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown fraction {id:?}; known: {}",
                    FRACTION_IDS.join(", ")
                )));
            }
            let values: HashMap<String, Rat> = set.iter().cloned().collect();
            let cf = named_fraction(&upper, &values, order)?;
            let pairs = convergents(&cf, *n)?;
            let last = &pairs[*n];
            if cli.json || cli.out.is_some() {
                let show = |s: &qcf_core::series::Series<Rat>| {
                    s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()
                };
                let value = serde_json::json!({
                    "id": upper, "N": n, "order": order,
                    "numerator": show(&last.numer), "denominator": show(&last.denom),
                });
                emit_json(cli, &value)?;
            }
            if !cli.json {
                say!("{upper}, N = {n}, through q^{order}");
                say!("{:>5}  {:>24}  {:>24}", "k", "numerator", "denominator");
                for k in 0..=order {
                    say!("{:>5}  {:>24}  {:>24}", k, last.numer.coeff(k).to_string(), last.denom.coeff(k).to_string());
                }
            }
            Ok(())
        }
        Command::NumericCheck { check: NumericCheck::RootOfUnity { m, q, k, i, tol } } => {
            if *m < 3 || i.is_some_and(|i| i == 0 || i > *m) {
                return Err(Failure::Usage("need m ≥ 3 and 1 ≤ i ≤ m".into()));
            }
            let residues: Vec<u32> = i.map_or_else(|| (1..=*m).collect(), |i| vec![i]);
            let mut all = true;
            let mut rows = Vec::new();
            for i in residues {
                let (approx, limit) = root_of_unity_limit_sides(*m, i, *q, *k)?;
                let gap = (approx - limit).abs();
                let ok = gap < *tol;
                all &= ok;
                if !cli.json {
                    say!(
                        "m = {m}, i = {i}: approximant {:.15}{:+.15}i, limit {:.15}{:+.15}i, gap {gap:.3e} {}",
                        approx.re(), approx.im(), limit.re(), limit.im(),
                        if ok { "pass" } else { "FAIL" }
                    );
                }
                rows.push(serde_json::json!({
                    "m": m, "i": i, "k": k, "gap": gap, "status": if ok { "pass" } else { "fail" },
                }));
            }
            if cli.json || cli.out.is_some() {
                emit_json(cli, &serde_json::Value::Array(rows))?;
            }
            if all { Ok(()) } else { Err(Failure::Verification) }
        }
    }
}

fn finish(cli: &Cli, reports: Vec<VerificationReport>) -> Result<(), Failure> {
    if cli.json || cli.out.is_some() {
        let value = if reports.len() == 1 && matches!(cli.command, Command::Verify { .. }) {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        };
        emit_json(cli, &value.expect("reports serialize"))?;
    }
    if !cli.json {
        print_reports(&reports);
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
