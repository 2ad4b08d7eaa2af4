//! `ellint` — command-line front end for the verification catalog.
//!
//! Commands:
//!
//! * `list` — print the registry (id, family, domain, tolerance, notes);
//! * `eval` — evaluate K or E at given moduli;
//! * `verify` — verify one entry across its applicable parameter values;
//! * `verify-all` — verify every entry across a modulus grid;
//! * `report` — like `verify-all`, plus a human summary on the error stream.
//!
//! Exit codes: 0 when everything requested passed, 1 when any verification
//! failed, 2 on usage or domain errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ellint::catalog::{
    self, default_grid, list_entries, verify_entry_over_grid, zero_timing, CatalogError,
    VerificationResult,
};
use ellint::elliptic::{ellip_e_at, ellip_k_at};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ellint",
    version,
    about = "Dual-route verification of classical elliptic-integral table entries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every catalog entry.
    List(ListArgs),
    /// Evaluate a complete elliptic integral at given moduli.
    Eval(EvalArgs),
    /// Verify one entry across its applicable parameter values.
    Verify(VerifyArgs),
    /// Verify every entry across a modulus grid.
    #[command(name = "verify-all")]
    VerifyAll(VerifyAllArgs),
    /// Run the full verification and write the report, with a summary on
    /// the error stream.
    Report(VerifyAllArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    /// Comma-separated modulus values in [0, 1), e.g. `--k 0.1,0.5,0.9`.
    /// Default: the built-in grid {0.1, 0.3, 0.5, 0.7, 0.9} plus the five
    /// singular moduli.
    #[arg(long = "k", value_name = "K1,K2,...", value_delimiter = ',')]
    k: Option<Vec<f64>>,
    /// Override every entry's default verification tolerance.
    #[arg(long, value_name = "TOL")]
    tol: Option<f64>,
    /// Zero the elapsed_ms field so identical runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EvalArgs {
    /// Which integral to evaluate: K or E.
    #[arg(value_name = "FUNCTION")]
    function: String,
    /// Comma-separated modulus values.
    #[arg(
        long = "k",
        value_name = "K1,K2,...",
        value_delimiter = ',',
        required = true
    )]
    k: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Entry id, e.g. GR-3.842.3a (see `list`).
    #[arg(value_name = "ID")]
    id: String,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

/// A usage or domain problem: message on stderr, exit code 2.
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::List(args) => cmd_list(&args),
        Command::Eval(args) => cmd_eval(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::VerifyAll(args) => cmd_verify_all(&args, false),
        Command::Report(args) => cmd_verify_all(&args, true),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn validate_grid(grid: &GridArgs) -> Result<(), UsageError> {
    if let Some(tol) = grid.tol {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(UsageError(format!("--tol must be positive, got {tol}")));
        }
    }
    if let Some(ks) = &grid.k {
        for k in ks {
            if !(k.is_finite() && (0.0..1.0).contains(k)) {
                return Err(UsageError(format!("--k values must lie in [0, 1), got {k}")));
            }
        }
    }
    Ok(())
}

fn emit(text: &str, out: &OutputArgs) -> Result<(), UsageError> {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &out.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_list(args: &ListArgs) -> Result<ExitCode, UsageError> {
    let entries = list_entries();
    let body = match args.format {
        Format::Text => {
            let mut s = String::new();
            for e in entries {
                writeln!(
                    s,
                    "{:<16} [{}] {}\n{:<16} domain: {}; default tol {:.0e}{}{}",
                    e.id,
                    e.family,
                    e.description,
                    "",
                    e.domain_summary(),
                    e.default_tol,
                    if e.principal_value {
                        "; principal value"
                    } else {
                        ""
                    },
                    match e.errata {
                        Some(note) => format!("; errata: {note}"),
                        None => String::new(),
                    },
                )
                .expect("writing to a String cannot fail");
            }
            s
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "id": e.id,
                        "family": e.family,
                        "description": e.description,
                        "domain": e.domain_summary(),
                        "default_tol": e.default_tol,
                        "principal_value": e.principal_value,
                        "errata": e.errata,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("listing serialization cannot fail")
        }
        Format::Csv => {
            let mut s =
                String::from("id,family,description,domain,default_tol,principal_value,errata\n");
            for e in entries {
                writeln!(
                    s,
                    "{},{},\"{}\",\"{}\",{},{},\"{}\"",
                    e.id,
                    e.family,
                    e.description,
                    e.domain_summary(),
                    e.default_tol,
                    e.principal_value,
                    e.errata.unwrap_or(""),
                )
                .expect("writing to a String cannot fail");
            }
            s
        }
    };
    emit(&body, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode, UsageError> {
    let mut values = Vec::with_capacity(args.k.len());
    for &k in &args.k {
        let value = match args.function.as_str() {
            "K" | "k" => ellip_k_at(k)?,
            "E" | "e" => ellip_e_at(k)?,
            other => {
                return Err(UsageError(format!(
                    "unknown function `{other}`; expected K or E"
                )))
            }
        };
        values.push(value);
    }
    let body = match args.format {
        Format::Text => values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string(&values).expect("numbers always serialize"),
        Format::Csv => {
            let mut s = String::from("k,value\n");
            for (k, v) in args.k.iter().zip(&values) {
                writeln!(s, "{k},{v}").expect("writing to a String cannot fail");
            }
            s
        }
    };
    emit(&body, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn render(results: &[VerificationResult], format: Format) -> String {
    match format {
        Format::Json => catalog::to_json(results),
        Format::Csv => catalog::to_csv(results),
        Format::Text => {
            let mut s = String::new();
            for r in results {
                let params = if r.params.is_empty() {
                    "-".to_string()
                } else {
                    r.params
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(
                    s,
                    "{:<14} {:<22} lhs={:<22} rhs={:<22} abs_err={:9.3e} rel_err={:9.3e} evals={:<8} elapsed_ms={:<5} {}",
                    r.id,
                    params,
                    r.lhs,
                    r.rhs,
                    r.abs_err,
                    r.rel_err,
                    r.evals,
                    r.elapsed_ms,
                    if r.pass { "PASS" } else { "FAIL" },
                )
                .expect("writing to a String cannot fail");
            }
            s
        }
    }
}

fn exit_by_pass(results: &[VerificationResult]) -> ExitCode {
    if results.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, UsageError> {
    validate_grid(&args.grid)?;
    let grid = args.grid.k.clone().unwrap_or_else(default_grid);
    let mut results = match verify_entry_over_grid(&args.id, &grid, args.grid.tol) {
        Ok(results) => results,
        Err(e @ (CatalogError::UnknownEntry(_) | CatalogError::OutOfDomain { .. })) => {
            return Err(UsageError(e.to_string()))
        }
        Err(e) => return Err(UsageError(e.to_string())),
    };
    if results.is_empty() {
        return Err(UsageError(format!(
            "none of the requested parameter values lie in the domain of `{}`",
            args.id
        )));
    }
    if args.grid.no_timing {
        zero_timing(&mut results);
    }
    emit(&render(&results, args.format), &args.out)?;
    Ok(exit_by_pass(&results))
}

fn cmd_verify_all(args: &VerifyAllArgs, summarize: bool) -> Result<ExitCode, UsageError> {
    validate_grid(&args.grid)?;
    let grid = args.grid.k.clone().unwrap_or_else(default_grid);
    let mut results = catalog::verify_all(&grid, args.grid.tol);
    if args.grid.no_timing {
        zero_timing(&mut results);
    }
    emit(&render(&results, args.format), &args.out)?;
    if summarize {
        let failed = results.iter().filter(|r| !r.pass).count();
        let evals: u64 = results.iter().map(|r| r.evals).sum();
        eprintln!(
            "{} checks across {} entries: {} failed ({} oracle evaluations)",
            results.len(),
            list_entries().len(),
            failed,
            evals,
        );
    }
    Ok(exit_by_pass(&results))
}
