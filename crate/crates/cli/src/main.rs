//! `qgordon`: batch driver for the solver, the identity checks and the
//! ideal-quotient oracle.
//!
//! Exit codes: 0 when every comparison matched, 1 when a well-formed run
//! found a mismatch, 2 on usage errors. Data goes to stdout, progress to
//! stderr.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qgordon::oracle::hilbert_table;
use qgordon::selberg::{solve, RecursionFamily};
use qgordon::verify::{crosscheck, recursion_reports, verify_gordon};
use qgordon::{GordonCondition, VerificationReport};

// Soft limits keep dense tables and exhaustive enumerations at desk scale.
const MAX_LEVEL: usize = 16;
const MAX_X_ORDER: usize = 200;
const MAX_Q_ORDER: usize = 2000;
const MAX_PARTITION_WEIGHT: usize = 80;
const MAX_ORACLE_CHARGE: usize = 10;
const MAX_ORACLE_WEIGHT: usize = 24;

#[derive(Parser, Debug)]
#[command(
    name = "qgordon",
    version,
    about = "Exact checks of Rogers-Selberg recursions and Andrews-Gordon identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the level-k recursion system and print F_0, ..., F_k.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        xmax: usize,
        #[arg(long)]
        qmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check Gordon's identities and the Andrews-Gordon multisum up to q^qmax.
    VerifyGordon {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        qmax: usize,
        /// x-order used for the multisum before specializing x = 1.
        #[arg(long, default_value_t = 12)]
        xmax: usize,
    },
    /// Dimensions of the quotient of C[y_-1, y_-2, ...] by the ideal for (k, e).
    Oracle {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long)]
        wmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare solver, multisum and oracle for every e in 1..=k+1.
    Crosscheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long)]
        wmax: usize,
    },
    /// Check a stored family (JSON, `-` for stdin) against the recursions.
    CheckRecursions {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), UsageError> {
    if cond {
        Ok(())
    } else {
        Err(UsageError(msg()))
    }
}

fn limit(name: &str, value: usize, max: usize) -> Result<(), UsageError> {
    ensure(value <= max, || {
        format!("--{name} {value} exceeds the limit {max}")
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Solve {
            k,
            xmax,
            qmax,
            format,
        } => {
            ensure(k >= 1, || "--k must be at least 1".into())?;
            limit("k", k, MAX_LEVEL)?;
            limit("xmax", xmax, MAX_X_ORDER)?;
            limit("qmax", qmax, MAX_Q_ORDER)?;
            eprintln!("solving level {k} on window ({xmax}, {qmax})");
            let fam = solve(k, xmax, qmax)?;
            let out = match format {
                Format::Json => serde_json::to_string(&fam)? + "\n",
                Format::Tsv => fam.to_tsv(),
            };
            emit(&out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyGordon { l, t, qmax, xmax } => {
            let cond = GordonCondition::new(l, t)?;
            limit("qmax", qmax, MAX_PARTITION_WEIGHT)?;
            limit("xmax", xmax, MAX_X_ORDER)?;
            eprintln!("verifying l = {l}, t = {t} up to q^{qmax}");
            reports(&verify_gordon(cond, qmax, xmax)?)
        }
        Command::Oracle {
            k,
            e,
            mmax,
            wmax,
            format,
        } => {
            ensure(k >= 1, || "--k must be at least 1".into())?;
            ensure((1..=k + 1).contains(&e), || {
                format!("--e must lie in 1..={}", k + 1)
            })?;
            limit("mmax", mmax, MAX_ORACLE_CHARGE)?;
            limit("wmax", wmax, MAX_ORACLE_WEIGHT)?;
            eprintln!("quotient dimensions for k = {k}, e = {e} on window ({mmax}, {wmax})");
            let table = hilbert_table(k, e, mmax, wmax)?;
            let out = match format {
                Format::Tsv => table.to_tsv(),
                Format::Json => serde_json::to_string(&table.to_series())? + "\n",
            };
            emit(&out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Crosscheck { k, mmax, wmax } => {
            ensure(k >= 1, || "--k must be at least 1".into())?;
            limit("k", k, MAX_LEVEL)?;
            limit("mmax", mmax, MAX_ORACLE_CHARGE)?;
            limit("wmax", wmax, MAX_ORACLE_WEIGHT)?;
            eprintln!("cross-checking level {k} on window ({mmax}, {wmax})");
            reports(&crosscheck(k, mmax, wmax)?)
        }
        Command::CheckRecursions { input } => {
            let text = if input.as_os_str() == "-" {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                fs::read_to_string(&input)
                    .map_err(|e| UsageError(format!("{}: {e}", input.display())))?
            };
            let fam: RecursionFamily = serde_json::from_str(&text)?;
            eprintln!(
                "checking level-{} family on window {:?}",
                fam.k(),
                fam.orders()
            );
            reports(&recursion_reports(&fam))
        }
    }
}

fn reports(reports: &[VerificationReport]) -> Result<ExitCode, UsageError> {
    emit(&(serde_json::to_string_pretty(reports)? + "\n"))?;
    let failed = reports.iter().filter(|r| !r.is_match()).count();
    if failed == 0 {
        eprintln!("all {} comparisons matched", reports.len());
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{failed} of {} comparisons mismatched", reports.len());
        Ok(ExitCode::from(1))
    }
}

fn emit(out: &str) -> Result<(), UsageError> {
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Ok(()) => Ok(()),
        // closed pipe downstream is not an error for a batch tool
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}
