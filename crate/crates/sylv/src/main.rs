//! `sylv`: representability, gap sets, and Sylvester power sums for a pair
//! of coprime coin values, with exact arithmetic throughout.
//!
//! Exit codes are part of the contract: 0 success (or "representable"),
//! 1 gap / failed verification, 2 bad input, 3 resource limit, 4 internal
//! invariant violation.

mod bench;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use sylvester::identities::{
    alternating_identity_sides, bijection_coverage, binomial_transform_sides,
    check_special_cases, VerifyReport,
};
use sylvester::representability::{
    count_representations, count_representations_oracle, gap_certificate,
    is_representable_division, witness,
};
use sylvester::{gaps, sylvester_sums, CoprimePair, DEFAULT_MAX_CELLS};

#[derive(Parser)]
#[command(name = "sylv", version, about = "Two-coin Frobenius computations in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMethod {
    /// Residue counting formula
    Binner,
    /// Division-algorithm criterion (needs a >= 2)
    Division,
    /// Counting loop over all candidate representations
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum GapMethodArg {
    /// Positive values of a*a1 + b*b1 - ab over the residue grid
    Chi,
    /// Forward reachability sieve over [0, ab)
    Sieve,
}

#[derive(Clone, Copy, ValueEnum)]
enum SumMethodArg {
    /// Exact recursion; works for pairs far beyond enumeration
    Recursive,
    /// Direct sum over the enumerated gap set
    Enumerate,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number and gap count of a coprime pair
    Frobenius {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Decide whether n is representable as a*x + b*y
    Check {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
        #[arg(long, value_enum, default_value = "binner")]
        method: CheckMethod,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Enumerate the gap set
    Gaps {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(long, value_enum, default_value = "chi")]
        method: GapMethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the output here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Cell budget for enumeration (overrides SYLV_MAX_CELLS)
        #[arg(long)]
        max_cells: Option<u64>,
    },
    /// Power sums S_0 ..= S_m over the gap set
    Sums {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        m: u32,
        #[arg(long, value_enum, default_value = "recursive")]
        method: SumMethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the output here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Cell budget for enumeration (overrides SYLV_MAX_CELLS)
        #[arg(long)]
        max_cells: Option<u64>,
    },
    /// Re-run the identity sweeps that back the closed forms
    Verify {
        /// Upper bound on pair values (and the alternating identity's n)
        #[arg(long, default_value_t = 20)]
        pairs_up_to: u64,
        /// Upper bound on the binomial transform exponent
        #[arg(long, default_value_t = 6)]
        m_up_to: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Time both sum routes over a CSV file of pairs
    Bench {
        /// CSV file with header "a,b" and one coprime pair per row
        pairs_file: PathBuf,
        /// Power sum index to compute
        #[arg(long, default_value_t = 5)]
        m: u32,
        /// Timing repetitions per route (median reported)
        #[arg(long, default_value_t = 3)]
        repetitions: u32,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Cell budget for the enumeration route (overrides SYLV_MAX_CELLS)
        #[arg(long)]
        max_cells: Option<u64>,
    },
}

/// A failure destined for stderr plus a contract exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<sylvester::Error> for CliError {
    fn from(e: sylvester::Error) -> Self {
        let code = match e {
            sylvester::Error::NonPositive { .. }
            | sylvester::Error::NotCoprime { .. }
            | sylvester::Error::UnsupportedPair { .. } => 2,
            sylvester::Error::ResourceLimit { .. } => 3,
            sylvester::Error::Invariant(_) => 4,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("not an integer: {s:?}"))
}

/// --max-cells beats SYLV_MAX_CELLS beats the built-in default.
fn resolve_max_cells(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("SYLV_MAX_CELLS") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::input(format!("SYLV_MAX_CELLS is not a u64: {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_CELLS),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::input("SYLV_MAX_CELLS is not valid unicode"))
        }
    }
}

fn emit(rendered: String, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Frobenius { a, b, format } => {
            let pair = CoprimePair::new(a, b)?;
            print!("{}", output::render_frobenius(&pair, format));
            Ok(0)
        }
        Command::Check {
            a,
            b,
            n,
            method,
            format,
        } => cmd_check(a, b, n, method, format),
        Command::Gaps {
            a,
            b,
            method,
            format,
            output,
            max_cells,
        } => {
            let pair = CoprimePair::new(a, b)?;
            let max_cells = resolve_max_cells(max_cells)?;
            let set = match method {
                GapMethodArg::Chi => gaps::enumerate_gaps_chi(&pair, max_cells)?,
                GapMethodArg::Sieve => gaps::enumerate_gaps_sieve(&pair, max_cells)?,
            };
            emit(output::render_gaps(&set, format), output.as_ref())?;
            Ok(0)
        }
        Command::Sums {
            a,
            b,
            m,
            method,
            format,
            output,
            max_cells,
        } => {
            let pair = CoprimePair::new(a, b)?;
            let max_cells = resolve_max_cells(max_cells)?;
            let table = match method {
                SumMethodArg::Recursive => sylvester_sums::sylvester_sums_recursive(&pair, m)?,
                SumMethodArg::Enumerate => {
                    sylvester_sums::sylvester_sums_enumerate(&pair, m, max_cells)?
                }
            };
            emit(output::render_sums(&table, format), output.as_ref())?;
            Ok(0)
        }
        Command::Verify {
            pairs_up_to,
            m_up_to,
            format,
        } => cmd_verify(pairs_up_to, m_up_to, format),
        Command::Bench {
            pairs_file,
            m,
            repetitions,
            output,
            max_cells,
        } => {
            let max_cells = resolve_max_cells(max_cells)?;
            let pairs = bench::parse_pairs_file(&pairs_file)?;
            let rows = bench::run(&pairs, m, repetitions, max_cells)?;
            emit(bench::render_csv(&rows), output.as_ref())?;
            Ok(0)
        }
    }
}

fn cmd_check(
    a: BigInt,
    b: BigInt,
    n: BigInt,
    method: CheckMethod,
    format: Format,
) -> Result<i32, CliError> {
    let pair = CoprimePair::new(a, b)?;
    if n.is_negative() {
        return Err(CliError::input(format!("n must be nonnegative, got {n}")));
    }
    let (method_name, representable, count) = match method {
        CheckMethod::Binner => {
            let count = count_representations(&pair, &n);
            ("binner", count.is_positive(), count)
        }
        CheckMethod::Brute => {
            let count = count_representations_oracle(&pair, &n);
            ("brute", count.is_positive(), count)
        }
        CheckMethod::Division => {
            let data = is_representable_division(&pair, &n)?;
            (
                "division",
                data.holds,
                count_representations(&pair, &n),
            )
        }
    };
    let w = witness(&pair, &n);
    let c = gap_certificate(&pair, &n);
    if w.is_some() != representable || c.is_some() == representable {
        return Err(CliError {
            code: 4,
            message: format!(
                "methods disagree for n={n}: {method_name} says representable={representable} \
                 but the residue formulas say {}",
                w.is_some()
            ),
        });
    }
    print!(
        "{}",
        output::render_check(&pair, &n, method_name, representable, &count, &w, &c, format)
    );
    Ok(if representable { 0 } else { 1 })
}

fn cmd_verify(pairs_up_to: u64, m_up_to: u32, format: Format) -> Result<i32, CliError> {
    let max_cells = resolve_max_cells(None)?;
    let mut report = VerifyReport::default();

    for n in 1..=pairs_up_to {
        for m in 1..=n {
            let (lhs, rhs) = alternating_identity_sides(n, m);
            report.record(
                "alternating_identity",
                format!("n={n} m={m}"),
                lhs.to_string(),
                rhs.to_string(),
            );
        }
    }

    for a in 1..=pairs_up_to {
        for b in a..=pairs_up_to {
            let Ok(pair) = CoprimePair::new(BigInt::from(a), BigInt::from(b)) else {
                continue;
            };
            for n in 0..=m_up_to {
                let (lhs, rhs) = binomial_transform_sides(&pair, n, max_cells)?;
                report.record(
                    "binomial_transform",
                    format!("a={a} b={b} n={n}"),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
            let cov = bijection_coverage(&pair, max_cells)?;
            report.record(
                "chi_bijection",
                format!(
                    "a={a} b={b} duplicates={} zero_products={}",
                    cov.duplicates, cov.zero_products
                ),
                cov.covered.to_string(),
                cov.cells.to_string(),
            );
        }
    }

    for a in 1..=pairs_up_to {
        report.merge(check_special_cases(a, a * (a + 2)));
    }

    print!("{}", output::render_verify(&report, format));
    if let Some(failure) = report.first_failure() {
        eprintln!(
            "verification failed: {} ({}) lhs={} rhs={}",
            failure.name, failure.parameters, failure.lhs, failure.rhs
        );
    }
    Ok(verify_exit_code(&report))
}

fn verify_exit_code(report: &VerifyReport) -> i32 {
    if report.all_passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_reports_map_to_exit_one() {
        let mut report = VerifyReport::default();
        report.record("demo", "p=0".into(), "1".into(), "1".into());
        assert_eq!(verify_exit_code(&report), 0);
        report.record("demo", "p=1".into(), "1".into(), "2".into());
        assert_eq!(verify_exit_code(&report), 1);
    }

    #[test]
    fn error_codes_follow_the_contract() {
        use sylvester::Error;
        let cases: Vec<(Error, i32)> = vec![
            (
                Error::NonPositive {
                    value: BigInt::from(0),
                },
                2,
            ),
            (
                Error::NotCoprime {
                    a: BigInt::from(4),
                    b: BigInt::from(6),
                    gcd: BigInt::from(2),
                },
                2,
            ),
            (
                Error::UnsupportedPair {
                    reason: "a = 1".into(),
                },
                2,
            ),
            (
                Error::ResourceLimit {
                    cells: BigInt::from(100),
                    max_cells: 10,
                },
                3,
            ),
            (Error::Invariant("broken".into()), 4),
        ];
        for (err, code) in cases {
            assert_eq!(CliError::from(err).code, code);
        }
    }
}
