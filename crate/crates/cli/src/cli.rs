//! Argument parsing and command execution.
//!
//! Exit codes: 0 divisible (or success), 1 not divisible, 2 usage or parse
//! error, 3 unsupported modulus, 4 correctness regression.

use std::io::Write;

use clap::{Parser, Subcommand};

use recdiv_core::reducer::Note1Outcome;
use recdiv_core::{
    classify, closed_form_t, inverse_t, is_divisible, note1_check, note1_survey, primes_up_to,
    Error, Modulus, ModulusClass,
};

use crate::bench::{self, BenchConfig, CSV_HEADER};
use crate::input::{read_number, InputError};
use crate::json::TraceJson;
use crate::selfcheck::{self, SelfcheckOptions};

pub const EXIT_DIVISIBLE: u8 = 0;
pub const EXIT_NOT_DIVISIBLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;
pub const EXIT_REGRESSION: u8 = 4;

pub const MAX_TABLE: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "recdiv",
    version,
    about = "Recurrence divisibility tests on decimal numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether a number is divisible by a modulus.
    Test {
        /// The number, `-` to read standard input, or `@path` to read a file.
        number: String,
        #[arg(long, short)]
        modulus: u64,
        /// Digits cancelled per step.
        #[arg(long, short, default_value_t = 1)]
        chunk: u32,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
        /// Emit the verdict and trace as JSON.
        #[arg(long, conflicts_with = "trace")]
        json: bool,
    },
    /// Show the witness multiplier t for a modulus coprime to 10.
    Multiplier {
        #[arg(long, short)]
        modulus: u64,
        #[arg(long, short, default_value_t = 1)]
        chunk: u32,
    },
    /// Tabulate p, unit digit, t(p) and k(p) for primes up to a bound.
    Table {
        #[arg(long)]
        max: u64,
    },
    /// Check whether one step removes exactly one digit.
    Note1 {
        #[arg(long, short)]
        modulus: u64,
        #[arg(long, required_unless_present = "survey", conflicts_with = "survey")]
        n: Option<String>,
        /// Tally outcomes over random numbers instead of a single input.
        #[arg(long, requires_all = ["digits", "samples"])]
        survey: bool,
        #[arg(long)]
        digits: Option<usize>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in correctness suite.
    Selfcheck {
        #[arg(long, hide = true)]
        inject_fault: Option<u64>,
    },
    /// Time the recurrence against direct reduction; CSV on standard output.
    Bench {
        #[arg(long)]
        digits: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        chunks: Vec<u32>,
        #[arg(long, short)]
        modulus: u64,
        #[arg(long, default_value_t = 5)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A command that ended with a non-verdict exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn unsupported(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_UNSUPPORTED,
            message: message.into(),
        }
    }

    fn regression(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_REGRESSION,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedModulus { .. }
            | Error::NotCoprimeToTen { .. }
            | Error::TrivialModulus => Failure::unsupported(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn execute(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Test {
            number,
            modulus,
            chunk,
            trace,
            json,
        } => cmd_test(&number, modulus, chunk, trace, json, out),
        Command::Multiplier { modulus, chunk } => cmd_multiplier(modulus, chunk, out),
        Command::Table { max } => cmd_table(max, out),
        Command::Note1 {
            modulus,
            n,
            survey,
            digits,
            samples,
            seed,
        } => match (n, survey) {
            (Some(n), false) => cmd_note1_point(modulus, &n, out),
            (None, true) => cmd_note1_survey(
                modulus,
                samples.unwrap_or_default(),
                digits.unwrap_or_default(),
                seed,
                out,
            ),
            _ => Err(Failure::usage("give either --n or --survey")),
        },
        Command::Selfcheck { inject_fault } => cmd_selfcheck(inject_fault, out),
        Command::Bench {
            digits,
            chunks,
            modulus,
            trials,
            seed,
        } => cmd_bench(digits, chunks, modulus, trials, seed, out),
    }
}

fn modulus(value: u64) -> Result<Modulus, Failure> {
    Modulus::new(value).map_err(|e| Failure::usage(e.to_string()))
}

/// Modulus for commands that need a witness multiplier.
fn coprime_modulus(value: u64) -> Result<Modulus, Failure> {
    let m = modulus(value)?;
    match classify(m) {
        ModulusClass::CoprimeToTen => Ok(m),
        ModulusClass::Trivial => Err(Failure::unsupported(
            "modulus 1 divides everything and has no witness multiplier",
        )),
        _ => Err(Failure::unsupported(format!(
            "modulus {value} is not coprime to 10; no witness multiplier exists"
        ))),
    }
}

pub fn cmd_test(
    number: &str,
    modulus_value: u64,
    chunk: u32,
    trace: bool,
    json: bool,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let n = read_number(number)?;
    let m = modulus(modulus_value)?;
    let verdict = is_divisible(&n, m, chunk)?;
    if json {
        let doc = TraceJson::from_verdict(&n, m, chunk, &verdict);
        writeln!(
            out,
            "{}",
            serde_json::to_string(&doc).expect("serializable")
        )?;
    } else {
        if trace {
            match &verdict.trace {
                Some(t) => {
                    let tm = t.multiplier().t();
                    for s in t.steps() {
                        writeln!(
                            out,
                            "{} -> {} - {}*{} = {}",
                            s.value_before, s.quotient, tm, s.tail, s.value_after
                        )?;
                    }
                    writeln!(
                        out,
                        "terminal {} (residue {} mod {})",
                        t.terminal_value(),
                        t.terminal_residue(),
                        m
                    )?;
                }
                None => writeln!(out, "unit digit {} checked directly", n.unit_digit())?,
            }
        }
        let text = if verdict.divisible {
            "divisible"
        } else {
            "not divisible"
        };
        writeln!(out, "{text}")?;
    }
    Ok(if verdict.divisible {
        EXIT_DIVISIBLE
    } else {
        EXIT_NOT_DIVISIBLE
    })
}

pub fn cmd_multiplier(modulus_value: u64, chunk: u32, out: &mut impl Write) -> Result<u8, Failure> {
    let m = coprime_modulus(modulus_value)?;
    let mult = inverse_t(m, chunk)?;
    let t = mult.t();
    writeln!(out, "modulus: {m}")?;
    writeln!(out, "chunk: {chunk}")?;
    writeln!(out, "t: {t}")?;
    if chunk == 1 {
        let (closed, case) = closed_form_t(m)?;
        if closed.t() != t {
            return Err(Failure::regression(format!(
                "closed form t = {} disagrees with Euclid t = {t} for m = {m}",
                closed.t()
            )));
        }
        let k = mult.k().expect("chunk 1 has a cofactor");
        writeln!(out, "k: {k}")?;
        writeln!(out, "case: {case}")?;
        writeln!(out, "method: extended Euclid, matches closed form")?;
        writeln!(
            out,
            "certificate: 10*{t} + 1 = {} = {k}*{m}",
            10 * t as u128 + 1
        )?;
    } else {
        writeln!(out, "method: extended Euclid")?;
        // 10^18 * (2^63 - 1) + 1 fits in u128
        let value = 10u128.pow(chunk) * t as u128 + 1;
        writeln!(
            out,
            "certificate: 10^{chunk}*{t} + 1 = {value} = {}*{m}",
            value / m.get() as u128
        )?;
    }
    Ok(0)
}

pub fn cmd_table(max: u64, out: &mut impl Write) -> Result<u8, Failure> {
    if max > MAX_TABLE {
        return Err(Failure::usage(format!("--max must be at most {MAX_TABLE}")));
    }
    writeln!(out, "p,ud,t,k")?;
    for p in primes_up_to(max)?.into_iter().filter(|&p| p != 2 && p != 5) {
        let m = Modulus::new(p)?;
        let (closed, _) = closed_form_t(m)?;
        let euclid = inverse_t(m, 1)?;
        let k = closed.k().expect("chunk 1 has a cofactor");
        if closed.t() != euclid.t() || 10 * closed.t() as u128 + 1 != k as u128 * p as u128 {
            return Err(Failure::regression(format!(
                "row for p = {p} failed verification: closed form t = {}, Euclid t = {}",
                closed.t(),
                euclid.t()
            )));
        }
        writeln!(out, "{p},{},{},{k}", p % 10, closed.t())?;
    }
    Ok(0)
}

fn outcome_name(outcome: Note1Outcome) -> &'static str {
    match outcome {
        Note1Outcome::Holds => "holds",
        Note1Outcome::FailsNonpositive => "fails_nonpositive",
        Note1Outcome::FailsCount => "fails_count",
    }
}

pub fn cmd_note1_point(modulus_value: u64, n: &str, out: &mut impl Write) -> Result<u8, Failure> {
    let m = coprime_modulus(modulus_value)?;
    let n = read_number(n)?;
    let check = note1_check(&n, m)?;
    writeln!(out, "{}", outcome_name(check.outcome))?;
    writeln!(out, "n = {n} ({} digits)", check.input_digits)?;
    writeln!(
        out,
        "step = {} ({} digits)",
        check.step_value,
        check.step_value.magnitude().digit_count()
    )?;
    Ok(0)
}

pub fn cmd_note1_survey(
    modulus_value: u64,
    samples: u64,
    digits: usize,
    seed: u64,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let m = coprime_modulus(modulus_value)?;
    let summary = note1_survey(m, samples, digits, seed)?;
    let pct = |count: u64| {
        if samples == 0 {
            0.0
        } else {
            100.0 * count as f64 / samples as f64
        }
    };
    writeln!(
        out,
        "modulus {m}, {samples} samples of {digits} digits, seed {seed}"
    )?;
    for (name, count) in [
        ("holds", summary.holds),
        ("fails_nonpositive", summary.fails_nonpositive),
        ("fails_count", summary.fails_count),
    ] {
        writeln!(out, "{name}: {count} ({:.2}%)", pct(count))?;
    }
    Ok(0)
}

pub fn cmd_selfcheck(inject_fault: Option<u64>, out: &mut impl Write) -> Result<u8, Failure> {
    let options = SelfcheckOptions { inject_fault };
    match selfcheck::run(&options, out) {
        Ok(()) => {
            writeln!(out, "selfcheck passed")?;
            Ok(0)
        }
        Err(failure) => Err(Failure::regression(format!("selfcheck FAILED: {failure}"))),
    }
}

pub fn cmd_bench(
    digits: usize,
    chunks: Vec<u32>,
    modulus_value: u64,
    trials: u64,
    seed: u64,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let m = coprime_modulus(modulus_value)?;
    if digits == 0 || digits > bench::MAX_DIGITS {
        return Err(Failure::usage(format!(
            "--digits must be in 1..={}",
            bench::MAX_DIGITS
        )));
    }
    if trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    let config = BenchConfig {
        digits,
        chunks,
        modulus: m,
        trials,
        seed,
    };
    let rows = bench::run(&config).map_err(|e| Failure::usage(e.to_string()))?;
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(0)
}
