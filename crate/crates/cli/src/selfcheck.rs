//! Reduced-scale correctness suite run by `recdiv selfcheck`.

use std::fmt;
use std::io::{self, Write};

use recdiv_core::oracle::{verify_trace, TraceViolation};
use recdiv_core::{
    brute_force_t, closed_form_t, exhaustive_verdict_scan, inverse_t, primes_up_to, reduce_chain,
    Counterexample, Lcg, Modulus,
};

pub const AGREEMENT_LIMIT: u64 = 10_000;
pub const SCAN_MODULI: [u64; 11] = [3, 7, 9, 11, 13, 17, 19, 21, 49, 91, 101];
pub const SCAN_N_MAX: u64 = 10_000;
const TRACE_SAMPLES: usize = 200;
const TRACE_SEED: u64 = 2024;

#[derive(Debug, Clone, Default)]
pub struct SelfcheckOptions {
    /// Adds one to the closed-form witness of this prime before comparing.
    pub inject_fault: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelfcheckFailure {
    Disagreement {
        prime: u64,
        closed_form: u64,
        euclid: u64,
        scan: u64,
    },
    NotUnique {
        prime: u64,
        solution_count: u64,
    },
    Scan {
        modulus: u64,
        counterexample: Counterexample,
    },
    Trace {
        modulus: u64,
        chunk: u32,
        n: String,
        violation: TraceViolation,
    },
    Internal(String),
}

impl fmt::Display for SelfcheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfcheckFailure::Disagreement {
                prime,
                closed_form,
                euclid,
                scan,
            } => write!(
                f,
                "multiplier disagreement for p = {prime}: closed form t = {closed_form}, \
                 Euclid t = {euclid}, scan t = {scan}"
            ),
            SelfcheckFailure::NotUnique {
                prime,
                solution_count,
            } => write!(
                f,
                "p = {prime}: {solution_count} solutions for t, expected 1"
            ),
            SelfcheckFailure::Scan {
                modulus,
                counterexample: c,
            } => write!(
                f,
                "verdict mismatch for n = {}, m = {modulus}, chunk = {}: expected {}, got {}",
                c.n, c.chunk, c.expected, c.got
            ),
            SelfcheckFailure::Trace {
                modulus,
                chunk,
                n,
                violation,
            } => write!(
                f,
                "trace invariant broken for m = {modulus}, chunk = {chunk}, n = {n}: {violation:?}"
            ),
            SelfcheckFailure::Internal(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<recdiv_core::Error> for SelfcheckFailure {
    fn from(e: recdiv_core::Error) -> Self {
        SelfcheckFailure::Internal(e.to_string())
    }
}

impl From<io::Error> for SelfcheckFailure {
    fn from(e: io::Error) -> Self {
        SelfcheckFailure::Internal(e.to_string())
    }
}

/// Runs all checks in order, stopping at the first failure.
pub fn run(options: &SelfcheckOptions, log: &mut impl Write) -> Result<(), SelfcheckFailure> {
    check_agreement(options, log)?;
    check_scans(log)?;
    check_traces(log)?;
    Ok(())
}

fn check_agreement(
    options: &SelfcheckOptions,
    log: &mut impl Write,
) -> Result<(), SelfcheckFailure> {
    let primes = primes_up_to(AGREEMENT_LIMIT)?;
    let mut checked = 0;
    for p in primes.into_iter().filter(|&p| p != 2 && p != 5) {
        let m = Modulus::new(p)?;
        let mut closed_form = closed_form_t(m)?.0.t();
        if options.inject_fault == Some(p) {
            closed_form += 1;
        }
        let euclid = inverse_t(m, 1)?.t();
        let scan = brute_force_t(m, 1)?;
        if scan.solution_count != 1 {
            return Err(SelfcheckFailure::NotUnique {
                prime: p,
                solution_count: scan.solution_count,
            });
        }
        if closed_form != euclid || euclid != scan.t {
            return Err(SelfcheckFailure::Disagreement {
                prime: p,
                closed_form,
                euclid,
                scan: scan.t,
            });
        }
        checked += 1;
    }
    writeln!(
        log,
        "ok  multiplier agreement for {checked} primes below {AGREEMENT_LIMIT}"
    )?;
    Ok(())
}

fn check_scans(log: &mut impl Write) -> Result<(), SelfcheckFailure> {
    for &v in &SCAN_MODULI {
        for chunk in 1..=3 {
            if let Some(counterexample) =
                exhaustive_verdict_scan(Modulus::new(v)?, chunk, SCAN_N_MAX)?
            {
                return Err(SelfcheckFailure::Scan {
                    modulus: v,
                    counterexample,
                });
            }
        }
    }
    writeln!(
        log,
        "ok  exhaustive verdict scan to {SCAN_N_MAX} for {} moduli, chunks 1-3",
        SCAN_MODULI.len()
    )?;
    Ok(())
}

fn check_traces(log: &mut impl Write) -> Result<(), SelfcheckFailure> {
    let mut rng = Lcg::new(TRACE_SEED);
    for i in 0..TRACE_SAMPLES {
        let v = SCAN_MODULI[i % SCAN_MODULI.len()];
        let chunk = (i % 3) as u32 + 1;
        let len = 1 + (rng.next_u32() % 200) as usize;
        let n = rng.digits(len);
        let trace = reduce_chain(&n, &inverse_t(Modulus::new(v)?, chunk)?);
        if let Err(violation) = verify_trace(&n, &trace) {
            return Err(SelfcheckFailure::Trace {
                modulus: v,
                chunk,
                n: n.to_text(),
                violation,
            });
        }
    }
    writeln!(log, "ok  trace invariants on {TRACE_SAMPLES} random chains")?;
    Ok(())
}
