//! Ground truth for the recurrence: direct residues and exhaustive scans.
//!
//! Nothing here depends on the reducer's arithmetic except
//! [`exhaustive_verdict_scan`], which exists to compare against it.

use crate::digits::{sub_signed, DigitString, SignedValue};
use crate::error::{Error, Result};
use crate::multiplier::{classify, Modulus, ModulusClass};
use crate::reducer::{is_divisible, ReductionTrace};

/// Largest `n_max` accepted by [`exhaustive_verdict_scan`].
pub const MAX_SCAN_N: u64 = 10_000_000;

/// `n mod m` by Horner's rule, most significant digit first.
pub fn mod_direct(n: &DigitString, m: Modulus) -> u64 {
    let m = m.get() as u128;
    let mut r = 0u128;
    for &d in n.digits().iter().rev() {
        r = (r * 10 + d as u128) % m;
    }
    r as u64
}

/// `v mod m` in `[0, m)` for a signed value.
pub fn mod_signed(v: &SignedValue, m: Modulus) -> u64 {
    let r = mod_direct(v.magnitude(), m);
    if v.is_negative() && r != 0 {
        m.get() - r
    } else {
        r
    }
}

/// First `n` where the recurrence verdict disagrees with `n mod m == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub n: u64,
    pub chunk: u32,
    pub expected: bool,
    pub got: bool,
}

/// Compares [`is_divisible`] with [`mod_direct`] for every `n` in `0..=n_max`.
pub fn exhaustive_verdict_scan(
    m: Modulus,
    chunk: u32,
    n_max: u64,
) -> Result<Option<Counterexample>> {
    match classify(m) {
        ModulusClass::CoprimeToTen => {}
        ModulusClass::Trivial => return Err(Error::TrivialModulus),
        _ => return Err(Error::NotCoprimeToTen { modulus: m.get() }),
    }
    if n_max > MAX_SCAN_N {
        return Err(Error::ScanLimitTooLarge { n_max });
    }
    for n in 0..=n_max {
        let digits = DigitString::from_u64(n);
        let expected = mod_direct(&digits, m) == 0;
        let got = is_divisible(&digits, m, chunk)?.divisible;
        if got != expected {
            return Ok(Some(Counterexample {
                n,
                chunk,
                expected,
                got,
            }));
        }
    }
    Ok(None)
}

/// A broken invariant in a [`ReductionTrace`]; `step` is the zero-based step index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceViolation {
    /// The first step does not start from the input.
    WrongStart,
    /// `value_before` of a step is not the previous step's `value_after`.
    BrokenLink { step: usize },
    /// `quotient * 10^c + tail != |value_before|`.
    BadSplit { step: usize },
    /// `value_after != quotient - t * tail`.
    BadDifference { step: usize },
    /// `10^c * value_after - |value_before|` is not divisible by `m`.
    ResidueTransport { step: usize },
    /// Magnitude did not strictly decrease.
    NoDecrease { step: usize },
    /// Chain longer than `ceil(digits(n) / c) + digits(m) + 2`.
    TooLong { steps: usize, bound: usize },
    /// Terminal value does not match the last step or the residue is wrong.
    BadTerminal,
    /// Verdict disagrees with `n mod m == 0`.
    WrongVerdict { expected: bool },
}

/// Checks every invariant of a trace produced from input `n`.
pub fn verify_trace(
    n: &DigitString,
    trace: &ReductionTrace,
) -> core::result::Result<(), TraceViolation> {
    let mult = trace.multiplier();
    let m = mult.modulus();
    let chunk = mult.chunk() as usize;
    let scale = DigitString::from_u64(1).shifted_left(chunk);
    let t = DigitString::from_u64(mult.t());
    let steps = trace.steps();

    if let Some(first) = steps.first() {
        if first.value_before != SignedValue::positive(n.clone()) {
            return Err(TraceViolation::WrongStart);
        }
    }
    for (i, s) in steps.iter().enumerate() {
        if i > 0 && s.value_before != steps[i - 1].value_after {
            return Err(TraceViolation::BrokenLink { step: i });
        }
        let rebuilt = s
            .quotient
            .shifted_left(chunk)
            .add(&DigitString::from_u64(s.tail));
        if &rebuilt != s.value_before.magnitude() || s.tail >= 10u64.pow(chunk as u32) {
            return Err(TraceViolation::BadSplit { step: i });
        }
        let product = t.mul_small(s.tail);
        if product != s.t_times_tail || sub_signed(&s.quotient, &product) != s.value_after {
            return Err(TraceViolation::BadDifference { step: i });
        }
        // the step acts on |before|, so transport is checked against the magnitude
        let lhs = mod_signed(&s.value_after, m) as u128 * mod_direct(&scale, m) as u128;
        if (lhs % m.get() as u128) as u64 != mod_direct(s.value_before.magnitude(), m) {
            return Err(TraceViolation::ResidueTransport { step: i });
        }
        if s.value_after.magnitude() >= s.value_before.magnitude() {
            return Err(TraceViolation::NoDecrease { step: i });
        }
    }
    let bound = n.digit_count().div_ceil(chunk) + m.digit_count() + 2;
    if steps.len() > bound {
        return Err(TraceViolation::TooLong {
            steps: steps.len(),
            bound,
        });
    }
    let expected_terminal = steps
        .last()
        .map(|s| s.value_after.clone())
        .unwrap_or_else(|| SignedValue::positive(n.clone()));
    if &expected_terminal != trace.terminal_value()
        || mod_direct(trace.terminal_value().magnitude(), m) != trace.terminal_residue()
    {
        return Err(TraceViolation::BadTerminal);
    }
    let expected = mod_direct(n, m) == 0;
    if trace.divisible() != expected {
        return Err(TraceViolation::WrongVerdict { expected });
    }
    Ok(())
}
