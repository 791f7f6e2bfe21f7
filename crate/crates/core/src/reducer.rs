//! The recurrence divisibility test.
//!
//! One step maps `v` to `v' = q - t*r` with `q = floor(|v| / 10^c)` and
//! `r = |v| mod 10^c`. Then `10^c v' = |v| - r (10^c t + 1)` and `m` divides
//! `10^c t + 1`, so `10^c v' ≡ |v| (mod m)` and `m | v` iff `m | v'`. The
//! residue itself is not preserved, only whether it is zero.
//!
//! A chain stops once `|v| <= t (10^c - 1)`, the largest possible `t*r`.
//! Above that bound `t*r < |v|`, so either `v' = q - t*r <= floor(|v| / 10^c)`
//! or `v' = -(t*r - q)` with `|v'| <= t*r`, which is already terminal. Every
//! non-terminal step therefore shrinks the magnitude by a factor of at least
//! `10^c`, and the chain has at most about `digits(n) / c` steps. The verdict
//! comes from reducing the terminal magnitude, which fits in a `u128`.
//!
//! The sign of an intermediate value is dropped before the next step;
//! divisibility does not depend on it.

use alloc::vec::Vec;

use crate::digits::{sub_signed, DigitString, Sign, SignedValue};
use crate::error::{Error, Result};
use crate::multiplier::{classify, inverse_t, Modulus, ModulusClass, Multiplier};
use crate::rng::Lcg;

/// One application of the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    /// Value entering the step; the step uses its magnitude.
    pub value_before: SignedValue,
    pub quotient: DigitString,
    pub tail: u64,
    pub t_times_tail: DigitString,
    /// `quotient - t_times_tail`.
    pub value_after: SignedValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    multiplier: Multiplier,
    steps: Vec<StepRecord>,
    terminal_value: SignedValue,
    terminal_residue: u64,
    divisible: bool,
}

impl ReductionTrace {
    pub fn multiplier(&self) -> &Multiplier {
        &self.multiplier
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    pub fn terminal_value(&self) -> &SignedValue {
        &self.terminal_value
    }

    /// Terminal magnitude mod m. Zero exactly when the input is divisible,
    /// but in general not equal to the input's residue.
    pub fn terminal_residue(&self) -> u64 {
        self.terminal_residue
    }

    pub fn divisible(&self) -> bool {
        self.divisible
    }
}

/// Outcome of a chain run without recording steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSummary {
    pub steps: usize,
    pub terminal_residue: u64,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub divisible: bool,
    /// Present only when the recurrence was used (moduli coprime to 10, `m >= 3`).
    pub trace: Option<ReductionTrace>,
}

/// `floor(v / 10^c) - t * (v mod 10^c)`, exact and signed.
pub fn step(v: &DigitString, mult: &Multiplier) -> SignedValue {
    let t_digits = DigitString::from_u64(mult.t());
    step_record(SignedValue::positive(v.clone()), &t_digits, mult).value_after
}

fn step_record(before: SignedValue, t_digits: &DigitString, mult: &Multiplier) -> StepRecord {
    let (quotient, tail) = before
        .magnitude()
        .split_tail(mult.chunk())
        .expect("multiplier chunk is in range");
    let t_times_tail = t_digits.mul_small(tail);
    let value_after = sub_signed(&quotient, &t_times_tail);
    StepRecord {
        value_before: before,
        quotient,
        tail,
        t_times_tail,
        value_after,
    }
}

/// Returns the magnitude as `u128` if it is at or below the stop threshold.
fn terminal(magnitude: &DigitString, mult: &Multiplier) -> Option<u128> {
    magnitude.to_u128().filter(|&v| v <= mult.max_product())
}

fn finish(value: u128, mult: &Multiplier) -> (u64, bool) {
    let residue = (value % mult.modulus().get() as u128) as u64;
    (residue, residue == 0)
}

/// Runs the chain from `n`, recording every step.
pub fn reduce_chain(n: &DigitString, mult: &Multiplier) -> ReductionTrace {
    let t_digits = DigitString::from_u64(mult.t());
    let mut steps = Vec::new();
    let mut current = SignedValue::positive(n.clone());
    let final_magnitude = loop {
        if let Some(v) = terminal(current.magnitude(), mult) {
            break v;
        }
        let record = step_record(current, &t_digits, mult);
        debug_assert!(record.value_after.magnitude() < record.value_before.magnitude());
        current = record.value_after.clone();
        steps.push(record);
    };
    let (terminal_residue, divisible) = finish(final_magnitude, mult);
    ReductionTrace {
        multiplier: *mult,
        steps,
        terminal_value: current,
        terminal_residue,
        divisible,
    }
}

/// Same chain as [`reduce_chain`], computed in place without a trace.
pub fn reduce_verdict(n: &DigitString, mult: &Multiplier) -> ChainSummary {
    let mut v = n.clone();
    let mut steps = 0;
    let final_magnitude = loop {
        if let Some(x) = terminal(&v, mult) {
            break x;
        }
        let tail = v.take_tail(mult.chunk());
        v.abs_diff_in_place(mult.t() as u128 * tail as u128);
        steps += 1;
    };
    let (terminal_residue, divisible) = finish(final_magnitude, mult);
    ChainSummary {
        steps,
        terminal_residue,
        divisible,
    }
}

/// Divisibility of `n` by `m`.
///
/// `m = 1` is always true, 2 and 5 use the unit digit, other moduli coprime to
/// 10 run the chain with chunk size `chunk` (ignored otherwise). Any other
/// modulus is rejected with [`Error::UnsupportedModulus`].
pub fn is_divisible(n: &DigitString, m: Modulus, chunk: u32) -> Result<Verdict> {
    let unit = n.unit_digit();
    let divisible = match classify(m) {
        ModulusClass::Trivial => true,
        ModulusClass::Two => unit.is_multiple_of(2),
        ModulusClass::Five => unit == 0 || unit == 5,
        ModulusClass::Unsupported => return Err(Error::UnsupportedModulus { modulus: m.get() }),
        ModulusClass::CoprimeToTen => {
            let trace = reduce_chain(n, &inverse_t(m, chunk)?);
            return Ok(Verdict {
                divisible: trace.divisible(),
                trace: Some(trace),
            });
        }
    };
    Ok(Verdict {
        divisible,
        trace: None,
    })
}

/// Whether one step drops exactly one digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Note1Outcome {
    /// `digits(n) = digits(step) + 1`.
    Holds,
    /// The step value is zero or negative, so it has no decimal logarithm.
    FailsNonpositive,
    /// Positive step value whose digit count is not `digits(n) - 1`.
    FailsCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Note1Check {
    pub outcome: Note1Outcome,
    pub input_digits: usize,
    pub step_value: SignedValue,
}

/// Checks whether a single chunk-1 step on `n` removes exactly one digit.
pub fn note1_check(n: &DigitString, m: Modulus) -> Result<Note1Check> {
    let mult = coprime_multiplier(m)?;
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(note1_with(n, &mult))
}

fn coprime_multiplier(m: Modulus) -> Result<Multiplier> {
    match classify(m) {
        ModulusClass::CoprimeToTen => inverse_t(m, 1),
        ModulusClass::Trivial => Err(Error::TrivialModulus),
        _ => Err(Error::NotCoprimeToTen { modulus: m.get() }),
    }
}

fn note1_with(n: &DigitString, mult: &Multiplier) -> Note1Check {
    let step_value = step(n, mult);
    let input_digits = n.digit_count();
    let outcome = if step_value.is_zero() || step_value.sign() == Sign::Negative {
        Note1Outcome::FailsNonpositive
    } else if input_digits == step_value.magnitude().digit_count() + 1 {
        Note1Outcome::Holds
    } else {
        Note1Outcome::FailsCount
    };
    Note1Check {
        outcome,
        input_digits,
        step_value,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Note1Summary {
    pub holds: u64,
    pub fails_nonpositive: u64,
    pub fails_count: u64,
}

impl Note1Summary {
    pub fn total(&self) -> u64 {
        self.holds + self.fails_nonpositive + self.fails_count
    }

    fn record(&mut self, outcome: Note1Outcome) {
        match outcome {
            Note1Outcome::Holds => self.holds += 1,
            Note1Outcome::FailsNonpositive => self.fails_nonpositive += 1,
            Note1Outcome::FailsCount => self.fails_count += 1,
        }
    }
}

/// Tallies [`note1_check`] over `sample_count` values of exactly `digit_length`
/// digits drawn from [`Lcg::new(seed)`](Lcg).
pub fn note1_survey(
    m: Modulus,
    sample_count: u64,
    digit_length: usize,
    seed: u64,
) -> Result<Note1Summary> {
    let mult = coprime_multiplier(m)?;
    if digit_length == 0 {
        return Err(Error::DigitLengthZero);
    }
    let mut rng = Lcg::new(seed);
    let mut summary = Note1Summary::default();
    for _ in 0..sample_count {
        let n = rng.digits(digit_length);
        summary.record(note1_with(&n, &mult).outcome);
    }
    Ok(summary)
}
