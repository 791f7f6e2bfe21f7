//! Recurrence divisibility tests for arbitrary-precision decimal numbers.
//!
//! For a modulus `m` coprime to 10 there is a unique witness `t` with
//! `10^c * t ≡ -1 (mod m)`, and
//!
//! ```text
//! m | v  <=>  m | floor(v / 10^c) - t * (v mod 10^c)
//! ```
//!
//! Applying that step repeatedly cancels `c` trailing digits at a time until
//! the value is small enough to reduce directly. Moduli 2 and 5 are handled by
//! their unit-digit tests.
//!
//! ```
//! use recdiv_core::{is_divisible, parse_decimal, Modulus};
//!
//! let n = parse_decimal("1001").unwrap();
//! let verdict = is_divisible(&n, Modulus::new(7).unwrap(), 1).unwrap();
//! assert!(verdict.divisible);
//! assert_eq!(verdict.trace.unwrap().steps().len(), 2);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod digits;
mod error;
pub mod multiplier;
pub mod oracle;
pub mod reducer;
pub mod rng;

/// Largest supported chunk size; `10^18` still fits in a `u64`.
pub const MAX_CHUNK: u32 = 18;

pub use digits::{compare, parse_decimal, sub_signed, DigitString, Sign, SignedValue};
pub use error::{Error, Result};
pub use multiplier::{
    brute_force_t, classify, closed_form_t, inverse_t, primes_up_to, ClosedFormCase, Modulus,
    ModulusClass, Multiplier, ScanOutcome,
};
pub use oracle::{exhaustive_verdict_scan, mod_direct, Counterexample};
pub use reducer::{
    is_divisible, note1_check, note1_survey, reduce_chain, reduce_verdict, step, ChainSummary,
    Note1Check, Note1Outcome, Note1Summary, ReductionTrace, StepRecord, Verdict,
};
pub use rng::Lcg;
