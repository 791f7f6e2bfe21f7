//! Deterministic pseudo-random source for surveys and benchmarks.
//!
//! A 64-bit linear congruential generator with Knuth's MMIX constants:
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//! ```
//!
//! Each draw advances the state once and uses the high 32 bits, `state >> 32`.
//! A random `len`-digit number is generated most significant digit first: the
//! leading digit is `1 + draw % 9`, every other digit is `draw % 10`.

use alloc::vec::Vec;

use crate::digits::DigitString;

const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
const INCREMENT: u64 = 1_442_695_040_888_963_407;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    /// Advances the state and returns its high 32 bits.
    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// A number with exactly `len` decimal digits (`len >= 1`).
    pub fn digits(&mut self, len: usize) -> DigitString {
        assert!(len >= 1, "digit length must be at least 1");
        let mut msb_first = Vec::with_capacity(len);
        msb_first.push(1 + (self.next_u32() % 9) as u8);
        for _ in 1..len {
            msb_first.push((self.next_u32() % 10) as u8);
        }
        msb_first.reverse();
        DigitString::from_digits_lsb(msb_first).expect("digits in range")
    }
}
