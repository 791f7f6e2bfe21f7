//! JSON form of a divisibility verdict and its reduction trace.
//!
//! ```text
//! {"modulus": M, "chunk": C, "t": T,
//!  "steps": [{"before": "...", "q": "...", "r": R, "after": "-..."}, ...],
//!  "terminal_residue": X, "divisible": bool}
//! ```
//!
//! Unbounded values (`before`, `q`, `after`) are decimal strings with an
//! optional leading `-`. For moduli 1, 2 and 5 no chain runs: `t` is `null`,
//! `steps` is empty and `terminal_residue` is `n mod m`.

use serde::{Deserialize, Serialize};

use recdiv_core::oracle::mod_signed;
use recdiv_core::{parse_decimal, sub_signed, DigitString, Modulus, SignedValue, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub modulus: u64,
    pub chunk: u32,
    pub t: Option<u64>,
    pub steps: Vec<StepJson>,
    pub terminal_residue: u64,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub before: String,
    pub q: String,
    pub r: u64,
    pub after: String,
}

impl TraceJson {
    pub fn from_verdict(n: &DigitString, m: Modulus, chunk: u32, verdict: &Verdict) -> Self {
        match &verdict.trace {
            Some(trace) => {
                let mult = trace.multiplier();
                TraceJson {
                    modulus: m.get(),
                    chunk: mult.chunk(),
                    t: Some(mult.t()),
                    steps: trace
                        .steps()
                        .iter()
                        .map(|s| StepJson {
                            before: s.value_before.to_string(),
                            q: s.quotient.to_string(),
                            r: s.tail,
                            after: s.value_after.to_string(),
                        })
                        .collect(),
                    terminal_residue: trace.terminal_residue(),
                    divisible: trace.divisible(),
                }
            }
            None => TraceJson {
                modulus: m.get(),
                chunk,
                t: None,
                steps: Vec::new(),
                // m is 1, 2 or 5, so the unit digit determines the residue
                terminal_residue: n.unit_digit() as u64 % m.get(),
                divisible: verdict.divisible,
            },
        }
    }

    /// Re-checks every step: split, difference, chain links, and
    /// `10^c * after ≡ |before| (mod m)`.
    pub fn verify(&self) -> Result<(), String> {
        let m = Modulus::new(self.modulus).map_err(|e| e.to_string())?;
        let Some(t) = self.t else {
            return if self.steps.is_empty() {
                Ok(())
            } else {
                Err("steps present without a multiplier".into())
            };
        };
        let t_digits = DigitString::from_u64(t);
        let mut previous: Option<SignedValue> = None;
        for (i, s) in self.steps.iter().enumerate() {
            let fail = |what: &str| format!("step {i}: {what}");
            let before: SignedValue = s.before.parse().map_err(|_| fail("bad before"))?;
            let after: SignedValue = s.after.parse().map_err(|_| fail("bad after"))?;
            let q = parse_decimal(&s.q).map_err(|_| fail("bad q"))?;
            if previous.as_ref().is_some_and(|p| p != &before) {
                return Err(fail("does not continue from the previous step"));
            }
            let rebuilt = q
                .shifted_left(self.chunk as usize)
                .add(&DigitString::from_u64(s.r));
            if &rebuilt != before.magnitude() {
                return Err(fail("q * 10^c + r != |before|"));
            }
            if sub_signed(&q, &t_digits.mul_small(s.r)) != after {
                return Err(fail("after != q - t*r"));
            }
            let scale = 10u128.pow(self.chunk) % m.get() as u128;
            let lhs = scale * mod_signed(&after, m) as u128 % m.get() as u128;
            let rhs = mod_signed(&SignedValue::positive(before.magnitude().clone()), m);
            if lhs as u64 != rhs {
                return Err(fail("residue transport violated"));
            }
            previous = Some(after);
        }
        if self.divisible != (self.terminal_residue == 0) {
            return Err("divisible flag disagrees with terminal residue".into());
        }
        Ok(())
    }
}
