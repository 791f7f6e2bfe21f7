//! Witness multipliers.
//!
//! For a modulus `m` coprime to 10 and a chunk size `c`, the witness `t` is the
//! unique residue in `[1, m)` with `10^c * t + 1 ≡ 0 (mod m)`. Replacing `v` by
//! `floor(v / 10^c) - t * (v mod 10^c)` then preserves divisibility by `m`.
//!
//! Three independent routes compute `t`: the four-case closed form (chunk 1
//! only), extended Euclid on `10^c mod m`, and an exhaustive scan.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digits::pow10;
use crate::error::{Error, Result};
use crate::MAX_CHUNK;

/// Largest modulus accepted by [`brute_force_t`].
pub const MAX_SCAN_MODULUS: u64 = 1_000_000;
/// Largest limit accepted by [`primes_up_to`].
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// A modulus in `1..2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub const MAX: u64 = (1 << 63) - 1;

    pub fn new(value: u64) -> Result<Self> {
        if value == 0 || value > Self::MAX {
            return Err(Error::ModulusOutOfRange { value });
        }
        Ok(Modulus(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Number of decimal digits of the modulus.
    pub fn digit_count(self) -> usize {
        self.0.ilog10() as usize + 1
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModulusClass {
    /// `m = 2`: test the unit digit for evenness.
    Two,
    /// `m = 5`: unit digit must be 0 or 5.
    Five,
    /// `m >= 3` with `gcd(m, 10) = 1`: recurrence test applies.
    CoprimeToTen,
    /// `m = 1`: everything is divisible.
    Trivial,
    /// Shares a factor with 10 and is neither 2 nor 5.
    Unsupported,
}

pub fn classify(m: Modulus) -> ModulusClass {
    match m.get() {
        1 => ModulusClass::Trivial,
        2 => ModulusClass::Two,
        5 => ModulusClass::Five,
        v if gcd(v, 10) == 1 => ModulusClass::CoprimeToTen,
        _ => ModulusClass::Unsupported,
    }
}

/// The closed-form case selected by the unit digit of the modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// `t = (m - 1) / 10`
    EndsIn1,
    /// `t = (7m - 1) / 10`
    EndsIn3,
    /// `t = (3m - 1) / 10`
    EndsIn7,
    /// `t = (9m - 1) / 10`
    EndsIn9,
}

impl ClosedFormCase {
    pub fn for_modulus(m: u64) -> Option<Self> {
        match m % 10 {
            1 => Some(ClosedFormCase::EndsIn1),
            3 => Some(ClosedFormCase::EndsIn3),
            7 => Some(ClosedFormCase::EndsIn7),
            9 => Some(ClosedFormCase::EndsIn9),
            _ => None,
        }
    }

    /// The cofactor `k` in `10t + 1 = k m`; also the factor applied to `m` in the formula.
    pub fn cofactor(self) -> u64 {
        match self {
            ClosedFormCase::EndsIn1 => 1,
            ClosedFormCase::EndsIn3 => 7,
            ClosedFormCase::EndsIn7 => 3,
            ClosedFormCase::EndsIn9 => 9,
        }
    }

    pub fn unit_digit(self) -> u8 {
        match self {
            ClosedFormCase::EndsIn1 => 1,
            ClosedFormCase::EndsIn3 => 3,
            ClosedFormCase::EndsIn7 => 7,
            ClosedFormCase::EndsIn9 => 9,
        }
    }
}

impl fmt::Display for ClosedFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cofactor() {
            1 => write!(f, "ud = {}: t = (m-1)/10", self.unit_digit()),
            k => write!(f, "ud = {}: t = ({k}m-1)/10", self.unit_digit()),
        }
    }
}

/// A certified witness: `10^chunk * t + 1 ≡ 0 (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiplier {
    modulus: Modulus,
    chunk: u32,
    t: u64,
    k: Option<u64>,
}

impl Multiplier {
    /// Validates `t` against the congruence certificate.
    ///
    /// Returns `None` when the modulus is not coprime to 10 (or is 1), the chunk
    /// is out of range, `t` is not reduced, or the congruence fails.
    pub fn from_parts(modulus: Modulus, chunk: u32, t: u64) -> Option<Self> {
        let m = modulus.get();
        if m < 2 || gcd(m, 10) != 1 || chunk == 0 || chunk > MAX_CHUNK || t >= m {
            return None;
        }
        if certificate_residue(m, chunk, t) != 0 {
            return None;
        }
        let k = (chunk == 1).then(|| ((10 * t as u128 + 1) / m as u128) as u64);
        Some(Multiplier {
            modulus,
            chunk,
            t,
            k,
        })
    }

    fn certified(modulus: Modulus, chunk: u32, t: u64) -> Self {
        let mult = Self::from_parts(modulus, chunk, t);
        assert!(
            mult.is_some(),
            "congruence certificate failed: 10^{chunk} * {t} + 1 mod {modulus} != 0"
        );
        mult.unwrap()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn chunk(&self) -> u32 {
        self.chunk
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Cofactor with `10t + 1 = k m`; only defined for chunk 1.
    pub fn k(&self) -> Option<u64> {
        self.k
    }

    /// Largest possible `t * tail` for this chunk, `t * (10^chunk - 1)`.
    pub fn max_product(&self) -> u128 {
        self.t as u128 * (pow10(self.chunk) - 1) as u128
    }
}

/// `(10^chunk * t + 1) mod m`.
pub fn certificate_residue(m: u64, chunk: u32, t: u64) -> u64 {
    let m = m as u128;
    let base = pow10(chunk) as u128 % m;
    ((base * (t as u128 % m) + 1) % m) as u64
}

fn require_coprime(m: Modulus) -> Result<()> {
    match classify(m) {
        ModulusClass::CoprimeToTen => Ok(()),
        ModulusClass::Trivial => Err(Error::TrivialModulus),
        _ => Err(Error::NotCoprimeToTen { modulus: m.get() }),
    }
}

fn check_chunk(chunk: u32) -> Result<()> {
    match chunk {
        0 => Err(Error::ChunkZero),
        c if c > MAX_CHUNK => Err(Error::ChunkOutOfRange { chunk: c }),
        _ => Ok(()),
    }
}

/// Chunk-1 witness from the unit digit of `p`:
/// `(p-1)/10`, `(7p-1)/10`, `(3p-1)/10`, `(9p-1)/10` for unit digits 1, 3, 7, 9.
///
/// The formula only needs `gcd(p, 10) = 1`, so composite moduli are accepted too.
pub fn closed_form_t(p: Modulus) -> Result<(Multiplier, ClosedFormCase)> {
    require_coprime(p)?;
    let case = ClosedFormCase::for_modulus(p.get()).expect("coprime to 10");
    let t = (case.cofactor() as u128 * p.get() as u128 - 1) / 10;
    let mult = Multiplier::certified(p, 1, t as u64);
    debug_assert_eq!(mult.k, Some(case.cofactor()));
    Ok((mult, case))
}

/// Witness `t = -(10^chunk)^{-1} mod m` via extended Euclid.
pub fn inverse_t(m: Modulus, chunk: u32) -> Result<Multiplier> {
    require_coprime(m)?;
    check_chunk(chunk)?;
    let base = pow10(chunk) % m.get();
    let inv = mod_inverse(base, m.get()).expect("10^chunk is invertible when gcd(m, 10) = 1");
    // inv is nonzero since m >= 2, so m - inv lies in [1, m)
    Ok(Multiplier::certified(m, chunk, m.get() - inv))
}

/// Inverse of `a` modulo `m` in `[0, m)`, or `None` if `gcd(a, m) != 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Returns `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Result of scanning every `t` in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOutcome {
    /// Smallest solution.
    pub t: u64,
    /// Number of solutions in `[0, m)`; 1 whenever `gcd(m, 10) = 1`.
    pub solution_count: u64,
}

/// Exhaustive search for `t` with `10^chunk * t + 1 ≡ 0 (mod m)`.
pub fn brute_force_t(m: Modulus, chunk: u32) -> Result<ScanOutcome> {
    require_coprime(m)?;
    check_chunk(chunk)?;
    let modulus = m.get();
    if modulus > MAX_SCAN_MODULUS {
        return Err(Error::ModulusTooLargeForScan { modulus });
    }
    let step = pow10(chunk) % modulus;
    // value = (step * t + 1) mod m, advanced incrementally
    let mut value = 1 % modulus;
    let mut first = None;
    let mut count = 0;
    for t in 0..modulus {
        if value == 0 {
            count += 1;
            first.get_or_insert(t);
        }
        value += step;
        if value >= modulus {
            value -= modulus;
        }
    }
    let t = first.expect("a solution exists when gcd(m, 10) = 1");
    Ok(ScanOutcome {
        t,
        solution_count: count,
    })
}

/// All primes `<= limit`, ascending, by an odd-only sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::LimitTooLarge { limit });
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    // index i stands for 2i + 1
    let len = (limit as usize - 1) / 2 + 1;
    let mut composite = vec![false; len];
    composite[0] = true;
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < len {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2];
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    // Independent oracle: direct scan with the congruence as written.
    fn scan_oracle(m: u64, chunk: u32) -> Vec<u64> {
        (0..m)
            .filter(|&t| (10u128.pow(chunk) * t as u128 + 1).is_multiple_of(m as u128))
            .collect()
    }

    #[test]
    fn modulus_range() {
        assert_eq!(Modulus::new(0), Err(Error::ModulusOutOfRange { value: 0 }));
        assert!(Modulus::new(1 << 63).is_err());
        assert!(Modulus::new((1 << 63) - 1).is_ok());
        assert_eq!(m(7).digit_count(), 1);
        assert_eq!(m(101).digit_count(), 3);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(m(7)), ModulusClass::CoprimeToTen);
        assert_eq!(classify(m(10)), ModulusClass::Unsupported);
        assert_eq!(classify(m(1)), ModulusClass::Trivial);
        assert_eq!(classify(m(2)), ModulusClass::Two);
        assert_eq!(classify(m(5)), ModulusClass::Five);
        assert_eq!(classify(m(3)), ModulusClass::CoprimeToTen);
        assert_eq!(classify(m(4)), ModulusClass::Unsupported);
        assert_eq!(classify(m(25)), ModulusClass::Unsupported);
    }

    #[test]
    fn closed_form_examples() {
        for (p, t, k) in [(7, 2, 3), (11, 1, 1), (19, 17, 9), (13, 9, 7), (3, 2, 7)] {
            let (mult, case) = closed_form_t(m(p)).unwrap();
            assert_eq!((mult.t(), mult.k()), (t, Some(k)), "p = {p}");
            assert_eq!(case.cofactor(), k);
            assert_eq!(10 * t + 1, k * p);
        }
        assert_eq!(
            closed_form_t(m(10)).unwrap_err(),
            Error::NotCoprimeToTen { modulus: 10 }
        );
        assert_eq!(closed_form_t(m(1)).unwrap_err(), Error::TrivialModulus);
    }

    #[test]
    fn closed_form_near_modulus_cap() {
        // 9m overflows u64 here
        let big = (0..=Modulus::MAX).rev().find(|v| gcd(*v, 10) == 1).unwrap();
        let (mult, _) = closed_form_t(m(big)).unwrap();
        assert_eq!(mult.t(), inverse_t(m(big), 1).unwrap().t());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_t(m(21), 1).unwrap().t(), 2);
        assert_eq!(inverse_t(m(49), 1).unwrap().t(), 44);
        assert_eq!(inverse_t(m(7), 2).unwrap().t(), 3);
        assert_eq!(inverse_t(m(11), 1).unwrap().t(), 1);
        assert_eq!(inverse_t(m(7), 2).unwrap().k(), None);
        assert_eq!(inverse_t(m(1), 1).unwrap_err(), Error::TrivialModulus);
        assert_eq!(
            inverse_t(m(14), 1).unwrap_err(),
            Error::NotCoprimeToTen { modulus: 14 }
        );
        assert_eq!(
            inverse_t(m(7), 19).unwrap_err(),
            Error::ChunkOutOfRange { chunk: 19 }
        );
        assert_eq!(inverse_t(m(7), 0).unwrap_err(), Error::ChunkZero);
        let big = inverse_t(m(Modulus::MAX), 18).unwrap();
        assert_eq!(certificate_residue(Modulus::MAX, 18, big.t()), 0);
    }

    #[test]
    fn brute_force_examples() {
        let expect = |v, c| brute_force_t(m(v), c).unwrap();
        assert_eq!(
            expect(7, 1),
            ScanOutcome {
                t: 2,
                solution_count: 1
            }
        );
        assert_eq!(
            expect(13, 1),
            ScanOutcome {
                t: 9,
                solution_count: 1
            }
        );
        assert_eq!(
            expect(3, 1),
            ScanOutcome {
                t: 2,
                solution_count: 1
            }
        );
        assert_eq!(
            brute_force_t(m(1_000_003), 1).unwrap_err(),
            Error::ModulusTooLargeForScan { modulus: 1_000_003 }
        );
        assert_eq!(
            brute_force_t(m(6), 1).unwrap_err(),
            Error::NotCoprimeToTen { modulus: 6 }
        );
    }

    #[test]
    fn three_routes_agree_with_scan_oracle() {
        for v in (3..2000u64).filter(|v| gcd(*v, 10) == 1) {
            for chunk in 1..=3 {
                let oracle = scan_oracle(v, chunk);
                assert_eq!(oracle.len(), 1, "m = {v}");
                let inv = inverse_t(m(v), chunk).unwrap();
                let scan = brute_force_t(m(v), chunk).unwrap();
                assert_eq!(inv.t(), oracle[0]);
                assert_eq!(
                    scan,
                    ScanOutcome {
                        t: oracle[0],
                        solution_count: 1
                    }
                );
                if chunk == 1 {
                    assert_eq!(closed_form_t(m(v)).unwrap().0.t(), oracle[0]);
                }
            }
        }
    }

    #[test]
    fn from_parts_rejects_bad_witness() {
        assert!(Multiplier::from_parts(m(7), 1, 2).is_some());
        assert!(Multiplier::from_parts(m(7), 1, 3).is_none());
        assert!(Multiplier::from_parts(m(7), 1, 9).is_none());
        assert!(Multiplier::from_parts(m(10), 1, 0).is_none());
        assert!(Multiplier::from_parts(m(1), 1, 0).is_none());
    }

    #[test]
    fn sieve_examples() {
        assert_eq!(primes_up_to(10).unwrap(), [2, 3, 5, 7]);
        assert_eq!(primes_up_to(2).unwrap(), [2]);
        assert_eq!(
            primes_up_to(30).unwrap(),
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert!(primes_up_to(1).unwrap().is_empty());
        assert_eq!(primes_up_to(9).unwrap(), [2, 3, 5, 7]);
        assert_eq!(primes_up_to(100_000).unwrap().len(), 9592);
        assert_eq!(
            primes_up_to(MAX_SIEVE_LIMIT + 1).unwrap_err(),
            Error::LimitTooLarge {
                limit: MAX_SIEVE_LIMIT + 1
            }
        );
    }

    #[test]
    fn sieve_matches_trial_division() {
        let is_prime = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        let expected: Vec<u64> = (0..5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes_up_to(4999).unwrap(), expected);
    }
}
