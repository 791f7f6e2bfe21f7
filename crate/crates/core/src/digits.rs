//! Canonical decimal digit strings.
//!
//! A [`DigitString`] is a non-negative integer of unbounded size stored as
//! base-10 digits, least significant first. Zero is the single digit `0`, and
//! no other value carries a leading (most significant) zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::MAX_CHUNK;

/// Arbitrary-precision natural number in decimal, least significant digit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u8>,
}

/// Sign of a [`SignedValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// A signed integer as sign plus [`DigitString`] magnitude. Zero is always positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedValue {
    sign: Sign,
    magnitude: DigitString,
}

const POW10: [u64; 20] = {
    let mut table = [1u64; 20];
    let mut i = 1;
    while i < 20 {
        table[i] = table[i - 1] * 10;
        i += 1;
    }
    table
};

/// `10^exp` for `exp <= 19`.
pub(crate) const fn pow10(exp: u32) -> u64 {
    POW10[exp as usize]
}

impl DigitString {
    pub fn zero() -> Self {
        DigitString { digits: vec![0] }
    }

    /// Builds a value from least-significant-first digits, trimming leading zeros.
    ///
    /// Returns the index of the first element above 9, or `None` for an empty slice.
    pub fn from_digits_lsb(mut digits: Vec<u8>) -> core::result::Result<Self, Option<usize>> {
        if digits.is_empty() {
            return Err(None);
        }
        if let Some(ix) = digits.iter().position(|&d| d > 9) {
            return Err(Some(ix));
        }
        trim(&mut digits);
        Ok(DigitString { digits })
    }

    pub fn from_u64(n: u64) -> Self {
        Self::from_u128(n as u128)
    }

    pub fn from_u128(mut n: u128) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut digits = Vec::with_capacity(39);
        while n > 0 {
            digits.push((n % 10) as u8);
            n /= 10;
        }
        DigitString { digits }
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.len() == 1 && self.digits[0] == 0
    }

    pub fn unit_digit(&self) -> u8 {
        self.digits[0]
    }

    /// Number of decimal digits; `0` counts as one digit.
    pub fn digit_count(&self) -> usize {
        self.digits.len()
    }

    /// The value as `u128`, or `None` when it does not fit.
    pub fn to_u128(&self) -> Option<u128> {
        self.digits
            .iter()
            .rev()
            .try_fold(0u128, |acc, &d| acc.checked_mul(10)?.checked_add(d as u128))
    }

    pub fn to_text(&self) -> String {
        self.digits
            .iter()
            .rev()
            .map(|&d| (b'0' + d) as char)
            .collect()
    }

    /// Splits off the last `chunk` digits: `self = quotient * 10^chunk + tail`.
    pub fn split_tail(&self, chunk: u32) -> Result<(DigitString, u64)> {
        check_chunk(chunk)?;
        let c = chunk as usize;
        let tail = low_digits_value(&self.digits[..c.min(self.digits.len())]);
        let quotient = if self.digits.len() > c {
            DigitString {
                digits: self.digits[c..].to_vec(),
            }
        } else {
            DigitString::zero()
        };
        Ok((quotient, tail))
    }

    /// `self * c`.
    pub fn mul_small(&self, c: u64) -> DigitString {
        if c == 0 || self.is_zero() {
            return DigitString::zero();
        }
        let c = c as u128;
        let mut out = Vec::with_capacity(self.digits.len() + 20);
        let mut carry: u128 = 0;
        for &d in &self.digits {
            let cur = d as u128 * c + carry;
            out.push((cur % 10) as u8);
            carry = cur / 10;
        }
        while carry > 0 {
            out.push((carry % 10) as u8);
            carry /= 10;
        }
        DigitString { digits: out }
    }

    /// `self * 10^places`.
    pub fn shifted_left(&self, places: usize) -> DigitString {
        if self.is_zero() {
            return DigitString::zero();
        }
        let mut digits = vec![0; places];
        digits.extend_from_slice(&self.digits);
        DigitString { digits }
    }

    pub fn add(&self, other: &DigitString) -> DigitString {
        let (long, short) = if self.digits.len() >= other.digits.len() {
            (&self.digits, &other.digits)
        } else {
            (&other.digits, &self.digits)
        };
        let mut out = Vec::with_capacity(long.len() + 1);
        let mut carry = 0u8;
        for (i, &d) in long.iter().enumerate() {
            let s = d + short.get(i).copied().unwrap_or(0) + carry;
            out.push(s % 10);
            carry = s / 10;
        }
        if carry > 0 {
            out.push(carry);
        }
        DigitString { digits: out }
    }

    /// Removes the last `chunk` digits in place and returns them as a number.
    pub(crate) fn take_tail(&mut self, chunk: u32) -> u64 {
        let c = (chunk as usize).min(self.digits.len());
        let tail = low_digits_value(&self.digits[..c]);
        self.digits.drain(..c);
        if self.digits.is_empty() {
            self.digits.push(0);
        }
        tail
    }

    /// Replaces `self` with `|self - p|`; returns `true` when `self < p`.
    pub(crate) fn abs_diff_in_place(&mut self, p: u128) -> bool {
        if let Some(small) = self.to_u128() {
            let (diff, negative) = if small >= p {
                (small - p, false)
            } else {
                (p - small, true)
            };
            *self = DigitString::from_u128(diff);
            return negative;
        }
        // self has at least 40 digits, so it exceeds any u128
        let mut borrow = p;
        for d in self.digits.iter_mut() {
            if borrow == 0 {
                break;
            }
            let sub = (borrow % 10) as u8;
            borrow /= 10;
            if *d >= sub {
                *d -= sub;
            } else {
                *d = *d + 10 - sub;
                borrow += 1;
            }
        }
        trim(&mut self.digits);
        false
    }
}

fn check_chunk(chunk: u32) -> Result<()> {
    match chunk {
        0 => Err(Error::ChunkZero),
        c if c > MAX_CHUNK => Err(Error::ChunkOutOfRange { chunk: c }),
        _ => Ok(()),
    }
}

fn low_digits_value(low: &[u8]) -> u64 {
    low.iter().rev().fold(0u64, |acc, &d| acc * 10 + d as u64)
}

fn trim(digits: &mut Vec<u8>) {
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
}

/// Parses a natural number in decimal. Surrounding whitespace and leading
/// zeros are accepted; signs are not.
pub fn parse_decimal(text: &str) -> Result<DigitString> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut digits = Vec::with_capacity(trimmed.len());
    for (index, ch) in trimmed.char_indices() {
        match ch.to_digit(10) {
            Some(d) if ch.is_ascii_digit() => digits.push(d as u8),
            _ => return Err(Error::NonDigitCharacter { index, found: ch }),
        }
    }
    digits.reverse();
    trim(&mut digits);
    Ok(DigitString { digits })
}

/// Exact signed difference `a - b`.
pub fn sub_signed(a: &DigitString, b: &DigitString) -> SignedValue {
    match compare(a, b) {
        Ordering::Equal => SignedValue::zero(),
        Ordering::Greater => SignedValue::new(Sign::Positive, sub_magnitudes(a, b)),
        Ordering::Less => SignedValue::new(Sign::Negative, sub_magnitudes(b, a)),
    }
}

// Requires big >= small.
fn sub_magnitudes(big: &DigitString, small: &DigitString) -> DigitString {
    let mut out = Vec::with_capacity(big.digits.len());
    let mut borrow = 0u8;
    for (i, &d) in big.digits.iter().enumerate() {
        let s = small.digits.get(i).copied().unwrap_or(0) + borrow;
        if d >= s {
            out.push(d - s);
            borrow = 0;
        } else {
            out.push(d + 10 - s);
            borrow = 1;
        }
    }
    debug_assert_eq!(borrow, 0);
    trim(&mut out);
    DigitString { digits: out }
}

pub fn compare(a: &DigitString, b: &DigitString) -> Ordering {
    a.digits
        .len()
        .cmp(&b.digits.len())
        .then_with(|| a.digits.iter().rev().cmp(b.digits.iter().rev()))
}

impl Ord for DigitString {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl PartialOrd for DigitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for DigitString {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<u64> for DigitString {
    fn from(n: u64) -> Self {
        Self::from_u64(n)
    }
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_decimal(s)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.to_text())
    }
}

impl fmt::Debug for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitString({self})")
    }
}

impl SignedValue {
    /// Canonicalizes zero to positive.
    pub fn new(sign: Sign, magnitude: DigitString) -> Self {
        let sign = if magnitude.is_zero() {
            Sign::Positive
        } else {
            sign
        };
        SignedValue { sign, magnitude }
    }

    pub fn zero() -> Self {
        SignedValue::positive(DigitString::zero())
    }

    pub fn positive(magnitude: DigitString) -> Self {
        SignedValue {
            sign: Sign::Positive,
            magnitude,
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Negative
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn magnitude(&self) -> &DigitString {
        &self.magnitude
    }

    pub fn into_magnitude(self) -> DigitString {
        self.magnitude
    }
}

impl FromStr for SignedValue {
    type Err = Error;

    /// Accepts an optional leading `-`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix('-') {
            Some(rest) => Ok(SignedValue::new(Sign::Negative, parse_decimal(rest)?)),
            None => Ok(SignedValue::positive(parse_decimal(s)?)),
        }
    }
}

impl fmt::Display for SignedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{}", self.magnitude)
        } else {
            write!(f, "{}", self.magnitude)
        }
    }
}

impl fmt::Debug for SignedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedValue({self})")
    }
}
