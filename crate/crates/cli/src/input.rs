//! Number ingestion for the command line.
//!
//! `-` reads one whitespace-delimited token from standard input, `@path` reads
//! a file (all whitespace removed, so long numbers may be wrapped), and
//! anything else is the number itself. Underscores are visual separators and
//! are dropped in every form.

use std::fmt;
use std::io::{self, Read};

use recdiv_core::{parse_decimal, DigitString};

#[derive(Debug)]
pub enum InputError {
    Io { source: String, error: io::Error },
    NoNumber { source: String },
    Parse(recdiv_core::Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io { source, error } => write!(f, "cannot read {source}: {error}"),
            InputError::NoNumber { source } => write!(f, "no number found in {source}"),
            InputError::Parse(e) => write!(f, "invalid number: {e}"),
        }
    }
}

impl std::error::Error for InputError {}

pub fn read_number(arg: &str) -> Result<DigitString, InputError> {
    if arg == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|error| InputError::Io {
                source: "standard input".into(),
                error,
            })?;
        let token = text.split_whitespace().next().ok_or(InputError::NoNumber {
            source: "standard input".into(),
        })?;
        return parse_number(token);
    }
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|error| InputError::Io {
            source: path.into(),
            error,
        })?;
        let joined: String = text.split_whitespace().collect();
        if joined.is_empty() {
            return Err(InputError::NoNumber {
                source: path.into(),
            });
        }
        return parse_number(&joined);
    }
    parse_number(arg)
}

/// Parses decimal text after removing `_` separators.
pub fn parse_number(text: &str) -> Result<DigitString, InputError> {
    let cleaned: String = text.chars().filter(|&c| c != '_').collect();
    parse_decimal(&cleaned).map_err(InputError::Parse)
}
