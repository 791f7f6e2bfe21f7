//! Command-line front end, file formats and harnesses for `recdiv-core`.

pub mod bench;
pub mod cli;
pub mod input;
pub mod json;
pub mod selfcheck;
