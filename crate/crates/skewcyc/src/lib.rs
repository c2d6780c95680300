//! File formats and the command-line front end for `skewcyc-core`.

pub mod cli;
pub mod json;
pub mod parse;
