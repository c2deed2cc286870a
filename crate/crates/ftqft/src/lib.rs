//! File formats, report envelopes and the command-line front end for
//! `ftqft-core`.

pub mod cli;
mod commands;
pub mod error;
pub mod input;
pub mod report;
