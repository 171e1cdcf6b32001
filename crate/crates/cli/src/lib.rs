//! Command implementations behind the `lder-lab` binary.

pub mod commands;
pub mod document;
pub mod report;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Engine(#[from] lderlab::Error),
}
