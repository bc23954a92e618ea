//! Library side of the `hilbtorus` command: b-file parsing, output formats,
//! table reproduction, the cross-verification harness and OEIS comparison.

#![allow(clippy::result_large_err)]

pub mod bfile;
pub mod compute;
pub mod oeis;
pub mod output;
pub mod reference;
pub mod tables;
pub mod verify;

use std::path::PathBuf;

use thiserror::Error;

/// Errors that end a command with a usage/parse exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] bfile::ParseError),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Algebra(#[from] torus_hilbert::AlgebraError),
    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}
