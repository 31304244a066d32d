//! Command-line driver for `digitseal-core`: input parsing, text/JSON/CSV/DOT
//! output, parallel family sweeps and the `digitseal` binary's subcommands.

use std::io;

pub mod cli;
pub mod input;
pub mod progress;
pub mod render;
pub mod sweep;

/// Exit status for malformed invocations and unusable input.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for failures that are not the caller's fault.
pub const EXIT_FAILURE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}: {1}")]
    Io(String, #[source] io::Error),
    #[error(transparent)]
    Core(#[from] digitseal_core::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// `EXIT_USAGE` for input the caller can fix, `EXIT_FAILURE` otherwise.
    pub fn exit_code(&self) -> i32 {
        use digitseal_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(
                E::NotMonic
                | E::ConstantDivisor
                | E::ZeroConstantTerm
                | E::ZeroPolynomial
                | E::Parse(_)
                | E::InvalidDigitSet(_)
                | E::Precondition(_)
                | E::UnsupportedDegree { .. },
            ) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}
