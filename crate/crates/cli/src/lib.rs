//! Library side of the `fractus` command line tool: problem files and the
//! commands that run on them. The binary only parses arguments and maps
//! [`CliError`] to an exit code.

pub mod commands;
pub mod problem_file;

use thiserror::Error;

pub use commands::{cmd_check, cmd_dump, cmd_fundamental, cmd_green, cmd_solve, SolveArgs};
pub use problem_file::{MethodName, ProblemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_SOLUTION: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_NO_CONVERGENCE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed problem file: {0}")]
    Parse(serde_json::Error),

    #[error("invalid problem: {0}")]
    Invalid(String),

    #[error("no solution exists: b_k must vanish for k = {}", join(.0))]
    NoSolution(Vec<usize>),

    #[error(transparent)]
    Core(#[from] fractus_core::Error),
}

fn join(ks: &[usize]) -> String {
    ks.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use fractus_core::Error as E;
        match self {
            Self::NoSolution(_) | Self::Core(E::UnsolvableInitialData(_)) => EXIT_NO_SOLUTION,
            Self::Core(E::NoConvergence { .. }) => EXIT_NO_CONVERGENCE,
            _ => EXIT_INVALID,
        }
    }
}

/// Reads and parses a problem file.
pub fn load(path: &std::path::Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ProblemFile::parse(&text)
}
