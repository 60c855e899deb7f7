//! Batch front end: reads a JSON job file, runs the requested computations
//! and reports exact results as a table and as JSON.

pub mod job;
pub mod run;

use std::path::PathBuf;

use thiserror::Error;

pub use job::{Job, JobFile, JobKind};
pub use run::{plan, run_tasks, Plan, ResultRow, ResultTable, RunOptions, Status, Task};

pub const EXIT_OK: u8 = 0;
pub const EXIT_JOB_ERROR: u8 = 1;
pub const EXIT_VERIFY_FAILED: u8 = 2;
pub const EXIT_INVALID: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Output { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("surface: {0}")]
    Surface(#[from] tautchi::SurfaceError),
    #[error("bundle {name}: {message}")]
    Bundle { name: String, message: String },
    #[error("job {job}: {message}")]
    Validation { job: String, message: String },
    #[error("thread pool: {0}")]
    Threads(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Output { .. } | CliError::Threads(_) => EXIT_JOB_ERROR,
            _ => EXIT_INVALID,
        }
    }
}
