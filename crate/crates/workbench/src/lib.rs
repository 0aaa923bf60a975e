//! Command-line workbench over `dade-core`: input formats, reports and the `dade` verbs.

pub mod cli;
pub mod error;
pub mod input;
pub mod report;
pub mod repfile;
pub mod reproduce;

pub use cli::{run_args, Outcome};
pub use error::{Result, WorkbenchError};
