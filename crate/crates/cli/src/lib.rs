//! Command-line front end for `maxmin-core`: file formats, timing, the
//! benchmark report, and the randomized verification suite.

pub mod args;
pub mod bench;
pub mod commands;
pub mod error;
pub mod format;
pub mod verify;

pub use error::{CliError, CliResult};
