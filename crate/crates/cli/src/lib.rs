//! Library half of the `ward` command-line tool.
//!
//! Every subcommand is a function writing to an `io::Write` and returning an
//! exit status, so the commands can be driven from tests without spawning
//! a process.

pub mod bfile;
pub mod commands;

pub use bfile::{BFile, BFileError};
pub use commands::{CliError, ExitStatus, Format};
