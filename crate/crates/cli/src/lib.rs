//! Command-line surface over the `stieltjes` crate: single evaluations,
//! tables and the cross-method validation report.

pub mod args;
pub mod compute;
pub mod error;
pub mod format;
pub mod table;
pub mod validate;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use error::CliError;

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VALIDATION_FAILED: i32 = 1;
    pub const NOT_CONVERGED: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const CANT_CREATE: i32 = 73;
}

/// Parses `argv`, runs the subcommand and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        args::Command::Compute(a) => compute::run(&a, out),
        args::Command::Table(a) => table::run(&a, out),
        args::Command::Validate(a) => validate::run(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
