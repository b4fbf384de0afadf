//! Command-line front end for L-spline interpolation.

// `!(a > b)` is used deliberately so that NaN fails every check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod error;
pub mod io;
pub mod svg;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "lspline", version, about = "Interpolate data with exponential L-splines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a knot/value CSV and write sampled values and derivatives
    Interp(config::InterpArgs),
    /// Reproduce the sin(25t) example: clamped fit with xi = 5 on seven knots
    Demo {
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Interp(a) => config::RunConfig::try_from(a).and_then(|cfg| commands::cmd_interp(&cfg).map(|_| ())),
        Command::Demo { out } => commands::cmd_demo(&out).map(|_| ()),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
