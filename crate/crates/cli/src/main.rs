//! `chevalley`: exact Jordan-Chevalley decomposition from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse/format or I/O
//! error, 3 mathematical precondition failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "chevalley", version, about = "Exact Jordan-Chevalley decomposition of rational matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Matrix file: `[[a, b, ...], ...]` with rational literals.
    pub input: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NewtonFlags {
    /// Use this annihilating polynomial (coefficient list, lowest degree
    /// first) instead of the characteristic polynomial.
    #[arg(long, value_name = "PATH")]
    pub annihilator: Option<PathBuf>,
    /// Also print q and every Newton iterate h_0, h_1, ...
    #[arg(long)]
    pub emit_intermediates: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute D, N and the certificate polynomial h with D = h(U).
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        newton: NewtonFlags,
    },
    /// Print the annihilator, its separable part, q, the multiplicity and the iteration bound.
    Poly {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        newton: NewtonFlags,
    },
    /// Check a decomposition document against its matrix; exits 1 on failure.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Decomposition document produced by `decompose`.
        decomposition: PathBuf,
    },
    /// Raise the matrix to a non-negative integer power.
    Power {
        #[command(flatten)]
        common: Common,
        /// Exponent.
        m: u64,
    },
    /// Compute U = D V with V unipotent.
    Multiplicative {
        #[command(flatten)]
        common: Common,
    },
    /// Print e^{tN} for a nilpotent N as a matrix of polynomials in t.
    ExpNilpotent {
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
