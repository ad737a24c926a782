//! `mcg`: command-line access to the orbit complex and presentation tools.
//!
//! Exit codes: 0 success, 1 bad input, 2 resource limit, 3 verification failure.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use mcg_core::complex::ComplexError;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "mcg", version, about = "Curve complexes and mapping class group presentations")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Enumerate,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count orbits of families of curves.
    Census {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundary: u32,
        /// Number of curves in a family.
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, default_value_t = mcg_core::complex::DEFAULT_MAX_CANDIDATES)]
        max_candidates: u64,
    },
    /// Decide whether two cut diagrams describe the same orbit.
    OrbitEq {
        a: PathBuf,
        b: PathBuf,
        /// Require curve i to match curve i.
        #[arg(long)]
        ordered: bool,
    },
    /// Build the quotient complex and write it as JSON.
    Complex {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundary: u32,
        /// Use the combinatorial genus-one model instead of enumeration.
        #[arg(long)]
        g1_symbolic: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = mcg_core::complex::DEFAULT_MAX_CANDIDATES)]
        max_candidates: u64,
    },
    /// Build a maximal tree of a complex and its determinability closure.
    Tree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundary: u32,
        /// Write the complex back with tree and determinable edges filled in.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Work with presentations.
    Pres {
        #[command(subcommand)]
        action: PresAction,
    },
    /// The catalog of sporadic presentations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum PresAction {
    /// Invariant factors of the abelianization.
    Abelianize { file: PathBuf },
    /// Presentation of the kernel of a sign map to Z/2.
    Rs {
        file: PathBuf,
        /// Comma-separated `NAME=±1` pairs, one per generator.
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
    },
    /// Index of a subgroup by coset enumeration.
    Tc {
        file: PathBuf,
        /// Semicolon-separated subgroup generators; empty for the trivial subgroup.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        subgroup: String,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Check words against the abelianization.
    Consequences {
        file: PathBuf,
        /// Semicolon-separated words or `P = Q` relations.
        #[arg(long, allow_hyphen_values = true)]
        words: String,
    },
    /// Assemble a presentation from stabilizer and cell data.
    Assemble {
        file: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Verify {
        #[arg(long)]
        entry: Option<String>,
    },
    /// Write every entry as a presentation file plus `catalog.json`.
    Export {
        dir: PathBuf,
    },
}

/// Marks a failed cross-check, as opposed to bad input.
#[derive(Debug)]
pub struct VerificationFailed(pub String);

impl fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<VerificationFailed>().is_some() {
            return 3;
        }
        if let Some(ComplexError::ResourceLimit { .. }) = cause.downcast_ref::<ComplexError>() {
            return 2;
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
