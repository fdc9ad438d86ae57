//! Argument parsing and command dispatch.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::CliError;
use crate::export::{infinite_dot, to_dot, to_json};
use crate::figures::{bless, default_golden_dir, reproduce_figures};
use crate::file::{apply_field_override, parse_algebra, parse_field_override};
use crate::report::{
    canon_report, classify_report, compute_lattice, lattice_report, onedim_report, quotient_report, LatticeOptions,
    LatticeResult,
};

#[derive(Debug, Parser)]
#[command(name = "evolat", version, about = "Exact subalgebra lattices and modularity of evolution algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regularity, nilpotency, supersolvability and the modularity verdict.
    Classify { file: PathBuf },
    /// The subalgebra lattice with modular-law, pentagon and quasi-ideal checks.
    Lattice {
        file: PathBuf,
        /// Write the Hasse diagram as Graphviz DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Print the lattice as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Reinterpret a rational algebra over F_P.
        #[arg(long, value_name = "Fp:P")]
        field_override: Option<String>,
        /// Adjoin square roots as needed instead of staying in the rationals.
        #[arg(long)]
        closure: bool,
    },
    /// One-dimensional subalgebras.
    Onedim { file: PathBuf },
    /// Quotient by the basic ideal spanned by the given basis vectors (1-based).
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
    },
    /// Canonical presentation.
    Canon { file: PathBuf },
    /// Regenerate the two reference lattices and compare them with the goldens.
    Figures {
        #[arg(long, value_name = "DIR")]
        golden_dir: Option<PathBuf>,
        /// Overwrite the goldens instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

fn load(path: &PathBuf) -> Result<evolat_core::EvolutionAlgebra, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
    parse_algebra(&text)
}

/// Runs a parsed command and returns what it prints.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify { file } => classify_report(&load(&file)?),
        Command::Lattice { file, dot, json, field_override, closure } => {
            let mut e = load(&file)?;
            if let Some(spec) = field_override {
                e = apply_field_override(&e, parse_field_override(&spec)?)?;
            }
            let result = compute_lattice(&e, LatticeOptions { closure })?;
            if let Some(path) = dot {
                let text = match &result {
                    LatticeResult::Finite { lattice, .. } => to_dot(lattice),
                    LatticeResult::Infinite { lattice, .. } => infinite_dot(lattice),
                };
                fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
            }
            match (&result, json) {
                (LatticeResult::Finite { lattice, .. }, true) => {
                    Ok(serde_json::to_string_pretty(&to_json(lattice)).expect("json serializes") + "\n")
                }
                (LatticeResult::Infinite { .. }, true) => {
                    Err(CliError::Usage("--json needs a finite lattice".into()))
                }
                _ => Ok(lattice_report(&e, &result)),
            }
        }
        Command::Onedim { file } => onedim_report(&load(&file)?),
        Command::Quotient { file, ideal } => quotient_report(&load(&file)?, &ideal),
        Command::Canon { file } => canon_report(&load(&file)?),
        Command::Figures { golden_dir, bless: write } => {
            let dir = golden_dir.unwrap_or_else(default_golden_dir);
            let lines = if write { bless(&dir)? } else { reproduce_figures(&dir)? };
            Ok(lines.join("\n") + "\n")
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code together with stdout and stderr text.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (1, String::new(), text) };
        }
    };
    match run(cli) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {}\n", e)),
    }
}
