//! `qsym`: batch interface to the quantum-plane symmetry library.
//!
//! - Subcommands: `list`, `verify`, `invariants`, `conjugate`, `orbit`,
//!   `export-table`.
//! - Inputs are TOML documents with exact scalar strings; outputs are plain
//!   text or, with `--json`, a JSON object.
//! - Exit codes: `0` success, `1` verification failure or negative decision,
//!   `2` input validation error, `3` internal error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qsym_cli::commands::{
    cmd_conjugate, cmd_export_table, cmd_invariants, cmd_list, cmd_orbit, cmd_verify, CmdOutcome,
};
use qsym_cli::document::{OrbitDocument, SymmetryDocument};
use qsym_cli::CliError;

#[derive(Parser)]
#[command(name = "qsym", version, about = "Exact symmetry calculus on the quantum plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the symmetry families and their invariants.
    List {
        /// Keep only integral series with this discriminant invariant.
        #[arg(long)]
        d: Option<i64>,
        /// Keep only integral series with this gcd invariant.
        #[arg(long)]
        g: Option<i64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a symmetry document against the module-algebra axioms.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Report the isomorphism invariants of a series document.
    Invariants {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Conjugate a symmetry by the automorphism named in its document.
    Conjugate {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide whether two weight-constant pairs lie on one matrix orbit.
    Orbit {
        #[command(flatten)]
        input: InputArg,
        /// Scan bound for the undecided region; 0 forces an undecided answer.
        #[arg(long)]
        bound: Option<i64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Export the integral-series table as JSON.
    ExportTable {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(clap::Args)]
struct InputArg {
    /// Input document (TOML).
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
}

#[derive(clap::Args)]
struct OutputArgs {
    /// Write the report to a file instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Emit the machine-readable JSON form of the report.
    #[arg(long)]
    json: bool,
}

fn read_symmetry(input: &InputArg) -> Result<SymmetryDocument, CliError> {
    let text = std::fs::read_to_string(&input.input).map_err(|e| {
        CliError::Validation(format!("cannot read {}: {e}", input.input.display()))
    })?;
    SymmetryDocument::from_toml(&text)
}

fn read_orbit(input: &InputArg) -> Result<OrbitDocument, CliError> {
    let text = std::fs::read_to_string(&input.input).map_err(|e| {
        CliError::Validation(format!("cannot read {}: {e}", input.input.display()))
    })?;
    OrbitDocument::from_toml(&text)
}

fn emit(outcome: &CmdOutcome, out: &OutputArgs) -> Result<(), CliError> {
    let body = if out.json {
        let mut s = serde_json::to_string_pretty(&outcome.json)
            .map_err(|e| CliError::Internal(format!("report serialization failed: {e}")))?;
        s.push('\n');
        s
    } else {
        outcome.text.clone()
    };
    match &out.output {
        Some(path) => std::fs::write(path, body).map_err(|e| {
            CliError::Internal(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(CmdOutcome, OutputArgs), CliError> {
    match cli.command {
        Command::List { d, g, out } => Ok((cmd_list(d, g)?, out)),
        Command::Verify { input, out } => Ok((cmd_verify(&read_symmetry(&input)?)?, out)),
        Command::Invariants { input, out } => {
            Ok((cmd_invariants(&read_symmetry(&input)?)?, out))
        }
        Command::Conjugate { input, out } => {
            Ok((cmd_conjugate(&read_symmetry(&input)?)?, out))
        }
        Command::Orbit { input, bound, out } => {
            Ok((cmd_orbit(&read_orbit(&input)?, bound)?, out))
        }
        Command::ExportTable { out } => Ok((cmd_export_table()?, out)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, out)) => match emit(&outcome, &out) {
            Ok(()) => ExitCode::from(outcome.exit_code as u8),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
