mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::report::{exit_code, CliError};

/// Radicals, radical complements, maximal tori and Cartan subalgebras of
/// finite-dimensional algebras over ℚ and GF(p).
#[derive(Debug, Parser)]
#[command(name = "cartan", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Base field for presets without `@F` and for group inputs: `GF:p`, `GF(p)` or `Q`.
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Seed for the randomized torus search stage.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Cross-check against brute-force enumeration where the instance is small enough.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Emit one compact JSON document (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Group algebra input: `dihedral:N` or `cyclic:N` (needs `--field`).
    #[arg(long, global = true, conflicts_with = "group_file")]
    pub group: Option<String>,

    /// Group algebra input from a Cayley-table JSON file (needs `--field`).
    #[arg(long, global = true, value_name = "FILE")]
    pub group_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobson radical.
    Radical(InputArgs),
    /// Wedderburn–Malcev radical complement.
    Complement(InputArgs),
    /// Whether A/rad(A) is commutative.
    Soluble(InputArgs),
    /// Whether every nilpotent element lies in the radical.
    Reduced(InputArgs),
    /// Greedy maximal torus inside the radical complement.
    MaximalTorus(InputArgs),
    /// Cartan subalgebra as the centralizer of a maximal torus.
    Cartan(InputArgs),
    /// Test whether a given subspace is a Cartan subalgebra.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Subspace JSON file `{"basis": [[…], …]}`.
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
    },
    /// Cartan dimension of a central simple algebra.
    Index(InputArgs),
    /// Enumerates the unit group and checks its decomposition.
    Units(InputArgs),
    /// Full pipeline with the Lie-nilpotency criteria.
    Report(InputArgs),
}

#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Algebra JSON file or preset such as `matrix:2@GF(3)`, `dihedral:3@GF(3)`, `quaternion:Q`.
    pub input: Option<String>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Radical(_) => "radical",
            Command::Complement(_) => "complement",
            Command::Soluble(_) => "soluble",
            Command::Reduced(_) => "reduced",
            Command::MaximalTorus(_) => "maximal-torus",
            Command::Cartan(_) => "cartan",
            Command::Verify { .. } => "verify",
            Command::Index(_) => "index",
            Command::Units(_) => "units",
            Command::Report(_) => "report",
        }
    }

    pub fn input(&self) -> &InputArgs {
        match self {
            Command::Radical(i)
            | Command::Complement(i)
            | Command::Soluble(i)
            | Command::Reduced(i)
            | Command::MaximalTorus(i)
            | Command::Cartan(i)
            | Command::Index(i)
            | Command::Units(i)
            | Command::Report(i) => i,
            Command::Verify { input, .. } => input,
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let loaded = input::load(cli)?;
    let report = commands::execute(cli, &loaded)?;
    let ok = report.all_passed();
    let text = if cli.pretty {
        report.pretty()
    } else {
        serde_json::to_string(&report).expect("serializable report")
    };
    Ok((text, ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, format!("{text}\n")),
                None => writeln!(std::io::stdout(), "{text}"),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a verification check failed");
                ExitCode::from(5)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
