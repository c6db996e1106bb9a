use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use elvec_cli::doc::{self, Instance};
use elvec_cli::{CliError, Predicate};

/// Elementary vectors of s-cones, polyhedral cones, polyhedra and metabolic
/// networks, in exact arithmetic.
#[derive(Parser)]
#[command(name = "elvec", version)]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elementary vectors.
    Enumerate { file: PathBuf },
    /// Write a member as a conformal sum of elementary vectors.
    Decompose {
        file: PathBuf,
        /// Comma-separated entries, e.g. "2,1,1/2,0".
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Decide one special-vector predicate for a member.
    Check {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Elementary vectors after forcing reactions to zero (flux kinds).
    Knockout {
        file: PathBuf,
        /// Comma-separated 1-based reaction indices; may be empty.
        #[arg(long, default_value = "")]
        reactions: String,
    },
    /// Dimension of the instance.
    Dim { file: PathBuf },
    /// Run the invariant suite; exit status 1 if any check fails.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load(path: &PathBuf) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    doc::parse(&text)
}

fn run(cmd: &Command) -> Result<(serde_json::Value, bool), CliError> {
    let report = match cmd {
        Command::Enumerate { file } => elvec_cli::enumerate(&load(file)?),
        Command::Decompose { file, vector } => {
            let inst = load(file)?;
            elvec_cli::decompose(&inst, &doc::parse_vector(vector)?)?
        }
        Command::Check {
            file,
            vector,
            predicate,
        } => {
            let inst = load(file)?;
            elvec_cli::check(&inst, &doc::parse_vector(vector)?, *predicate)?
        }
        Command::Knockout { file, reactions } => {
            let inst = load(file)?;
            elvec_cli::knockout(&inst, &doc::parse_indices(reactions)?)?
        }
        Command::Dim { file } => elvec_cli::dim(&load(file)?)?,
        Command::Verify {
            file,
            samples,
            seed,
        } => return elvec_cli::verify(&load(file)?, *samples, *seed),
    };
    Ok((report, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, passed) = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = elvec_cli::render(&report);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
