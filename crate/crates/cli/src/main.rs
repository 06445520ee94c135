use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quasihopf_core::error::QhaError;
use quasihopf_core::format::{load, parse_instance, to_text, Bundle};
use quasihopf_core::instances::catalog;
use quasihopf_core::suite::{derive, run_suite, Derive, Suite};

#[derive(Parser)]
#[command(name = "quasihopf", version, about = "Exact verifier for finite-dimensional quasi-Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 0 if every check passes, 1 otherwise.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Rescale alpha and beta to counit 1 before checking.
        #[arg(long)]
        normalize_alpha_beta: bool,
    },
    /// Print a derived quantity: f, gamma-delta, pq, u, U, h0, h0-dual, integrals.
    Derive {
        file: PathBuf,
        #[arg(long)]
        what: String,
    },
    /// Re-emit a file in canonical form.
    Emit { file: PathBuf },
    /// Write the built-in instance catalog into a directory.
    Catalog { dir: PathBuf },
}

enum Failure {
    Input(String),
    Checks(String),
}

impl From<QhaError> for Failure {
    fn from(e: QhaError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn open(path: &Path, normalize: bool) -> Result<Bundle, Failure> {
    let b = load(&read(path)?)?;
    Ok(if normalize { b.with_normalized_alpha_beta()? } else { b })
}

fn execute(cmd: Command) -> Result<bool, Failure> {
    match cmd {
        Command::Verify { file, suite, format, normalize_alpha_beta } => {
            let suite: Suite = suite.parse()?;
            let bundle = open(&file, normalize_alpha_beta)?;
            let doc = run_suite(&bundle, suite)?;
            match format {
                Format::Text => print!("{doc}"),
                Format::Json => println!("{}", doc.to_json()),
            }
            Ok(doc.all_passed())
        }
        Command::Derive { file, what } => {
            let what: Derive = what.parse()?;
            let bundle = open(&file, false)?;
            match derive(&bundle, what) {
                Ok(s) => {
                    print!("{s}");
                    Ok(true)
                }
                Err(QhaError::Structure(msg)) => Err(Failure::Checks(msg)),
                Err(e) => Err(e.into()),
            }
        }
        Command::Emit { file } => {
            print!("{}", to_text(&parse_instance(&read(&file)?)?));
            Ok(true)
        }
        Command::Catalog { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| Failure::Input(e.to_string()))?;
            for (name, f) in catalog() {
                let path = dir.join(name);
                std::fs::write(&path, to_text(&f)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                println!("{}", path.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Checks(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
