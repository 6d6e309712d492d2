//! Command line front end: load a plumbing graph (or Seifert data), run the
//! exact computations, and emit human-readable or machine-readable reports.
//!
//! Exit codes: 0 success, 1 generic failure (bad input, failed checks),
//! 2 graph not rational, 3 enumeration cap exceeded, 4 cycle not in the
//! dual lattice.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use plumbing_core::{BigRational, ClassGroup, Error as CoreError, Lattice};

mod reports;

use reports::*;

#[derive(Parser)]
#[command(
    name = "plumbing",
    version,
    about = "Exact lattice and Seiberg-Witten invariants of plumbed singularity links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

/// Options shared by every subcommand.
#[derive(Args)]
struct RunConfig {
    /// Input file: a graph description, or Seifert data for `seifert`.
    #[arg(long)]
    input: PathBuf,
    /// Bound on full class-group enumerations.
    #[arg(long, default_value_t = plumbing_core::DEFAULT_ENUMERATION_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Seed for deterministic sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph file and report its basic lattice data.
    Check {
        #[command(flatten)]
        config: RunConfig,
    },
    /// Determinant, canonical cycle, fundamental cycle, rationality.
    Invariants {
        #[command(flatten)]
        config: RunConfig,
    },
    /// The discriminant group: invariant factors and all classes.
    Classes {
        #[command(flatten)]
        config: RunConfig,
    },
    /// Unit-cube and anti-nef liftings with computation-sequence traces.
    Liftings {
        #[command(flatten)]
        config: RunConfig,
    },
    /// Seiberg-Witten invariants per spin^c structure (rational graphs).
    Sw {
        #[command(flatten)]
        config: RunConfig,
    },
    /// Eigengenus table of the universal abelian cover (rational graphs).
    Cover {
        #[command(flatten)]
        config: RunConfig,
    },
    /// Equality suite and the closed sum formula.
    Conjecture {
        #[command(flatten)]
        config: RunConfig,
        /// Casson-Walker invariant as `p/q`; required for non-rational
        /// graphs, derived from the sw sum otherwise.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Build a star-shaped graph file from Seifert data.
    Seifert {
        #[command(flatten)]
        config: RunConfig,
        /// Write the graph file here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum CliError {
    Core(CoreError),
    Io(PathBuf, std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

fn exit_code_for(err: &CliError) -> u8 {
    match err {
        CliError::Core(CoreError::NotRational) => 2,
        CliError::Core(CoreError::EnumerationCapExceeded { .. }) => 3,
        CliError::Core(CoreError::NotInLprime { .. }) => 4,
        _ => 1,
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
}

fn load_lattice(config: &RunConfig) -> Result<Lattice, CliError> {
    Ok(Lattice::from_json(&read_input(&config.input)?)?)
}

fn parse_lambda(text: &str) -> Result<BigRational, CliError> {
    Ok(plumbing_core::numeric::parse_ratio(text)?)
}

/// Optional top-level `"lambda": "p/q"` field of a graph file.
fn fixture_lambda(text: &str) -> Result<Option<BigRational>, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Core(CoreError::Malformed(e.to_string())))?;
    match value.get("lambda") {
        Some(serde_json::Value::String(s)) => Ok(Some(parse_lambda(s)?)),
        Some(other) => Err(CliError::Core(CoreError::InvalidRational(
            other.to_string(),
        ))),
        None => Ok(None),
    }
}

fn emit<R: serde::Serialize>(config: &RunConfig, report: &R, human: impl FnOnce(&R) -> String) {
    match config.format {
        Format::Structured => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serialization")
            );
        }
        Format::Human => print!("{}", human(report)),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { config } => {
            let lat = load_lattice(&config)?;
            let report = CheckReport::build(&lat);
            emit(&config, &report, CheckReport::human);
            Ok(0)
        }
        Command::Invariants { config } => {
            let lat = load_lattice(&config)?;
            lat.require_negative_definite()?;
            let report = InvariantsReport::build(&lat)?;
            emit(&config, &report, InvariantsReport::human);
            Ok(0)
        }
        Command::Classes { config } => {
            let lat = load_lattice(&config)?;
            let group = ClassGroup::new(&lat)?;
            let report = ClassesReport::build(&lat, &group, config.cap)?;
            emit(&config, &report, ClassesReport::human);
            Ok(0)
        }
        Command::Liftings { config } => {
            let lat = load_lattice(&config)?;
            let group = ClassGroup::new(&lat)?;
            let report = LiftingsReport::build(&lat, &group, config.cap)?;
            emit(&config, &report, LiftingsReport::human);
            Ok(0)
        }
        Command::Sw { config } => {
            let lat = load_lattice(&config)?;
            let group = ClassGroup::new(&lat)?;
            let report = SwReport::build(&lat, &group, config.cap)?;
            emit(&config, &report, SwReport::human);
            Ok(0)
        }
        Command::Cover { config } => {
            let lat = load_lattice(&config)?;
            let group = ClassGroup::new(&lat)?;
            let report = CoverReport::build(&lat, &group, config.cap)?;
            emit(&config, &report, CoverReport::human);
            Ok(0)
        }
        Command::Conjecture { config, lambda } => {
            let text = read_input(&config.input)?;
            let lat = Lattice::from_json(&text)?;
            let group = ClassGroup::new(&lat)?;
            // --lambda wins; otherwise an optional top-level `lambda` field
            // of the graph file supplies the value.
            let lambda = match lambda.as_deref() {
                Some(flag) => Some(parse_lambda(flag)?),
                None => fixture_lambda(&text)?,
            };
            let report = ConjectureReport::build(&lat, &group, lambda, config.cap, config.seed)?;
            let ok = report.all_passed();
            emit(&config, &report, ConjectureReport::human);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Seifert { config, output } => {
            let data = plumbing_core::seifert::SeifertData::from_json(&read_input(&config.input)?)?;
            let star = plumbing_core::seifert::star_graph(&data)?;
            let graph_json = star.graph.to_json();
            let report = SeifertReport::build(&star);
            if let Some(path) = &output {
                fs::write(path, &graph_json).map_err(|e| CliError::Io(path.clone(), e))?;
                emit(&config, &report, SeifertReport::human);
            } else if config.format == Format::Structured {
                emit(&config, &report, SeifertReport::human);
            } else {
                print!("{}", SeifertReport::human(&report));
                println!("{graph_json}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
