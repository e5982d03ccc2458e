use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liedual_cli::commands::{self, Failure, Outcome, DEFAULT_MAX_DIM};
use liedual_cli::doc::{AlgebraDocument, MapDocument};

/// Exact duality between compact symmetric triads and non-compact symmetric pairs.
///
/// Exit codes: 0 pass, 1 property failure, 2 malformed input, 3 unsupported.
#[derive(Parser)]
#[command(name = "liedual", version)]
struct Cli {
    /// Accepted for scripts; every computation is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fixtures, family specs and named witnesses.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run every type invariant of a document.
    Validate {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Apply a duality or a related construction.
    Dualize {
        #[arg(default_value = "-")]
        file: String,
        /// phi, psi, pair-dual, associated, triad-dual or normalize; defaults to phi for triads and psi for pairs.
        #[arg(long)]
        direction: Option<String>,
    },
    /// Minimal ideals, invariant-ideal lattice and irreducible components.
    Decompose {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Type of an irreducible triad or pair, with evidence.
    Classify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Restricted roots, multiplicities and the Gamma lattice.
    Roots {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Pairs of type K_eps from a Gamma vector.
    Keps {
        #[command(subcommand)]
        action: KepsAction,
    },
    /// Check an explicit map between two documents.
    VerifyWitness {
        src: String,
        dst: String,
        #[arg(long)]
        map: String,
    },
    /// Invariant profile and isotropy-module analysis.
    Report {
        #[arg(default_value = "-")]
        file: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Fixture names, specs and expected properties.
    List,
    /// A fixture by name, or a family spec such as "so(4) ad_i(2,2) ad_j(1,1)".
    Emit { spec: String },
    /// One part (src, dst or map) of a named witness.
    Witness {
        name: String,
        #[arg(long, default_value = "map")]
        part: String,
    },
}

#[derive(Subcommand)]
enum KepsAction {
    /// Build the triad and dual pair for a Gamma vector given in a1 coordinates.
    Build {
        #[arg(default_value = "-")]
        file: String,
        /// Comma-separated rationals, e.g. "1,-1/2".
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Check that the triad's involutions are related by the parity twist of a Gamma vector.
    Check {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
}

fn read_text(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    let res = if path == "-" { std::io::stdin().read_to_string(&mut s).map(|_| ()) } else { std::fs::read_to_string(path).map(|t| s = t) };
    res.map_err(|e| Failure::Malformed(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("LIEDUAL_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v.trim().parse().map_err(|_| Failure::Malformed(format!("LIEDUAL_MAX_DIM is not a number: {v:?}"))),
    }
}

fn document(path: &str) -> Result<AlgebraDocument, Failure> {
    commands::read_document(&read_text(path)?, max_dim()?)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => commands::catalog_list(),
            CatalogAction::Emit { spec } => commands::catalog_emit(&spec),
            CatalogAction::Witness { name, part } => commands::catalog_witness(&name, &part),
        },
        Command::Validate { file } => commands::validate(&document(&file)?),
        Command::Dualize { file, direction } => commands::dualize(&document(&file)?, direction.as_deref()),
        Command::Decompose { file } => commands::decompose(&document(&file)?),
        Command::Classify { file } => commands::classify(&document(&file)?),
        Command::Roots { file } => commands::roots(&document(&file)?),
        Command::Keps { action } => match action {
            KepsAction::Build { file, gamma } => commands::keps_build(&document(&file)?, &gamma),
            KepsAction::Check { file, gamma } => commands::keps_check(&document(&file)?, &gamma),
        },
        Command::VerifyWitness { src, dst, map } => {
            let m: MapDocument = serde_json::from_str(&read_text(&map)?).map_err(|e| Failure::Malformed(format!("invalid map document: {e}")))?;
            commands::verify_witness(&document(&src)?, &document(&dst)?, &m)
        }
        Command::Report { file } => commands::report(&document(&file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli);
    let mut out = std::io::stdout().lock();
    match outcome {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            let message = match &f {
                Failure::Property { report, message } => {
                    let _ = out.write_all(report.as_bytes());
                    message.clone()
                }
                Failure::Malformed(m) | Failure::Unsupported(m) => m.clone(),
            };
            eprintln!("liedual: {message}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
