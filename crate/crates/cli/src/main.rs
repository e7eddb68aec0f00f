use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monomial_residues_cli::commands::{self, CliError};
use monomial_residues_cli::render::PictureFormat;

/// Residue-current annihilators of monomial ideals.
#[derive(Debug, Parser)]
#[command(name = "mres", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Ideal in monomial syntax, e.g. "z1^8, z1^6 z2, z2^6"
    ideal: Option<String>,
    /// Read the ideal from a file (monomial syntax or a JSON
    /// exponent list {"dimension":n,"exponents":[[...],...]})
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Facets of the Newton polyhedron
    Facets(Input),
    /// Essential point sets (requires an Artinian ideal)
    Essential(Input),
    /// Residue-current annihilator (requires an Artinian ideal)
    Annihilator {
        #[command(flatten)]
        input: Input,
        /// Cross-check membership against the symbolic pairing oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Integral closure of a power of the ideal
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// The inclusion chain closure(I^mu) <= annihilator <= I
    Chain(Input),
    /// Partial annihilator for a general monomial ideal
    Partial {
        #[command(flatten)]
        input: Input,
        /// Drop redundant generators before classifying terms
        #[arg(long)]
        strip_redundant: bool,
    },
    /// Staircase diagram overlay (two variables only)
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Write the picture to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(input: &Input) -> Result<monomial_residues_cli::parse::IdealSource, CliError> {
    commands::load_source(input.ideal.as_deref(), input.file.as_deref())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (output, out_path) = match &cli.command {
        Command::Facets(input) => (commands::facets_command(&load(input)?)?.to_json(), None),
        Command::Essential(input) => (commands::essential_command(&load(input)?)?.to_json(), None),
        Command::Annihilator { input, oracle } => (
            commands::annihilator_command(&load(input)?, *oracle)?.to_json(),
            None,
        ),
        Command::Closure { input, power } => (
            commands::closure_command(&load(input)?, *power)?.to_json(),
            None,
        ),
        Command::Chain(input) => (commands::chain_command(&load(input)?)?.to_json(), None),
        Command::Partial {
            input,
            strip_redundant,
        } => (
            commands::partial_command(&load(input)?, *strip_redundant)?.to_json(),
            None,
        ),
        Command::Render { input, format, out } => {
            let picture_format = match format {
                Format::Ascii => PictureFormat::Ascii,
                Format::Svg => PictureFormat::Svg,
            };
            (
                commands::render_command(&load(input)?, picture_format)?,
                out.as_deref(),
            )
        }
    };
    match out_path {
        Some(path) => std::fs::write(path, output)?,
        None => print!("{output}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
