use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cydouble_cli::{
    cmd_check_novelty, cmd_compute, cmd_cover_model, cmd_list, cmd_table1, CliError, Format,
};

/// Invariants of Calabi-Yau double covers of Fano-Enriques threefolds.
#[derive(Parser)]
#[command(name = "cydouble", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a weighted complete intersection `w0,...,wn/d1,...,dc`.
    Compute {
        spec: String,
        /// Assume Picard number one and add the double-cover invariants.
        #[arg(long)]
        cover: bool,
    },
    /// Invariants of the four Calabi-Yau double covers.
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare the computed tuples with a TSV database of known examples.
    CheckNovelty {
        #[arg(long)]
        db: PathBuf,
    },
    /// Model of the etale double cover for a builtin family.
    CoverModel { name: String },
    /// List the builtin Fano families.
    List,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Compute { spec, cover } => cmd_compute(&spec, cover),
        Command::Table1 { format } => cmd_table1(format),
        Command::CheckNovelty { db } => cmd_check_novelty(&db),
        Command::CoverModel { name } => cmd_cover_model(&name),
        Command::List => cmd_list(),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
