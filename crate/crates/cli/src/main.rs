//! `treewalk`: tables, polynomials and cross-checked counts of closed walks
//! on infinite regular trees.
//!
//! Exit status is 0 on success, 1 when a verification or fixture comparison
//! fails, and 2 on a usage or domain error.

mod commands;
mod fixtures;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use treewalk_core::rlseq::DEFAULT_ENUM_CAP;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or inputs outside a formula's domain.
    Usage(String),
    /// A check ran and found a discrepancy; `output` still goes to stdout.
    Failed { output: String, message: String },
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Failed { .. } => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
        }
    }
}

impl From<treewalk_core::Error> for CliError {
    fn from(e: treewalk_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Catalan,
    Borel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Components,
    Catalan,
    Borel,
    Gf,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SMethod {
    Recurrence,
    Enumerated,
    Closed,
}

#[derive(Debug, Parser)]
#[command(
    name = "treewalk",
    version,
    about = "Closed walks on infinite regular trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Catalan's or Borel's triangle.
    Triangle {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 7)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Compare rows 0..=7 with the bundled table.
        #[arg(long)]
        check_fixture: bool,
        /// Read fixtures from this directory instead of the bundled copies.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
    },
    /// Count closed walks of length 2n at a vertex of the delta-regular tree.
    Walks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: u64,
        #[arg(long, value_enum, default_value_t = Method::Catalan)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Also print the intermediate rational series of the gf method.
        #[arg(long)]
        rational: bool,
    },
    /// Print W_{2n} as a polynomial in delta.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Write `d` and `^` instead of `δ` and superscripts.
        #[arg(long)]
        ascii: bool,
        /// Compare with the bundled polynomial table (n <= 6).
        #[arg(long)]
        check_fixture: bool,
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
    },
    /// Print S(n, k), the number of Dyck paths of semi-length n with k returns.
    Stable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SMethod::Recurrence)]
        method: SMethod,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run every cross-method check and print a pass/fail matrix.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_delta: u64,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: usize,
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Triangle {
            kind,
            rows,
            format,
            check_fixture,
            fixture_dir,
        } => commands::triangle(kind, rows, format, check_fixture, fixture_dir.as_deref()),
        Command::Walks {
            n,
            delta,
            method,
            format,
            rational,
        } => commands::walks(n, delta, method, format, rational),
        Command::Poly {
            n,
            format,
            ascii,
            check_fixture,
            fixture_dir,
        } => commands::poly(n, format, ascii, check_fixture, fixture_dir.as_deref()),
        Command::Stable {
            n,
            method,
            enum_cap,
            format,
        } => commands::stable(n, method, enum_cap, format),
        Command::Verify {
            max_n,
            max_delta,
            enum_cap,
            fixture_dir,
        } => verify::run(max_n, max_delta, enum_cap, fixture_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Failed { output, message } => {
                    print!("{output}");
                    eprint!("{message}");
                }
            }
            code
        }
    }
}
