use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use torus_hilbert_cli::bfile::BFile;
use torus_hilbert_cli::compute::{compute, parse_range, Format, Kind};
use torus_hilbert_cli::oeis::{compare, Sequence};
use torus_hilbert_cli::tables::render_table;
use torus_hilbert_cli::verify::{run, Config, Suite};
use torus_hilbert_cli::{exit, CliError};

/// Point counts of the Hilbert scheme of points on the two-dimensional torus.
#[derive(Debug, Parser)]
#[command(name = "hilbtorus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C_n, P_n, zeta factorizations, a_d(n) or sections for one n or a range
    Compute {
        kind: Kind,
        /// A single n, or an inclusive range A..B (also A-B)
        n: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Reproduce one of the four reference tables
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
    },
    /// Cross-check independent routes to the coefficients and identities
    Verify {
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Truncation order of the q-series identities
        #[arg(long, default_value_t = 500)]
        order: usize,
        /// Suites to run (repeatable or comma-separated; default: all)
        #[arg(long, value_enum, value_delimiter = ',')]
        suite: Vec<Suite>,
        /// Corrupt the closed-form C_n for this n (harness self-test)
        #[arg(long, hide = true)]
        inject_fault: Option<u64>,
    },
    /// Compare a computed sequence against an OEIS b-file
    Oeis {
        #[arg(value_enum, ignore_case = true)]
        sequence: Sequence,
        path: PathBuf,
    },
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Compute { kind, n, format } => {
            println!("{}", compute(kind, parse_range(&n)?, format)?);
            Ok(exit::SUCCESS)
        }
        Command::Table { which } => {
            print!("{}", render_table(which)?);
            Ok(exit::SUCCESS)
        }
        Command::Verify {
            max_n,
            order,
            suite,
            inject_fault,
        } => {
            let mut config = Config::new(max_n, order);
            if !suite.is_empty() {
                config.suites = suite;
            }
            config.fault = inject_fault;
            let outcomes = run(&config);
            for outcome in &outcomes {
                println!("{outcome}");
            }
            if outcomes.iter().all(|o| o.passed()) {
                println!("all checks passed (max n = {max_n}, order = {order})");
                Ok(exit::SUCCESS)
            } else {
                Ok(exit::VERIFICATION_FAILED)
            }
        }
        Command::Oeis { sequence, path } => {
            let bfile = BFile::read(&sequence.id(), &path)?;
            let report = compare(sequence, &bfile);
            print!("{report}");
            Ok(if report.agrees() {
                exit::SUCCESS
            } else {
                exit::VERIFICATION_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = execute(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit::USAGE
    });
    ExitCode::from(code as u8)
}
