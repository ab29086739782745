//! `cartan-ds`: catalog sweeps, per-form inspection, criterion verdicts,
//! strong-regularization runs and verification suites.

mod commands;
mod error;
mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cartan_ds::rootdata::DEFAULT_CAP;

use crate::error::CliError;
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(name = "cartan-ds", version, about = "Exact discrete-series criterion computations")]
struct Cli {
    /// Directory of catalog documents (default: the built-in catalog).
    #[arg(long, global = true, env = "CARTAN_DS_CATALOG")]
    catalog: Option<PathBuf>,

    /// Emit one JSON report per line instead of the human view.
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration cap for orbits and groups.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One row per catalog form: restricted type, |Sigma_a|, verdict, oracle.
    Catalog {
        /// Glob on form ids, e.g. "so*".
        filter: Option<String>,
        /// Write the selected forms as catalog documents into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Involution, restricted roots and multiplicities of one form.
    Inspect {
        /// Catalog id such as "su(2,1)", or a path to a catalog document.
        form: String,
    },
    /// Compact-Cartan verdict with its Weyl group witness.
    Criterion { form: String },
    /// Translation search for a strongly regular infinitesimal character.
    StrongReg(StrongRegArgs),
    /// Run a verification suite: exact-sequence, lemma or pipeline.
    Verify { suite: String },
    /// Recompute reports (one JSON document per line) and compare.
    Replay {
        /// Report file, or "-" for standard input.
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct StrongRegArgs {
    form: String,
    /// Lambda in simple-root coordinates, e.g. "1,1/2".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Read --lambda in fundamental-weight coordinates.
    #[arg(long)]
    fundamental: bool,
    /// Exponents in simple-restricted-root coordinates, ";"-separated
    /// (default: every restriction of [Lambda]^+).
    #[arg(long, allow_hyphen_values = true)]
    exponents: Option<String>,
    #[arg(long = "N", default_value_t = 1)]
    n: u64,
    #[arg(long, default_value_t = 10)]
    max_k: u64,
    #[arg(long, default_value_t = 2)]
    max_mu_coeff: u64,
    /// Use all of [(kN+1)Lambda]^+|_a as exponents along the line.
    #[arg(long)]
    worst_case: bool,
}

fn run(cli: Cli) -> Result<Vec<Report>, CliError> {
    let ctx = commands::Context { catalog: cli.catalog, cap: cli.cap };
    match cli.command {
        Command::Catalog { filter, export } => Ok(vec![commands::catalog(&ctx, filter.as_deref(), export.as_deref())?]),
        Command::Inspect { form } => Ok(vec![commands::inspect(&ctx, &form)?]),
        Command::Criterion { form } => Ok(vec![commands::criterion(&ctx, &form)?]),
        Command::StrongReg(a) => {
            let input = commands::StrongRegInput::from_cli(
                &ctx,
                &a.form,
                &a.lambda,
                a.fundamental,
                a.exponents.as_deref(),
                cartan_ds::translation::TranslationConfig {
                    n: a.n,
                    max_k: a.max_k,
                    max_mu_coeff: a.max_mu_coeff,
                    worst_case_exponents: a.worst_case,
                    cap: cli.cap,
                },
            )?;
            Ok(vec![commands::strong_reg(&ctx, &input)?])
        }
        Command::Verify { suite } => Ok(vec![commands::verify(&ctx, &suite)?]),
        Command::Replay { file } => commands::replay(&ctx, &file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(reports) => {
            let mut out = std::io::stdout().lock();
            for r in &reports {
                match report::print(&mut out, r, json) {
                    Ok(()) => {}
                    // the reader went away; nothing left to do
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => break,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(error::EXIT_USAGE);
                    }
                }
            }
            ExitCode::from(reports.iter().map(Report::exit_code).max().unwrap_or(0))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
