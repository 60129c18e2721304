//! Command-line surface for the coarse-criteria toolkit.
//!
//! Exit codes: 0 when no check fails, 1 on a property failure or a theorem
//! violation, 2 on input errors.

mod commands;
mod costspec;
mod document;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Output;
use report::CliResult;

#[derive(Parser)]
#[command(
    name = "criteria",
    version,
    about = "Analyze coarse decision criteria: categories, discrimination, efficiency, radix economy, and weighted voting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-criterion category counts, discrimination vector and partition
    Analyze {
        /// Criteria document (JSON)
        file: PathBuf,
        /// Print the canonical document form instead of a report
        #[arg(long)]
        canonical: bool,
    },
    /// Check the equivalence: maximal categorization, order-isomorphism
    /// property, product representation
    Theorem {
        /// Criteria document (JSON)
        file: PathBuf,
        /// Also run the exponential all-selector isomorphism check
        #[arg(long)]
        exhaustive_selectors: bool,
    },
    /// Pareto frontier of budgeted discrimination vectors under a cost model
    Frontier {
        /// Cost model spec: table:PATH, power:P, linear:B, ceillog2:A, expr:F
        #[arg(long)]
        cost: String,
        /// Domain size capping the distinction count
        #[arg(long = "domain-size")]
        domain_size: u64,
        /// Costly-category budget (sum of e_i - 1)
        #[arg(long)]
        budget: u64,
        /// Write the frontier as semicolon-separated CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Re-read the emitted CSV and confirm each row by recomputation
        #[arg(long)]
        recheck: bool,
    },
    /// Storage-cost analysis: optimal digit bases for integer ranges
    Radix {
        #[command(subcommand)]
        command: RadixCommand,
    },
    /// Build and check choice functions
    Choice {
        #[command(subcommand)]
        command: ChoiceCommand,
    },
    /// Aggregate criteria by weighted voting
    Vote {
        /// Criteria document (JSON)
        file: PathBuf,
        /// Comma-separated positive weights, one per criterion
        #[arg(long)]
        weights: String,
    },
}

#[derive(Subcommand)]
enum RadixCommand {
    /// Price one storage plan (and optionally encode/decode a value)
    Cost {
        /// Range size: values 1..=n
        #[arg(long)]
        n: u64,
        /// Digit base
        #[arg(long)]
        k: u64,
        /// Cost model spec
        #[arg(long)]
        cost: String,
        /// Encode this value under the plan
        #[arg(long)]
        encode: Option<u64>,
        /// Decode these comma-separated digits under the plan
        #[arg(long)]
        decode: Option<String>,
    },
    /// Minimizing bases for one range
    Optimal {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        cost: String,
        /// Largest base considered
        #[arg(long)]
        kmax: u64,
    },
    /// Cross-check the strict-binary-optimality sweep against the
    /// cost-condition inequality
    CheckBinary {
        #[arg(long)]
        cost: String,
        #[arg(long)]
        kmax: u64,
        /// Sweep ranges 2..=nmax
        #[arg(long)]
        nmax: u64,
    },
    /// Optimal base per range, as CSV rows n;k*;cost
    Sweep {
        #[arg(long)]
        cost: String,
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        recheck: bool,
    },
}

#[derive(Subcommand)]
enum ChoiceCommand {
    /// Emit the maximally discriminating choice function of a criteria set
    Build {
        /// Criteria document (JSON)
        file: PathBuf,
        /// Write the choice document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a choice function against a criteria set: classes, uses,
    /// maximal discrimination, rationalizability, Condorcet consistency
    Check {
        /// Criteria document (JSON)
        #[arg(long)]
        criteria: PathBuf,
        /// Choice document (JSON)
        #[arg(long)]
        choice: PathBuf,
    },
}

fn run(cli: Cli) -> CliResult<Output> {
    match cli.command {
        Command::Analyze { file, canonical } => commands::cmd_analyze(&file, canonical),
        Command::Theorem {
            file,
            exhaustive_selectors,
        } => commands::cmd_theorem(&file, exhaustive_selectors).map(Output::from),
        Command::Frontier {
            cost,
            domain_size,
            budget,
            csv,
            recheck,
        } => commands::cmd_frontier(&cost, domain_size, budget, csv.as_deref(), recheck)
            .map(Output::from),
        Command::Radix { command } => match command {
            RadixCommand::Cost {
                n,
                k,
                cost,
                encode,
                decode,
            } => commands::cmd_radix_cost(n, k, &cost, encode, decode.as_deref())
                .map(Output::from),
            RadixCommand::Optimal { n, cost, kmax } => {
                commands::cmd_radix_optimal(n, &cost, kmax).map(Output::from)
            }
            RadixCommand::CheckBinary { cost, kmax, nmax } => {
                commands::cmd_radix_check_binary(&cost, kmax, nmax).map(Output::from)
            }
            RadixCommand::Sweep {
                cost,
                kmax,
                nmax,
                csv,
                recheck,
            } => commands::cmd_radix_sweep(&cost, kmax, nmax, csv.as_deref(), recheck)
                .map(Output::from),
        },
        Command::Choice { command } => match command {
            ChoiceCommand::Build { file, out } => commands::cmd_choice_build(&file, out.as_deref()),
            ChoiceCommand::Check { criteria, choice } => {
                commands::cmd_choice_check(&criteria, &choice).map(Output::from)
            }
        },
        Command::Vote { file, weights } => commands::cmd_vote(&file, &weights).map(Output::from),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Report(report)) => {
            let (text, code) = report.finish();
            print!("{text}");
            ExitCode::from(code)
        }
        Ok(Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
