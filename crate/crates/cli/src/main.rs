use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hipster_core::singularity::DEFAULT_TOL;
use hipster_core::{FamilyId, DEFAULT_ORDER};

mod report;

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "hipstergf", about = "Counts, bounds and growth rates of hipster trees")]
struct Cli {
    /// Series truncation order; also the default `--n`.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Bisection width for singularity brackets.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest size checked by brute force [default: 14 binary, 14 one2, 12 colored].
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hipster counts h_n, optionally checked against brute-force enumeration.
    Count {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        oracle: bool,
    },
    /// Lower bound f_n, exact h_n and upper bound g_n side by side.
    Bounds {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dominant singularities and the growth-rate interval.
    Growth {
        /// binary, one2, colored or all
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Runs every consistency check and reports pass/fail.
    Verify {
        /// Perturbs the binary recurrence constant so the oracle check fails.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Count { family, n, oracle } => {
            let limit = cli.oracle_limit.unwrap_or_else(|| family.default_oracle_limit());
            report::count(*family, n.unwrap_or(cli.order), oracle.then_some(limit))
        }
        Command::Bounds { family, n } => Ok(report::bounds(*family, n.unwrap_or(cli.order))),
        Command::Growth { family } => {
            let families = match family.as_str() {
                "all" => FamilyId::ALL.to_vec(),
                name => vec![name.parse().map_err(|e| CliError::Usage(format!("{e}")))?],
            };
            report::growth(&families, cli.tol, family == "all")
        }
        Command::Verify { inject_fault } => Ok(report::verify(
            cli.order,
            cli.tol,
            cli.oracle_limit,
            *inject_fault,
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = report.render(cli.format);
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(3);
            }
            if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hipstergf: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
