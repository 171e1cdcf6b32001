use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lderlab::SearchConfig;
use lderlab_cli::report::Report;
use lderlab_cli::{commands, suites, CliError};

#[derive(Parser)]
#[command(name = "lder-lab", version, about = "Leibniz-derivations of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random combinations tried when searching for an invertible element.
    #[arg(long, global = true, default_value_t = 64)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 5)]
    max_order: usize,
    /// Coefficients of random combinations lie in [-B, B].
    #[arg(long, global = true, default_value_t = 5)]
    coefficient_bound: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Varieties, chains, derivations and Leibniz-derivations of one algebra.
    Analyze {
        /// `@name` for a catalog algebra, otherwise a JSON file.
        input: String,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Basis of the Leibniz-derivations of a given order.
    Lder {
        input: String,
        #[arg(long)]
        order: usize,
        /// `left`, `all`, or a bracketing such as `((x x) x)`.
        #[arg(long, default_value = "left")]
        arrangement: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = SearchConfig {
        seed: cli.seed,
        trials: cli.trials,
        coefficient_bound: cli.coefficient_bound,
        max_order: cli.max_order,
    };
    let result: Result<Report, CliError> = match &cli.command {
        Command::Analyze { input } => commands::analyze(input, &config),
        Command::Verify { suite } => suites::verify(suite, &config),
        Command::Lder { input, order, arrangement } => commands::lder(input, *order, arrangement, &config),
    };
    match result {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            print!("{out}");
            if report.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("lder-lab: {e}");
            ExitCode::from(2)
        }
    }
}
