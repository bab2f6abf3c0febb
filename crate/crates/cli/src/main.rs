use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use pisub::permcore::set_element_cap;
use pisub::scenarios::{emit_reports, exit_code, list_scenarios, run_scenarios, Format, RunConfig};

#[derive(Parser)]
#[command(name = "pisub", version, about = "Verify pi-maximality claims on explicit finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run scenarios and print their reports.
    Verify(VerifyArgs),
    /// Print the scenario registry.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Scenario to run; repeatable. Defaults to all.
    #[arg(long = "scenario", value_name = "NAME")]
    scenarios: Vec<String>,
    /// Run every registered scenario.
    #[arg(long, conflicts_with = "scenarios")]
    all: bool,
    /// Include the exhaustive automorphism count.
    #[arg(long)]
    deep: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Wall-clock budget for the whole run.
    #[arg(long, value_name = "N")]
    max_seconds: Option<u64>,
    /// Largest group whose elements may be listed.
    #[arg(long, value_name = "N")]
    element_cap: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn verify(args: VerifyArgs) -> ExitCode {
    if let Some(cap) = args.element_cap {
        set_element_cap(cap);
    }
    let names: Vec<String> = if args.all || args.scenarios.is_empty() {
        list_scenarios().iter().map(|s| s.name.to_string()).collect()
    } else {
        args.scenarios
    };
    let config = RunConfig {
        deep: args.deep,
        deadline: args.max_seconds.map(|s| Instant::now() + Duration::from_secs(s)),
    };
    let reports = run_scenarios(&names, &config);
    let format = match args.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    let out = emit_reports(&reports, format);
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, out) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(exit_code(&reports) as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => verify(args),
        Command::List => {
            for s in list_scenarios() {
                let deep = if s.deep { " [deep]" } else { "" };
                println!("{}{deep}\t{}", s.name, s.description);
            }
            ExitCode::SUCCESS
        }
    }
}
