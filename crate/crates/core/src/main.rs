use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ginarl::gin::GinConfig;
use ginarl::io::{parse_ideal_file, run_command, CliError, Command, ErrorKind, OutputFormat, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Subcommand {
    Gin,
    Arl,
    Slp,
    Ssp,
    Hilbert,
    Froberg,
    Mainthm,
    OracleCompare,
}

/// Generic initial ideals and almost-revlex / Lefschetz checks.
///
/// Exit status: 0 success or property holds, 1 property fails, 2 input
/// error, 3 computation failure.
#[derive(Debug, Parser)]
#[command(name = "ginarl", version)]
struct Args {
    command: Subcommand,
    /// Ideal file (`ring: x, y` header, one generator per line).
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    coeff_bound: u32,
    #[arg(long, default_value_t = 8)]
    max_trials: usize,
    #[arg(long, default_value_t = 40)]
    max_degree: u32,
    /// Print the structured JSON document instead of text.
    #[arg(long)]
    json: bool,
    /// Form degrees for `froberg`, comma separated.
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<u32>,
    /// Number of variables for `froberg`.
    #[arg(long)]
    n: Option<usize>,
}

fn run(args: &Args) -> Result<(String, i32), CliError> {
    let config = RunConfig {
        gin: GinConfig {
            seed: args.seed,
            coeff_bound: args.coeff_bound,
            max_trials: args.max_trials,
            max_degree: args.max_degree,
        },
        output_format: if args.json { OutputFormat::Structured } else { OutputFormat::Text },
    };
    let command = match args.command {
        Subcommand::Gin => Command::Gin,
        Subcommand::Arl => Command::Arl,
        Subcommand::Slp => Command::Slp,
        Subcommand::Ssp => Command::Ssp,
        Subcommand::Hilbert => Command::Hilbert,
        Subcommand::Mainthm => Command::Mainthm,
        Subcommand::OracleCompare => Command::OracleCompare,
        Subcommand::Froberg => {
            let nvars = args.n.ok_or_else(|| CliError::new(ErrorKind::Input, "io", "froberg needs --n"))?;
            Command::Froberg { nvars, degrees: args.degrees.clone() }
        }
    };
    let file = match &args.file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::new(ErrorKind::Input, "io", format!("{}: {e}", path.display())))?;
            Some(parse_ideal_file(&text)?)
        }
        None => None,
    };
    let outcome = run_command(&command, file.as_ref(), &config)?;
    Ok((outcome.render(config.output_format), outcome.exit_code()))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
