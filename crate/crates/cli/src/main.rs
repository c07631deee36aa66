mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hecke_core::{FieldKind, Fp, RatFunc, Rational};

use args::Cli;
use commands::{run, CliError, Output, USAGE};

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("HECKE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("HECKE_THREADS={value:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Compute { operation: "startup", message: e.to_string() })
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    configure_threads()?;
    let kind: FieldKind = cli.global.field.parse().map_err(|e| CliError::Usage(format!("--field: {e}")))?;
    match kind {
        FieldKind::Rational => run(&cli.global, &cli.command, Rational::from_integer(1.into())),
        FieldKind::Prime(p) => {
            let one = Fp::new(1, p).map_err(|e| CliError::Usage(format!("--field: {e}")))?;
            run(&cli.global, &cli.command, one)
        }
        FieldKind::RationalFunction => run(&cli.global, &cli.command, RatFunc::one()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if cli.global.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
