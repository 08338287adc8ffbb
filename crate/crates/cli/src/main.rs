mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sigma_hyper::Error;

use args::{Cli, Format};
use commands::InputError;

const EXIT_INPUT: u8 = 1;
const EXIT_REGIME: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InputError>().is_some() {
        return EXIT_INPUT;
    }
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Regime(_) | Error::NoSuchDesign(_) | Error::NoRepresentation { .. }) => EXIT_REGIME,
        Some(Error::BudgetExceeded(_)) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON values serialize"),
                Format::Table => out.table.join("\n"),
            };
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: writing output: {e}");
                    ExitCode::from(EXIT_INPUT)
                }
                _ => ExitCode::from(out.code),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
