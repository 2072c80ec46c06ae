mod args;
mod commands;
mod document;
mod error;
mod space;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use confcohom::Limits;

use args::{Cli, Command, Format};
use document::Document;
use error::CliError;

fn run(cli: &Cli) -> Result<Document, CliError> {
    let limits = Limits::from_env()?;
    match &cli.command {
        Command::Poincare { space, target, m, l } => {
            commands::poincare(&space::load(space)?, *target, *m, *l, &limits)
        }
        Command::Character {
            space,
            m,
            cycle_type,
            series,
            l,
        } => commands::character(&space::load(space)?, *m, cycle_type, *series, *l, &limits),
        Command::Universal { l, m, closed } => commands::universal(*l, *m, *closed),
        Command::Quotient { space, m, generators } => {
            commands::quotient(&space::load(space)?, *m, generators, &limits)
        }
        Command::Stability {
            space,
            i,
            a,
            range,
            window,
        } => commands::stability(&space::load(space)?, *i, *a, range, *window, &limits),
        Command::Bf { space, i, range } => commands::bf(&space::load(space)?, *i, range, &limits),
        Command::Selftest => commands::selftest(&limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(doc) => {
            let text = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&doc.to_json()).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Plain => document::render_plain(&doc),
                Format::Latex => document::render_latex(&doc),
            };
            print!("{text}");
            if doc.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
