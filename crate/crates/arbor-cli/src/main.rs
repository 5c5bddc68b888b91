use clap::error::ErrorKind;
use clap::Parser;

use arbor_cli::args::Cli;
use arbor_cli::run::{run, CliError};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err @ CliError::Usage(_)) => {
            eprintln!("{err}");
            std::process::exit(64);
        }
        Err(err @ CliError::Format(_)) => {
            eprintln!("{err}");
            std::process::exit(65);
        }
    }
}
