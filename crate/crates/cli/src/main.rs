use std::process::ExitCode;

use clap::Parser;
use lss_cli::app::{run, Cli, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            for note in &output.notes {
                eprintln!("{note}");
            }
            match output.status {
                Status::Success => ExitCode::SUCCESS,
                Status::Failure => ExitCode::from(1),
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
