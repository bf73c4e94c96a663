mod commands;
mod document;
mod error;
mod job;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use job::{Cli, JobSpec};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, flags) = cli.command.parts();
    let result = JobSpec::resolve(kind, flags).and_then(|job| commands::run(&job));
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
