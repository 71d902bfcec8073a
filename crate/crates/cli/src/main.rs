use std::process::ExitCode;

use clap::Parser;
use mirror_integrality_cli::{run, write_output, Cli, JobConfig, EXIT_ERROR};

fn main() -> ExitCode {
    let (command, args) = Cli::parse().command.split();
    let result = JobConfig::from_args(args).and_then(|config| {
        let outcome = run(command, &config)?;
        write_output(&outcome.document, config.out.as_deref())?;
        Ok(outcome.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
