use std::io::{self, Write};

use clap::Parser;

use young::cli::{execute, Cli, CliError};

/// Writes a result to stdout. A downstream reader that closed the pipe
/// early (e.g. `young chartable --n 6 | head`) ends the program with
/// `code` instead of panicking, so a truncated report still signals
/// failure while truncated ordinary output stays a success.
fn emit(text: &str, code: i32) {
    let mut stdout = io::stdout().lock();
    let outcome = writeln!(stdout, "{text}").and_then(|()| stdout.flush());
    if let Err(e) = outcome {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(code);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(1);
    }
}

fn main() {
    match execute(Cli::parse()) {
        Ok(output) => emit(&output, 0),
        // A failed verification is still a result: the report goes to
        // stdout and only the exit code signals the failure.
        Err(CliError::Failed(report)) => {
            emit(&report.to_string(), 1);
            std::process::exit(1);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
