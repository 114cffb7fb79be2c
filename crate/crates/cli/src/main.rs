use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qgenocchi_cli::{output_path, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qgenocchi: {e}");
            return ExitCode::from(e.status());
        }
    };
    let written = match output_path(&cli) {
        Some(path) => std::fs::write(path, &report.document),
        None => std::io::stdout().write_all(report.document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("qgenocchi: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if let Some(msg) = &report.message {
        eprintln!("qgenocchi: {msg}");
    }
    ExitCode::from(report.status)
}
