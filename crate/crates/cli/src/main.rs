use std::process::ExitCode;

use clap::Parser;
use wofz_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("wofz: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
