use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use recdiv::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = out.flush();
            eprintln!("recdiv: {}", failure.message);
            failure.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
