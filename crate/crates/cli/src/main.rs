use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use maxmin::args::Cli;
use maxmin::commands::execute;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let result = execute(&cli, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(stderr, "maxmin: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
