use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coadjoint::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = coadjoint::run(&cli);
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("error: {msg}");
    }
    if !outcome.stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(outcome.stdout.as_bytes());
        let _ = out.flush();
    }
    ExitCode::from(outcome.exit_code as u8)
}
