use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use nakayama_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let code = match run(cli, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
