use std::process::ExitCode;

use clap::Parser;

use pathpart_cli::{run, Cli, Limits};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Limits::from_env().and_then(|limits| run(cli, &limits, &mut std::io::stdout().lock()));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
