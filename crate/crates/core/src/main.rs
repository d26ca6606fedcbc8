use std::io::Write;
use std::process::ExitCode;

use extpark::cli;

fn main() -> ExitCode {
    if let Err(e) = cli::configure_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(cli::EXIT_INVALID as u8);
    }
    let (code, output) = cli::dispatch(std::env::args_os());
    let written = if code == cli::EXIT_OK || code == cli::EXIT_MISMATCH {
        std::io::stdout().write_all(output.as_bytes())
    } else {
        std::io::stderr().write_all(output.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(cli::EXIT_INVALID as u8);
    }
    ExitCode::from(code as u8)
}
