use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = freeprob::cli::run(std::env::args_os());
    let _ = writeln!(std::io::stdout(), "{}", outcome.stdout.trim_end());
    ExitCode::from(outcome.status as u8)
}
