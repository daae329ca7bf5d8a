use std::io::Write;
use std::process::ExitCode;

use weilbsd::cli::{run_command, MAX_DEGREE_VAR};

fn main() -> ExitCode {
    let cap = std::env::var(MAX_DEGREE_VAR).ok();
    let out = run_command(std::env::args_os(), &mut std::io::stdin().lock(), cap.as_deref());
    // Broken pipes on either stream are not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code as u8)
}
