use std::io::Write;
use std::process::ExitCode;

use torus_bounds::cli::{dispatch, PRECISION_ENV};

fn main() -> ExitCode {
    let env = std::env::var(PRECISION_ENV).ok();
    let out = dispatch(std::env::args_os(), env.as_deref());
    // Broken pipes (e.g. `| head`) are not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
