use std::io::Write;
use std::process::ExitCode;

use hv::table::Style;

fn main() -> ExitCode {
    let out = hv::run_args(std::env::args_os(), Style::detect());
    // A closed pipe is not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code)
}
