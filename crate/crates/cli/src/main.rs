use std::io::Write;
use std::process::ExitCode;

use uqsl2_cli::commands::invoke;

fn main() -> ExitCode {
    let run = invoke(std::env::args_os());
    let ok = std::io::stdout().lock().write_all(run.stdout.as_bytes()).is_ok();
    eprint!("{}", run.stderr);
    if !ok {
        return ExitCode::from(2);
    }
    ExitCode::from(u8::try_from(run.code).unwrap_or(2))
}
