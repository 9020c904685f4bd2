use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = treecert::cli::run(std::env::args_os());
    let bytes = outcome.output.as_bytes();
    let _ = if outcome.report.is_none() && outcome.code != 0 {
        std::io::stderr().lock().write_all(bytes)
    } else {
        std::io::stdout().lock().write_all(bytes)
    };
    ExitCode::from(outcome.code as u8)
}
