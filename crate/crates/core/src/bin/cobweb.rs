use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = cobweb_core::cli::run(std::env::args_os());
    let out = result.stdout();
    if !out.is_empty() {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    if let Some(msg) = result.stderr() {
        eprintln!("{msg}");
    }
    ExitCode::from(result.exit_code)
}
