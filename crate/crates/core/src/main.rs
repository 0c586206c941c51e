use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = hgx::cli::run_command(std::env::args());
    print!("{output}");
    ExitCode::from(code as u8)
}
