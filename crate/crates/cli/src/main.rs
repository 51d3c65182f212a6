use std::io::Write;
use std::process::ExitCode;

use jldim_cli::{parse_request, render, run, Status, EXIT_USAGE};

fn main() -> ExitCode {
    let request = match parse_request(std::env::args_os()) {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let response = run(&request);
    if let (Status::Error, Some(err)) = (response.status, &response.error) {
        eprintln!("error: {}: {}", err.code, err.message);
    }
    for d in response.diagnostics.iter().filter(|d| d.status == jldim_cli::CheckStatus::Fail) {
        eprintln!("check failed: {} {}", d.name, d.detail);
    }
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(render(&response).as_bytes());
    let _ = stdout.flush();
    ExitCode::from(response.exit_code() as u8)
}
