use std::process::ExitCode;

use ucf_cli::Status;

fn main() -> ExitCode {
    let result = ucf_cli::run(std::env::args_os());
    let text = result.output();
    if result.status == Status::Error && !result.json {
        eprintln!("{}", text.trim_end());
    } else {
        println!("{}", text.trim_end());
    }
    ExitCode::from(result.status.exit_code() as u8)
}
