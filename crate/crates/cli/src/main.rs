use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(beckring::run(std::env::args_os()))
}
