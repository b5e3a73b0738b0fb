use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(omit_sim::cli::run(std::env::args_os()))
}
