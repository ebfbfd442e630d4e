use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(squeeze_net::cli::main_with_args(std::env::args_os()) as u8)
}
