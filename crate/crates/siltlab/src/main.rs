fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(siltlab::cli::main_with_args(std::env::args_os()))
}
