fn main() -> std::process::ExitCode {
    dkp::cli::run(std::env::args_os())
}
