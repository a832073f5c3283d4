fn main() -> std::process::ExitCode {
    embedlab::cli::run(std::env::args_os())
}
