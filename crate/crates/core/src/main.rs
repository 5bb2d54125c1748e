fn main() -> std::process::ExitCode {
    permcluster::cli::run(std::env::args_os())
}
